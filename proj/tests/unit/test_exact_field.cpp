#include <gtest/gtest.h>

#include <random>
#include <set>

#include "swancalc/error.hpp"
#include "swancalc/exact/embedding.hpp"
#include "swancalc/exact/field.hpp"
#include "swancalc/exact/poly.hpp"

using namespace swancalc;
using namespace swancalc::exact;

namespace {

// Order by repeated multiplication, no use of Field::order.
std::uint64_t brute_order(const Field& f, Elem a) {
  Elem x = a;
  std::uint64_t n = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++n;
  }
  return n;
}

}  // namespace

TEST(Field, PrimeFieldF2) {
  auto f = make_field(2, 1);
  EXPECT_EQ(f->q(), 2u);
  EXPECT_EQ(f->add(1, 1), 0u);
  EXPECT_EQ(f->mul(1, 1), 1u);
}

TEST(Field, F9IsDeterministic) {
  auto a = make_field(3, 2);
  auto b = make_field(3, 2);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(a->q(), 9u);
  // x^2 + 1 is the smallest monic irreducible quadratic over F_3.
  EXPECT_EQ(a->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, F125GeneratorHasFullOrder) {
  auto f = make_field(5, 3);
  EXPECT_EQ(f->q(), 125u);
  EXPECT_EQ(brute_order(*f, f->generator()), 124u);
  // No smaller code is primitive.
  for (Elem g = 2; g < f->generator(); ++g) EXPECT_LT(brute_order(*f, g), 124u);
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(make_field(4, 1), InputError);
  EXPECT_THROW(make_field(3, 0), InputError);
  EXPECT_THROW(make_field(3, 13), InputError);
}

TEST(Field, ModulusIsIrreducibleByRootCount) {
  // A degree 2 or 3 polynomial is irreducible iff it has no root.
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 3}}) {
    auto f = make_field(p, k);
    for (Elem a = 0; a < static_cast<Elem>(p); ++a) {
      Elem v = 0, pw = 1;
      for (auto c : f->modulus()) {
        v = (v + c * pw) % p;
        pw = pw * a % p;
      }
      EXPECT_NE(v, 0u) << "root " << a << " for p=" << p << " k=" << k;
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, RandomTriples) {
  auto [p, k] = GetParam();
  auto f = make_field(p, k);
  std::mt19937_64 rng(1234 + p * 100 + k);
  std::uniform_int_distribution<Elem> d(0, f->q() - 1);
  for (int i = 0; i < 1000; ++i) {
    Elem a = d(rng), b = d(rng), c = d(rng);
    EXPECT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
    EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    EXPECT_EQ(f->add(a, f->neg(a)), 0u);
    if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
    EXPECT_EQ(f->pow(f->pth_root(a), p), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::make_pair(2, 1), std::make_pair(2, 8), std::make_pair(3, 5),
                                           std::make_pair(5, 3), std::make_pair(7, 2), std::make_pair(2, 12),
                                           std::make_pair(3, 12)));

TEST(Field, TraceMatchesFrobeniusSum) {
  auto f = make_field(3, 4);
  for (Elem a = 0; a < f->q(); a += 7) {
    Elem s = 0, c = a;
    for (int i = 0; i < 4; ++i) {
      s = f->add(s, c);
      c = f->frobenius(c);
    }
    EXPECT_LT(s, 3u);
    EXPECT_EQ(f->trace(a), s);
  }
}

TEST(Field, TablelessArithmetic) {
  auto big = make_field(7, 8);
  EXPECT_FALSE(big->has_tables());
  EXPECT_EQ(big->order(big->generator()), big->q() - 1);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Elem> d(1, big->q() - 1);
  for (int i = 0; i < 50; ++i) {
    Elem a = d(rng), b = d(rng);
    EXPECT_EQ(big->pow(a, static_cast<std::int64_t>(big->q() - 1)), 1u);
    EXPECT_EQ(big->mul(a, big->inv(a)), 1u);
    EXPECT_EQ(big->div(big->mul(a, b), b), a);
  }
}

TEST(Embedding, IsRingHomomorphism) {
  auto small = make_field(2, 3);
  auto large = make_field(2, 6);
  auto e = canonical_embedding(small.get(), large.get());
  for (Elem a = 0; a < small->q(); ++a) {
    for (Elem b = 0; b < small->q(); ++b) {
      EXPECT_EQ(e(small->add(a, b)), large->add(e(a), e(b)));
      EXPECT_EQ(e(small->mul(a, b)), large->mul(e(a), e(b)));
    }
  }
  std::set<Elem> image;
  for (Elem a = 0; a < small->q(); ++a) image.insert(e(a));
  EXPECT_EQ(image.size(), small->q());
}

TEST(Poly, FactorAndRoots) {
  auto f = make_field(7, 1);
  const Field* F = f.get();
  // (x-1)^2 (x-3) (x^2+1), x^2+1 irreducible mod 7.
  Poly a(F, {F->neg(1), 1});
  Poly b(F, {F->neg(3), 1});
  Poly c(F, {1, 0, 1});
  Poly g = a * a * b * c;
  auto fac = factor(g);
  ASSERT_EQ(fac.size(), 3u);
  // Canonical order compares from the top coefficient: x+4 before x+6.
  EXPECT_EQ(fac[0].first, b);
  EXPECT_EQ(fac[1].first, a);
  EXPECT_EQ(fac[1].second, 2);
  EXPECT_EQ(fac[2].first, c);
  EXPECT_EQ(roots(g), (std::vector<Elem>{1, 3}));
}

TEST(Poly, SquarefreeInCharacteristicP) {
  auto f = make_field(3, 2);
  const Field* F = f.get();
  // y^9 - y^4 = y^4 (y^5 - 1) over F_9: multiplicities sum to the degree.
  Poly y9 = Poly::monomial(F, 1, 9) - Poly::monomial(F, 1, 4);
  int total = 0;
  for (auto& [g, m] : squarefree_decomposition(y9)) total += g.degree() * m;
  EXPECT_EQ(total, 9);
  // x^3 - 1 = (x - 1)^3 in characteristic 3.
  auto s = squarefree_decomposition(Poly::monomial(F, 1, 3) - Poly::constant(F, 1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].second, 3);
  EXPECT_EQ(s[0].first.degree(), 1);
}

TEST(Poly, RootsInLargeField) {
  auto f = make_field(2, 10);
  const Field* F = f.get();
  // F_4 sits inside F_{2^10}, so x^4 - x splits.
  auto r = roots(Poly::monomial(F, 1, 4) - Poly::x(F));
  EXPECT_EQ(r.size(), 4u);
  for (auto x : r) EXPECT_EQ(F->pow(x, 4), x);
}
