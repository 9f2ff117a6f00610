#include <gtest/gtest.h>

#include "swancalc/error.hpp"
#include "swancalc/exact/cyclotomic.hpp"

using namespace swancalc;
using namespace swancalc::exact;

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient -2.
  const auto& c = cyclotomic_polynomial(105);
  EXPECT_EQ(c.size(), 49u);
  EXPECT_EQ(c[7], -2);
}

TEST(Cyclotomic, RootOfUnitySums) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CyclotomicInt s(p);
    for (std::uint32_t i = 1; i < p; ++i) s = s + CyclotomicInt::zeta(p, i);
    EXPECT_EQ(s, CyclotomicInt::integer(-1));
  }
  EXPECT_EQ(CyclotomicInt::zeta(6, 2), CyclotomicInt::zeta(3, 1));
  EXPECT_EQ(CyclotomicInt::zeta(4, 2), CyclotomicInt::integer(-1));
  EXPECT_EQ(CyclotomicInt::zeta(12, 5) * CyclotomicInt::zeta(12, 7), CyclotomicInt::integer(1));
}

TEST(Cyclotomic, DivisionAndGalois) {
  CyclotomicInt a = 6 * CyclotomicInt::zeta(9, 4) + CyclotomicInt::integer(3);
  EXPECT_EQ(a.divided(3), 2 * CyclotomicInt::zeta(9, 4) + CyclotomicInt::integer(1));
  EXPECT_THROW(a.divided(4), IntegrityError);
  CyclotomicInt z = CyclotomicInt::zeta(5, 1);
  EXPECT_EQ(z.conj() * z, CyclotomicInt::integer(1));
  EXPECT_EQ(z.galois(2), CyclotomicInt::zeta(5, 2));
}

TEST(Teichmuller, ExamplesInF7) {
  auto f = make_field(7, 1);
  EXPECT_EQ(teichmuller_lift(*f, 1), CyclotomicInt::integer(1));
  Elem g = f->generator();
  CyclotomicInt lg = teichmuller_lift(*f, g);
  // Order-6 oracle: the sixth power is 1 and no smaller power is.
  CyclotomicInt acc = CyclotomicInt::integer(1);
  for (int k = 1; k <= 6; ++k) {
    acc = acc * lg;
    if (k < 6) EXPECT_NE(acc, CyclotomicInt::integer(1)) << k;
  }
  EXPECT_EQ(acc, CyclotomicInt::integer(1));
  EXPECT_EQ(lg, CyclotomicInt::zeta(6, 1));
  EXPECT_EQ(teichmuller_lift(*f, f->mul(g, g)), CyclotomicInt::zeta(3, 1));
  EXPECT_THROW(teichmuller_lift(*f, 0), InputError);
}

TEST(Teichmuller, MultiplicativeOnSmallFields) {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 1}, {7, 1}, {2, 4}, {5, 2}, {11, 2}, {3, 4}}) {
    auto f = make_field(p, k);
    ASSERT_LE(f->q(), 121u);
    for (Elem a = 1; a < f->q(); ++a) {
      CyclotomicInt la = teichmuller_lift(*f, a);
      for (Elem b = 1; b < f->q(); ++b) {
        EXPECT_EQ(la * teichmuller_lift(*f, b), teichmuller_lift(*f, f->mul(a, b)));
      }
    }
  }
}
