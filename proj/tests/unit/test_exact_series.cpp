#include <gtest/gtest.h>

#include <random>

#include "swancalc/error.hpp"
#include "swancalc/exact/series.hpp"

using namespace swancalc;
using namespace swancalc::exact;

namespace {

Series random_series(const Field* f, std::mt19937_64& rng, std::int64_t val, int len, std::int64_t rel) {
  std::uniform_int_distribution<Elem> d(0, f->q() - 1);
  std::vector<Elem> c(len);
  for (auto& x : c) x = d(rng);
  if (c[0] == 0) c[0] = 1;
  return Series(f, val, c, val + rel);
}

}  // namespace

TEST(Series, AddTwoT) {
  auto f3 = make_field(3, 1);
  Series t = Series::t(f3.get());
  Series s = t + t;
  EXPECT_TRUE(s.is_exact());
  EXPECT_EQ(s.ord(), 1);
  EXPECT_EQ(s.lead(), 2u);
  auto f2 = make_field(2, 1);
  Series t2 = Series::t(f2.get());
  EXPECT_TRUE((t2 + t2).is_zero());
}

TEST(Series, GeometricSeries) {
  auto f = make_field(5, 1);
  Series one_minus_t(f.get(), 0, {1, f->neg(1)});
  Series inv = Series::constant(f.get(), 1).div(one_minus_t, 32);
  EXPECT_EQ(inv.prec(), 32);
  for (int i = 0; i < 32; ++i) EXPECT_EQ(inv.coeff(i), 1u);
  EXPECT_THROW(inv.coeff(32), PrecisionError);
}

TEST(Series, ComposeExact) {
  auto f = make_field(7, 1);
  Series a(f.get(), 1, {1, 1});  // t + t^2
  Series t3 = Series::monomial(f.get(), 1, 3);
  Series c = a.compose(t3, 64);
  EXPECT_TRUE(c.is_exact());
  EXPECT_TRUE(c.agrees(Series(f.get(), 3, {1, 0, 0, 1})));
}

TEST(Series, ComposeRejectsNonPositiveValuation) {
  auto f = make_field(7, 1);
  Series a(f.get(), 1, {1, 1});
  EXPECT_THROW(a.compose(Series::constant(f.get(), 1), 16), InputError);
  EXPECT_THROW(Series::constant(f.get(), 1).div(Series::zero(f.get()), 16), InputError);
}

TEST(Series, MulDivRoundTrip) {
  std::mt19937_64 rng(99);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 1}, {2, 4}}) {
    auto f = make_field(p, k);
    for (int i = 0; i < 30; ++i) {
      Series a = random_series(f.get(), rng, static_cast<int>(rng() % 7) - 3, 20, 20);
      Series b = random_series(f.get(), rng, static_cast<int>(rng() % 5) - 2, 20, 20);
      Series r = (a * b).div(b, 64);
      EXPECT_TRUE(r.agrees(a));
      EXPECT_EQ(r.ord(), a.ord());
      EXPECT_EQ(r.rel_prec(), 20);
    }
  }
}

TEST(Series, PrecisionIsNeverOverstated) {
  auto f = make_field(3, 1);
  // (t + O(t^5)) - (t + t^3 + O(t^4)) = O(t^4) minus known t^3 term.
  Series a(f.get(), 1, {1}, 5);
  Series b(f.get(), 1, {1, 0, 1}, 4);
  Series d = a - b;
  EXPECT_EQ(d.prec(), 4);
  EXPECT_EQ(d.ord(), 3);
  Series z = a - a;
  EXPECT_TRUE(z.is_unknown_zero());
  EXPECT_THROW(z.ord(), PrecisionError);
}

TEST(Series, UnitRootAndSolve) {
  auto f = make_field(5, 2);
  std::mt19937_64 rng(3);
  Series u = random_series(f.get(), rng, 0, 30, 30);
  u = u.scaled(f->inv(u.lead()));
  for (int m : {2, 3, -4, 7}) {
    Series r = u.unit_root(m, 30);
    EXPECT_TRUE(r.pow(m, 30).agrees(u)) << m;
    EXPECT_EQ(r.lead(), 1u);
  }
  // x * (1 + x) = t^2 solved for x.
  Series phi(f.get(), 1, {1, 1});
  Series rhs = Series::monomial(f.get(), 1, 2).with_prec(40);
  Series x = solve_series(phi, rhs, 40);
  EXPECT_EQ(x.ord(), 2);
  EXPECT_TRUE(phi.compose(x, 40).agrees(rhs));
}

TEST(Series, DerivativeKillsPthPowers) {
  auto f = make_field(3, 1);
  Series s(f.get(), -3, {1, 0, 0, 1, 1});  // t^-3 + 1 + t
  Series d = s.derivative();
  EXPECT_TRUE(d.agrees(Series::constant(f.get(), 1)));
}
