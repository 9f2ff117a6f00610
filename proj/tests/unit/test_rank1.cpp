#include <gtest/gtest.h>

#include <random>

#include "swancalc/error.hpp"
#include "swancalc/rank1/fibration.hpp"
#include "swancalc/rank1/kato.hpp"

using namespace swancalc;
using namespace swancalc::rank1;
using exact::make_field;

namespace {

// P^2 with boundary one line L = {t = 0}; chart (s, t), f given.
RankOneData on_p2(std::uint32_t p, Terms f) {
  auto K = make_field(p, 1);
  RankOneData d{K, chow::SurfaceModel::p2(), {{{1}}, {"L"}}, {}};
  Chart c;
  c.name = "A";
  c.f = std::move(f);
  c.y_component = 0;
  d.charts.push_back(std::move(c));
  return d;
}

// c s^k / t^n
Terms st(int k, int n, Elem c = 1) { return {{{k, -n}, c}}; }

std::vector<Elem> coeffs(const exact::Poly& g) { return g.coeffs(); }

Terms pth_power_minus(const exact::Field* K, const Terms& g) {
  Terms r;
  const int p = static_cast<int>(K->p());
  for (auto& [e, c] : g) {
    r[{e.first * p, e.second * p}] = K->add(r[{e.first * p, e.second * p}], K->pow(c, p));
    r[e] = K->sub(r[e], c);
  }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Terms sum(const exact::Field* K, Terms a, const Terms& b) {
  for (auto& [e, c] : b) a[e] = K->add(a[e], c);
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

curve::CoverLayer as_layer(int p, std::vector<Elem> num, std::vector<Elem> den = {1}) {
  return {local::LayerKind::ArtinSchreier, p, {std::move(num), std::move(den)}, {}};
}

const curve::BoundaryPoint kInf{true, 0};

curve::Cover as_cover(std::uint32_t p, int n) {
  std::vector<Elem> num(static_cast<std::size_t>(n) + 1, 0);
  num.back() = 1;
  return curve::Cover(make_field(p, 1), {as_layer(static_cast<int>(p), num)}, {kInf});
}

}  // namespace

TEST(Rank1, SwanDivisor) {
  EXPECT_EQ(swan_divisor(on_p2(5, {{{1, 0}, 3}})), (chow::Vec{0}));
  EXPECT_EQ(swan_divisor(on_p2(5, st(0, 3))), (chow::Vec{3}));
  // t^-3 + t^-6: the p-th power part goes away
  EXPECT_EQ(swan_divisor(on_p2(3, {{{0, -6}, 1}, {{0, -2}, 1}})), (chow::Vec{2}));
  // s^3 / t^3 = (s/t)^3 reduces to s/t
  EXPECT_EQ(swan_divisor(on_p2(3, st(3, 3))), (chow::Vec{1}));
  // s / t^3 cannot be reduced: sw = 3 with vanishing residue part
  auto fierce = on_p2(3, st(1, 3));
  EXPECT_EQ(swan_divisor(fierce), (chow::Vec{3}));
  EXPECT_TRUE(cleanness(fierce, 0).residue_vanishes);
}

TEST(Rank1, SwanDivisorInvariance) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto K = make_field(p, 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<int> n_of(1, 7), c_of(0, static_cast<int>(p) - 1);
      int n = n_of(rng);
      while (n % static_cast<int>(p) == 0) n = n_of(rng);
      Terms f{{{0, -n}, 1}, {{1, -1}, K->from_int(c_of(rng))}};
      Terms g;
      for (int i = 0; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
          Elem c = K->from_int(c_of(rng));
          if (c != 0) g[{i, j}] = c;
        }
      }
      auto base = swan_divisor(on_p2(p, f));
      auto moved = swan_divisor(on_p2(p, sum(K.get(), f, pth_power_minus(K.get(), g))));
      EXPECT_EQ(base, moved) << "p=" << p << " n=" << n;
      EXPECT_EQ(base, (chow::Vec{n}));
    }
  }
}

TEST(Rank1, RefinedSwan) {
  const int n = 2;
  auto K = make_field(5, 1);
  const Elem mn = K->neg(K->from_int(n));
  auto a = refined_swan(on_p2(5, st(0, n)), 0);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].sw, n);
  EXPECT_EQ(coeffs(a[0].residue), (std::vector<Elem>{mn}));
  EXPECT_TRUE(a[0].transverse.is_zero());
  auto b = refined_swan(on_p2(5, st(1, n)), 0);
  EXPECT_EQ(coeffs(b[0].residue), (std::vector<Elem>{0, mn}));
  EXPECT_EQ(coeffs(b[0].transverse), (std::vector<Elem>{1}));
  auto c = refined_swan(on_p2(5, st(2, n)), 0);
  EXPECT_EQ(coeffs(c[0].residue), (std::vector<Elem>{0, 0, mn}));
  EXPECT_EQ(coeffs(c[0].transverse), (std::vector<Elem>{0, 2}));
  EXPECT_THROW(refined_swan(on_p2(5, {{{1, 0}, 1}}), 0), InputError);
}

TEST(Rank1, Cleanness) {
  auto a = cleanness(on_p2(5, st(0, 2)), 0);
  EXPECT_TRUE(a.clean);
  EXPECT_TRUE(a.s_clean);
  auto b = cleanness(on_p2(5, st(1, 2)), 0);
  EXPECT_TRUE(b.clean);
  EXPECT_FALSE(b.s_clean);
  ASSERT_EQ(b.not_s_clean.size(), 1u);
  EXPECT_EQ(b.not_s_clean[0].coord, 0u);
  EXPECT_EQ(b.not_s_clean[0].label, "A(0,0)");
  auto c = cleanness(on_p2(5, st(2, 2)), 0);
  EXPECT_FALSE(c.clean);
  ASSERT_EQ(c.not_clean.size(), 1u);
  EXPECT_EQ(c.not_clean[0].coord, 0u);
  // (s^2 - 2) / t over F_5: the residue vanishes at a point of degree 2
  auto d = cleanness(on_p2(5, {{{2, -1}, 1}, {{0, -1}, 3}}), 0);
  EXPECT_TRUE(d.clean);
  ASSERT_EQ(d.not_s_clean.size(), 1u);
  EXPECT_EQ(d.not_s_clean[0].degree, 2);
  EXPECT_THROW(blowup_clean(on_p2(5, {{{2, -1}, 1}, {{0, -1}, 3}})), UnsupportedError);
}

TEST(Rank1, StandardForm) {
  auto d = on_p2(5, {{{-1, -1}, 1}});
  EXPECT_THROW(swan_divisor(d), InputError);
  EXPECT_THROW(kato_c_class(on_p2(5, st(2, 2))), InputError);
  // two charts disagreeing about the same component
  auto e = on_p2(5, st(0, 2));
  Chart c2 = e.charts[0];
  c2.name = "B";
  c2.f = st(0, 3);
  e.charts.push_back(c2);
  EXPECT_THROW(swan_divisor(e), IntegrityError);
}

TEST(Rank1, BlowupCleanIdentity) {
  auto r = blowup_clean(on_p2(5, st(0, 3)));
  EXPECT_EQ(r.rounds, 0);
  EXPECT_TRUE(r.transcript.empty());
  EXPECT_EQ(r.data.model.rank(), 1u);
}

TEST(Rank1, BlowupCleanOneRound) {
  // n = 1 mod p: the exceptional pole n - 1 is divisible by p
  for (auto [p, n] : {std::pair{3u, 4}, std::pair{2u, 3}, std::pair{5u, 6}, std::pair{2u, 1}}) {
    auto r = blowup_clean(on_p2(p, st(1, n)));
    EXPECT_EQ(r.rounds, 1);
    ASSERT_EQ(r.transcript.size(), 1u);
    EXPECT_EQ(r.transcript[0].exceptional_sw, n - 1);
    EXPECT_EQ(r.transcript[0].through, (std::vector<int>{0}));
    EXPECT_EQ(swan_divisor(r.data), (chow::Vec{n, n - 1}));
    EXPECT_EQ(r.data.boundary.components[0], (chow::Vec{1, -1}));
    for (int comp = 0; comp < 2; ++comp) EXPECT_TRUE(cleanness(r.data, comp).s_clean);
  }
}

TEST(Rank1, BlowupCleanSeveralRounds) {
  // s / t^n needs n mod p rounds
  auto r = blowup_clean(on_p2(3, st(1, 2)));
  EXPECT_EQ(r.rounds, 2);
  ASSERT_EQ(r.transcript.size(), 2u);
  EXPECT_EQ(r.transcript[0].exceptional_sw, 1);
  EXPECT_EQ(r.transcript[1].exceptional_sw, 0);
  EXPECT_EQ(r.transcript[1].through, (std::vector<int>{1}));
  EXPECT_EQ(swan_divisor(r.data), (chow::Vec{2, 1, 0}));
  auto r5 = blowup_clean(on_p2(5, st(1, 3)));
  EXPECT_EQ(r5.rounds, 3);
  EXPECT_THROW(blowup_clean(on_p2(5, st(1, 4))), PrecisionError);
  EXPECT_EQ(blowup_clean(on_p2(5, st(1, 4)), 4).rounds, 4);
}

TEST(Rank1, BlowupCleanTwoPoints) {
  // s (s - 1) / t^4 over F_3: bad at s = 0 and s = 1
  auto K = make_field(3, 1);
  Terms f{{{2, -4}, 1}, {{1, -4}, K->neg(1)}};
  auto r = blowup_clean(on_p2(3, f));
  EXPECT_EQ(r.rounds, 1);
  ASSERT_EQ(r.transcript.size(), 2u);
  EXPECT_EQ(r.transcript[0].center.label, "A(0,0)");
  EXPECT_EQ(r.transcript[1].center.label, "A(1,0)");
  EXPECT_EQ(swan_divisor(r.data), (chow::Vec{4, 3, 3}));
  EXPECT_EQ(r.data.boundary.components[0], (chow::Vec{1, -1, -1}));
  // same sheaf written with the other factor order gives the same result
  Terms g{{{1, -4}, K->neg(1)}, {{2, -4}, 1}};
  auto r2 = blowup_clean(on_p2(3, g));
  EXPECT_EQ(swan_divisor(r2.data), swan_divisor(r.data));
  EXPECT_EQ(kato_c_class(r2.data).degree.value, kato_c_class(r.data).degree.value);
}

TEST(Rank1, KatoClass) {
  for (int n : {1, 2, 4, 5}) {
    auto d = on_p2(3, st(0, n));
    auto k = kato_c_class(d);
    EXPECT_EQ(k.degree.value, n * (2 - n));
    EXPECT_TRUE(k.degree.equal);
    EXPECT_EQ(k.per_component, (std::vector<std::int64_t>{n * (2 - n)}));
  }
  EXPECT_EQ(kato_c_class(on_p2(3, {{{1, 1}, 1}})).degree.value, 0);
  // invariance under the cleaning blow-ups
  for (auto [p, n] : {std::pair{3u, 4}, std::pair{3u, 2}, std::pair{5u, 3}, std::pair{2u, 3}}) {
    auto d = on_p2(p, st(1, n));
    auto before = kato_c_class(d).degree;
    auto after = kato_c_class(blowup_clean(d).data).degree;
    EXPECT_EQ(before.value, n * (2 - n));
    EXPECT_EQ(after.value, before.value) << p << " " << n;
    EXPECT_TRUE(after.equal);
  }
}

TEST(Rank1, FibrationKatoClass) {
  for (auto [p, n] : {std::pair{2u, 1}, std::pair{2u, 3}, std::pair{3u, 1}, std::pair{3u, 2}, std::pair{5u, 3}}) {
    auto c = as_cover(p, n);
    for (int a = 1; a < static_cast<int>(p); ++a) {
      auto r = theorem_5_check(c, a);
      EXPECT_TRUE(r.equal);
      EXPECT_EQ(r.lhs_degree, 2 * n);
      EXPECT_EQ(r.rhs_degree, 2 * n);
    }
  }
  // poles at 0 and infinity: 1/t + t^2 over F_3
  auto F3 = make_field(3, 1);
  curve::Cover two(F3, {as_layer(3, {1, 0, 0, 1}, {0, 1})}, {curve::BoundaryPoint{false, 0}, kInf});
  auto r = theorem_5_check(two, 1);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, (std::vector<std::int64_t>{2, 4}));
  // tame
  curve::Cover tame(make_field(5, 1), {{local::LayerKind::Kummer, 4, {{0, 1}, {1}}, {}}},
                    {curve::BoundaryPoint{false, 0}, kInf});
  auto t = theorem_5_check(tame, 1);
  EXPECT_TRUE(t.equal);
  EXPECT_EQ(t.rhs_degree, 0);
}

TEST(Rank1, Laumon) {
  for (auto [p, n] : {std::pair{2u, 1}, std::pair{3u, 2}, std::pair{5u, 3}}) {
    auto c = as_cover(p, n);
    auto a = laumon_decomposition(c, 1, Fiber::P1);
    EXPECT_TRUE(a.equal);
    EXPECT_EQ(a.formula, 2 * (1 - n));
    EXPECT_EQ(a.sw, (std::vector<std::int64_t>{n}));
    EXPECT_EQ(a.s_total, 0);
    auto b = laumon_decomposition(c, 1, Fiber::A1);
    EXPECT_TRUE(b.equal);
    EXPECT_EQ(b.formula, 1 - n);
    EXPECT_EQ(b.s_total, -n);
    auto g = laumon_decomposition(c, 1, Fiber::Gm);
    EXPECT_TRUE(g.equal);
    EXPECT_EQ(g.formula, 0);
    EXPECT_EQ(g.sw, (std::vector<std::int64_t>{n, 0, 0}));
  }
  curve::Cover tame(make_field(5, 1), {{local::LayerKind::Kummer, 4, {{0, 1}, {1}}, {}}},
                    {curve::BoundaryPoint{false, 0}, kInf});
  auto t = laumon_decomposition(tame, 2, Fiber::A1);
  EXPECT_TRUE(t.equal);
  EXPECT_EQ(t.formula, 0);
  EXPECT_EQ(t.s_total, 0);
}
