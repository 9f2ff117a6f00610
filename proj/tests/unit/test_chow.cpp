#include <gtest/gtest.h>

#include "swancalc/chow/fixed.hpp"
#include "swancalc/chow/surface.hpp"
#include "swancalc/error.hpp"
#include "swancalc/exact/field.hpp"

using namespace swancalc;
using namespace swancalc::chow;

namespace {

struct Config {
  const char* label;
  SurfaceModel X;
  BoundaryDivisor D;
  std::int64_t chi_complement;  // by hand, from a cell decomposition of X minus D
};

std::vector<Config> configurations() {
  auto P2 = SurfaceModel::p2();
  auto Q = SurfaceModel::p1xp1();
  auto B1 = P2.blow_up("E1");
  auto B2 = B1.blow_up("E2");
  auto B3 = B2.blow_up("E3");
  return {
      {"P2", P2, {}, 3},
      {"P2 minus a line", P2, {{{1}}, {}}, 1},                   // A^2
      {"P2 minus two lines", P2, {{{1}, {1}}, {}}, 0},           // A^1 x G_m
      {"P2 minus a triangle", P2, {{{1}, {1}, {1}}, {}}, 0},     // G_m^2
      {"P2 minus a conic", P2, {{{2}}, {}}, 1},                  // 3 - 2
      {"P1xP1 minus a fiber", Q, {{{1, 0}}, {}}, 2},             // A^1 x P^1
      {"P1xP1 minus two rulings", Q, {{{1, 0}, {0, 1}}, {}}, 1},  // A^2
      {"P1xP1 minus a square", Q, {{{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {}}, 0},
      {"blow-up minus E", B1, {{{0, 1}}, {}}, 2},  // P^2 minus a point
      {"blow-up minus E and a line through the point", B1, {{{0, 1}, {1, -1}}, {}}, 1},
      {"two blow-ups minus E1 and E2", B2, {{{0, 1, 0}, {0, 0, 1}}, {}}, 1},  // P^2 minus two points
      {"hexagon", B3, {{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, -1, -1, 0}, {1, 0, -1, -1}, {1, -1, 0, -1}}, {}}, 0},
      {"C2xP1 minus a fiber", SurfaceModel::curve_times_p1(2), {{{1, 0}}, {}}, -6},  // (C minus pt) x P^1: -3 * 2
  };
}

}  // namespace

TEST(Chow, ModelsAndBlowUps) {
  auto B = SurfaceModel::p2().blow_up("E").blow_up("F");
  EXPECT_EQ(B.pairing()[1][1], -1);
  EXPECT_EQ(B.pairing()[0][1], 0);
  EXPECT_EQ(B.canonical(), (Vec{-3, 1, 1}));
  EXPECT_EQ(B.chi_top(), 5);
  EXPECT_EQ(B.signature(), (std::pair<int, int>{1, 2}));
  EXPECT_EQ(SurfaceModel::p1xp1().signature(), (std::pair<int, int>{1, 1}));
  EXPECT_THROW(SurfaceModel("bad", 2, {"a", "b"}, {{1, 0}, {0, 1}}, {0, 0}, 4), InputError);
  EXPECT_THROW(SurfaceModel("asym", 2, {"a", "b"}, {{0, 1}, {2, 0}}, {0, 0}, 4), InputError);
}

TEST(Chow, ChernLogExamples) {
  auto P2 = SurfaceModel::p2();
  auto c = chern_log(P2, {});
  EXPECT_EQ(c.c1, (Vec{-3}));
  EXPECT_EQ(c.c2, 3);
  c = chern_log(P2, {{{1}}, {}});
  EXPECT_EQ(c.c1, (Vec{-2}));
  EXPECT_EQ(c.c2, 1);
  auto Q = SurfaceModel::p1xp1();
  c = chern_log(Q, {{{1, 0}}, {}});
  EXPECT_EQ(c.c1, (Vec{-1, -2}));
  EXPECT_EQ(c.c2, 2);
  EXPECT_EQ(chern_log(P2, {{{3}}, {}}).c2, 3);  // complement of a smooth cubic: 3 - 0
  EXPECT_THROW(chern_log(Q, {{{2, -1}}, {}}), InputError);  // adjunction gives negative genus
  auto B = P2.blow_up("E");
  EXPECT_THROW(chern_log(B, {{{0, 1}, {0, -1}}, {}}), InputError);
  EXPECT_THROW(chern_log(P2, {{{-1}}, {}}), InputError);
}

TEST(Chow, EulerCharacteristicOfComplements) {
  for (auto& cfg : configurations()) {
    // c_2 of a rank 2 bundle and its dual agree
    EXPECT_EQ(chern_log(cfg.X, cfg.D).c2, cfg.chi_complement) << cfg.label;
  }
}

TEST(Chow, KatoClassDegree) {
  auto Q = SurfaceModel::p1xp1();
  BoundaryDivisor D{{{1, 0}}, {}};
  for (int n = 0; n <= 4; ++n) {
    auto k = kato_class_degree(Q, D, {n});
    EXPECT_EQ(k.value, 2 * n);
    EXPECT_TRUE(k.equal);
  }
  auto P2 = SurfaceModel::p2();
  for (int n = 0; n <= 4; ++n) {
    auto k = kato_class_degree(P2, {{{1}}, {}}, {n});
    EXPECT_EQ(k.value, (2 - n) * n);
    EXPECT_TRUE(k.equal);
  }
  EXPECT_THROW(kato_class_degree(P2, {{{1}}, {}}, {-1}), InputError);
  // bilinear expansion: value(a + b) = value(a) + value(b) - 2 a.b
  BoundaryDivisor two{{{1, 0}, {0, 1}}, {}};
  auto a = kato_class_degree(Q, two, {2, 0}).value;
  auto b = kato_class_degree(Q, two, {0, 3}).value;
  auto ab = kato_class_degree(Q, two, {2, 3}).value;
  EXPECT_EQ(ab, a + b - 2 * 6);
  auto curve = kato_class_degree(SurfaceModel::p1(), {{{1}}, {}}, {3});
  EXPECT_EQ(curve.value, 3);
  EXPECT_TRUE(curve.equal);
}

TEST(Chow, DivisorialLefschetz) {
  auto P1 = SurfaceModel::p1();
  auto t = log_lefschetz_divisorial(P1, {{{1}}, {}}, {1});
  EXPECT_EQ(t.value, 1);
  EXPECT_TRUE(t.equal);
  auto Q = SurfaceModel::p1xp1();
  for (int n = 0; n <= 4; ++n) {
    auto r = log_lefschetz_divisorial(Q, {{{1, 0}}, {}}, {n});
    EXPECT_EQ(r.value, 2 * n);
    EXPECT_TRUE(r.equal);
  }
  auto B = SurfaceModel::p2().blow_up("E");
  auto r = log_lefschetz_divisorial(B, {{{0, 1}, {1, -1}}, {}}, {2, 1});
  EXPECT_TRUE(r.equal);
  EXPECT_THROW(log_lefschetz_divisorial(Q, {{{1, 0}}, {}}, {-2}), InputError);
}

TEST(Chow, LocalizedDifferent) {
  auto Q = SurfaceModel::p1xp1();
  BoundaryDivisor B{{{1, 0}}, {}};
  EXPECT_EQ(localized_chern_different_degree(Q, B, Q, B, {{{1, 0}, {0, 1}}, 1}), 0);
  // (y^p - y = t^n) x id: genus (p-1)(n-1)/2, fiber over infinity pulls back to p f
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      if (n % p == 0) continue;
      auto Y = SurfaceModel::curve_times_p1((p - 1) * (n - 1) / 2);
      BoundaryDivisor D{{{1, 0}}, {}};
      EXPECT_EQ(localized_chern_different_degree(Y, D, Q, B, {{{p, 0}, {0, 1}}, p}), 2 * n * (p - 1));
      // the curve itself
      auto C = SurfaceModel("C", 1, {"pt"}, {{0}}, {(p - 1) * (n - 1) - 2}, 2 - (p - 1) * (n - 1));
      EXPECT_EQ(localized_chern_different_degree(C, {{{1}}, {}}, SurfaceModel::p1(), {{{1}}, {}}, {{{p}}, p}), n * (p - 1));
    }
  }
  // y^e = t times id: tame
  BoundaryDivisor two{{{1, 0}, {1, 0}}, {}};
  EXPECT_EQ(localized_chern_different_degree(Q, two, Q, two, {{{3, 0}, {0, 1}}, 3}), 0);
  EXPECT_THROW(localized_chern_different_degree(Q, B, Q, B, {{{2, 0}, {0, 2}}, 2}), InputError);
}

TEST(Chow, IsolatedFixedPoints) {
  auto F5 = exact::make_field(5, 1);
  BiPoly sx{F5.get(), {{{1, 0}, 2}}}, sy{F5.get(), {{{0, 1}, 2}}};
  auto r = isolated_fixed_report(sx, sy, 16);
  EXPECT_EQ(r.length, 1);
  EXPECT_EQ(r.predicted, 0);
  EXPECT_TRUE(r.direct_available);
  EXPECT_TRUE(r.consistent);
  // (x + y^2, y): fixed ideal (y^2)
  BiPoly nx{F5.get(), {{{1, 0}, 1}, {{0, 2}, 1}}}, ny{F5.get(), {{{0, 1}, 1}}};
  EXPECT_THROW(isolated_fixed_report(nx, ny, 16), InputError);
  // (x + x^2, y + y^2): fixed ideal (x^2, y^2)
  BiPoly qx{F5.get(), {{{1, 0}, 1}, {{2, 0}, 1}}}, qy{F5.get(), {{{0, 1}, 1}, {{0, 2}, 1}}};
  r = isolated_fixed_report(qx, qy, 6);
  EXPECT_EQ(r.length, 4);
  EXPECT_EQ(r.predicted, 3);
  EXPECT_EQ(r.diagonal_term, 2);
  EXPECT_EQ(r.segre_term, -1);
  EXPECT_TRUE(r.consistent);
  BiPoly lx{F5.get(), {{{1, 0}, 1}, {{0, 1}, 1}}};
  EXPECT_THROW(isolated_fixed_report(lx, qy, 6), UnsupportedError);
}

// Monomial ideals: the colength is the number of standard monomials.
TEST(Chow, MonomialColengths) {
  auto F3 = exact::make_field(3, 1);
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      BiPoly f{F3.get(), {{{a, 0}, 1}}}, g{F3.get(), {{{0, b}, 1}}};
      EXPECT_EQ(local_colength(f, g, 16), a * b);
    }
  }
  // (xy, x^2 + y^3): I(x, y^3) + I(y, x^2) = 3 + 2
  BiPoly f{F3.get(), {{{1, 1}, 1}}}, g{F3.get(), {{{2, 0}, 1}, {{0, 3}, 1}}};
  EXPECT_EQ(local_colength(f, g, 16), 5);
  // unit times: x (1 + y) and y
  BiPoly u{F3.get(), {{{1, 0}, 1}, {{1, 1}, 1}}}, v{F3.get(), {{{0, 1}, 1}}};
  EXPECT_EQ(local_colength(u, v, 16), 1);
}
