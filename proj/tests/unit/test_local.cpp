#include <gtest/gtest.h>

#include <numeric>

#include "swancalc/error.hpp"
#include "swancalc/local/extension.hpp"

using namespace swancalc;
using namespace swancalc::local;
using exact::make_field;

namespace {

LocalLayer as_layer(const Field* f, std::vector<Elem> c, std::int64_t val) {
  LocalLayer L;
  L.kind = LayerKind::ArtinSchreier;
  L.degree = static_cast<int>(f->p());
  L.num = Series(f, val, std::move(c));
  L.den = Series::constant(f, 1);
  return L;
}

LocalLayer kummer_layer(const Field* f, int e, std::vector<Elem> c, std::int64_t val) {
  LocalLayer L;
  L.kind = LayerKind::Kummer;
  L.degree = e;
  L.num = Series(f, val, std::move(c));
  L.den = Series::constant(f, 1);
  return L;
}

// Different from the Galois side: ord prod_{sigma != 1} (sigma(Pi) - Pi).
std::int64_t conjugate_product_different(const LocalExtension& ext, std::size_t place) {
  const Field* K = ext.places()[place].residue;
  std::int64_t d = 0;
  for (auto& a : ext.invariants(place).inertia) {
    if (a.j == 0 && a.sigma == GroupVec(a.sigma.size(), 0)) continue;
    d += (a.image - Series::t(K)).ord();
  }
  return d;
}

std::int64_t sum_j(const LocalExtension& ext, std::size_t place) {
  std::int64_t s = 0;
  for (auto& a : ext.invariants(place).inertia) s += a.j;
  return s;
}

}  // namespace

TEST(LocalAS, PoleOfOrderNAtInfinity) {
  for (int p : {2, 3, 5}) {
    auto f = make_field(p, 1);
    for (int n = 1; n <= 10; ++n) {
      if (n % p == 0) continue;
      LocalExtension ext(f.get(), {as_layer(f.get(), {1}, -n)}, 48);
      ASSERT_EQ(ext.places().size(), 1u);
      EXPECT_EQ(ext.ramification_index(), p);
      EXPECT_EQ(ext.residue_degree(), 1);
      EXPECT_EQ(ext.wild_different(), n * (p - 1)) << p << " " << n;
      for (auto& a : ext.invariants(0).inertia) {
        if (a.sigma[0] != 0) EXPECT_EQ(a.j, n);
      }
      // Kahler route against the Galois route.
      EXPECT_EQ(conjugate_product_different(ext, 0) - (p - 1), ext.wild_different());
      EXPECT_EQ(sum_j(ext, 0), ext.wild_different());
    }
  }
}

TEST(LocalAS, PthPowerPolesAreReduced) {
  auto f = make_field(3, 1);
  // t^-3 + t^-1 is t^-1 + t^-1 after subtracting T^3 - T with T = t^-1.
  LocalExtension ext(f.get(), {as_layer(f.get(), {1, 0, 1}, -3)}, 40);
  EXPECT_EQ(ext.ramification_index(), 3);
  EXPECT_EQ(ext.wild_different(), 2);
  // t^-6 + t^-2: the pole of order 6 reduces to order 2.
  LocalExtension ext2(f.get(), {as_layer(f.get(), {1, 0, 0, 0, 1}, -6)}, 40);
  EXPECT_EQ(ext2.wild_different(), 4);
}

TEST(LocalAS, SplitAndInert) {
  auto f2 = make_field(2, 1);
  // z^2 - z = t: constant term 0 splits into two places.
  LocalExtension split(f2.get(), {as_layer(f2.get(), {1}, 1)}, 32);
  EXPECT_EQ(split.places().size(), 2u);
  EXPECT_EQ(split.ramification_index(), 1);
  EXPECT_EQ(split.wild_different(), 0);
  // z^2 + z = 1 has no root in F_2.
  LocalExtension inert(f2.get(), {as_layer(f2.get(), {1, 1}, 0)}, 32);
  EXPECT_EQ(inert.places().size(), 1u);
  EXPECT_EQ(inert.residue_degree(), 2);
  EXPECT_EQ(inert.ramification_index(), 1);
  EXPECT_EQ(inert.invariants(0).inertia.size(), 1u);
}

TEST(LocalAS, TwoLayerTowerBreaks) {
  auto f = make_field(2, 1);
  // Upper breaks 1 and 3 give lower breaks 1 and 5.
  LocalExtension ext(f.get(), {as_layer(f.get(), {1}, -1), as_layer(f.get(), {1}, -3)}, 64);
  ASSERT_EQ(ext.places().size(), 1u);
  EXPECT_EQ(ext.ramification_index(), 4);
  EXPECT_EQ(ext.log_fixed_length({0, 1}), 5);
  EXPECT_EQ(ext.log_fixed_length({1, 0}), 1);
  EXPECT_EQ(ext.log_fixed_length({1, 1}), 1);
  EXPECT_EQ(ext.wild_different(), 7);
  EXPECT_EQ(conjugate_product_different(ext, 0) - 3, 7);
  // Over the first stage: the top layer alone has break 5 in the middle variable.
  EXPECT_EQ(ext.wild_different_over_stage(0, 1), 5);
}

TEST(LocalAS, NonPrimeResidueField) {
  auto f = make_field(3, 2);
  Elem a = f->generator();
  LocalExtension ext(f.get(), {as_layer(f.get(), {a, 0, 1}, -2)}, 40);
  EXPECT_EQ(ext.ramification_index(), 3);
  EXPECT_EQ(ext.wild_different(), 4);
  EXPECT_EQ(sum_j(ext, 0), 4);
}

TEST(LocalKummer, TameHasNoWildPart) {
  auto f = make_field(5, 1);
  for (int e : {2, 4}) {
    LocalExtension ext(f.get(), {kummer_layer(f.get(), e, {1}, 1)}, 32);
    EXPECT_EQ(ext.ramification_index(), e);
    EXPECT_EQ(ext.wild_different(), 0);
    EXPECT_EQ(sum_j(ext, 0), 0);
    EXPECT_EQ(conjugate_product_different(ext, 0), e - 1);
  }
  // z^4 = t^2: gcd 2 splits the residue equation.
  LocalExtension mixed(f.get(), {kummer_layer(f.get(), 4, {1}, 2)}, 32);
  EXPECT_EQ(mixed.ramification_index(), 2);
  int ef = 0;
  for (auto& pl : mixed.places()) ef += pl.e * pl.f;
  EXPECT_EQ(ef, 4);
}

TEST(LocalKummer, UnitsGiveUnramifiedPlaces) {
  auto f = make_field(3, 1);
  // z^2 = 1 + t splits, z^2 = -1 + t is inert.
  LocalExtension split(f.get(), {kummer_layer(f.get(), 2, {1, 1}, 0)}, 32);
  EXPECT_EQ(split.places().size(), 2u);
  LocalExtension inert(f.get(), {kummer_layer(f.get(), 2, {2, 1}, 0)}, 32);
  EXPECT_EQ(inert.places().size(), 1u);
  EXPECT_EQ(inert.residue_degree(), 2);
}

TEST(LocalMixed, KummerOverArtinSchreier) {
  auto f = make_field(3, 1);
  LocalExtension ext(f.get(), {as_layer(f.get(), {1}, -1), kummer_layer(f.get(), 2, {1}, 1)}, 48);
  EXPECT_EQ(ext.ramification_index(), 6);
  // Tame base change scales the wild different by 2.
  EXPECT_EQ(ext.wild_different(), 4);
  EXPECT_EQ(sum_j(ext, 0), ext.wild_different());
}

TEST(LocalPrecision, DoublingIsStable) {
  auto f = make_field(5, 1);
  auto L = std::vector<LocalLayer>{as_layer(f.get(), {1, 2, 3}, -7)};
  auto ext = build_stable(f.get(), L, 32);
  EXPECT_EQ(ext.wild_different(), 28);
  EXPECT_EQ(summarize(ext), summarize(LocalExtension(f.get(), L, 96)));
}

TEST(LocalErrors, BadLayers) {
  auto f = make_field(3, 1);
  LocalLayer bad = as_layer(f.get(), {1}, -1);
  bad.degree = 2;
  EXPECT_THROW(LocalExtension(f.get(), {bad}, 32), InputError);
  EXPECT_THROW(LocalExtension(f.get(), {kummer_layer(f.get(), 3, {1}, 1)}, 32), InputError);
}
