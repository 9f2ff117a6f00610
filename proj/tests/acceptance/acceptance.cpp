// One line per acceptance criterion; exit status 1 if any is red.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "swancalc/catalog/catalog.hpp"
#include "swancalc/chow/surface.hpp"
#include "swancalc/curve/checks.hpp"
#include "swancalc/curve/cover.hpp"
#include "swancalc/curve/pointcount.hpp"
#include "swancalc/error.hpp"
#include "swancalc/group/group.hpp"
#include "swancalc/log/charts.hpp"
#include "swancalc/rank1/fibration.hpp"

using namespace swancalc;

namespace {

constexpr int kEll = 0x7fffffff;

struct Outcome {
  bool ok = true;
  std::string note;
};

const curve::BoundaryPoint kInf{true, 0};

curve::Cover as_cover(std::uint32_t p, int n) {
  std::vector<exact::Elem> num(static_cast<std::size_t>(n) + 1, 0);
  num.back() = 1;
  return curve::Cover(exact::make_field(p, 1), {{local::LayerKind::ArtinSchreier, static_cast<int>(p), {num, {1}}, {}}}, {kInf});
}

catalog::RunOptions no_filter() { return {}; }

// Galois curve covers of the built-in catalog.
std::vector<std::pair<std::string, curve::Cover>> catalog_covers() {
  std::vector<std::pair<std::string, curve::Cover>> out;
  for (auto& e : catalog::builtin().entries) {
    if (e.kind != "curve-cover") continue;
    std::vector<curve::CoverLayer> layers;
    const auto& P = e.params;
    const auto p = P.at("p").get<std::uint32_t>();
    auto K = exact::make_field(p, P.value("k", 1));
    for (auto& L : P.at("layers")) {
      curve::CoverLayer c;
      c.kind = L.at("type") == "AS" ? local::LayerKind::ArtinSchreier : local::LayerKind::Kummer;
      c.degree = L.value("degree", static_cast<int>(p));
      c.g.num = L.at("num").get<std::vector<exact::Elem>>();
      c.g.den = L.value("den", std::vector<exact::Elem>{1});
      c.var_exps = L.value("var_exps", std::vector<int>{});
      layers.push_back(c);
    }
    std::vector<curve::BoundaryPoint> b;
    for (auto& x : P.at("boundary")) b.push_back(x.is_string() ? kInf : curve::BoundaryPoint{false, x.get<exact::Elem>()});
    curve::Cover c(K, layers, b);
    if (c.is_galois()) out.emplace_back(e.id, std::move(c));
  }
  return out;
}

bool all_kummer(const curve::Cover& c) {
  for (auto& L : c.layers()) {
    if (L.kind != local::LayerKind::Kummer) return false;
  }
  return true;
}

Outcome artin_schreier_sweep() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int covers = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= 10; ++n) {
      if (n % static_cast<int>(p) == 0) continue;
      auto c = as_cover(p, n);
      auto hist = curve::frobenius_histogram(c, std::max(n, 2));
      std::int64_t chi_v = 0;
      for (int a = 0; a < static_cast<int>(p); ++a) {
        auto g = curve::gos_check(c, hist, {a});
        o.ok = o.ok && g.oracle_valid && g.equal;
        if (a != 0) o.ok = o.ok && g.swan_degree == n && g.predicted == 1 - n;
        chi_v += g.oracle;
      }
      // one point of the smooth model over infinity
      const std::int64_t two_g = 1 - chi_v;
      std::int64_t wild = 0;
      for (auto& pd : c.places(0)) wild += pd.d_log * pd.f;
      auto sw = curve::swan_class(c, group::BrauerRep::character(&c.group(), kEll, {1}));
      o.ok = o.ok && two_g == static_cast<std::int64_t>(p - 1) * (n - 1) && wild == static_cast<std::int64_t>(p - 1) * n &&
             sw.downstairs.degree() == n;
      ++covers;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.ok = o.ok && secs < 30;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%d covers in %.1f s", covers, secs);
  o.note = buf;
  return o;
}

Outcome swan_character_sum(const std::vector<std::pair<std::string, curve::Cover>>& covers) {
  Outcome o;
  for (auto& [id, c] : covers) {
    curve::ZeroCycle total;
    for (int s = 0; s < c.group().size(); ++s) total = total + curve::swan_character_class(c, s);
    if (!total.is_zero()) {
      o.ok = false;
      o.note += id + " ";
    }
  }
  o.note = std::to_string(covers.size()) + " covers " + o.note;
  o.ok = o.ok && covers.size() >= 10;
  return o;
}

Outcome tame_vanishing(const std::vector<std::pair<std::string, curve::Cover>>& covers) {
  Outcome o;
  int n = 0;
  for (auto& [id, c] : covers) {
    if (!all_kummer(c)) continue;
    ++n;
    for (int s = 0; s < c.group().size(); ++s) o.ok = o.ok && curve::swan_character_class(c, s).is_zero();
    for (int a = 0; a < c.group().size(); ++a) {
      auto sw = curve::swan_class(c, group::BrauerRep::character(&c.group(), kEll, c.group().coords(a)));
      o.ok = o.ok && sw.upstairs.is_zero() && sw.downstairs.is_zero() && sw.integral.is_zero();
    }
  }
  o.ok = o.ok && n > 0;
  o.note = std::to_string(n) + " Kummer covers";
  return o;
}

Outcome brauer_identity() {
  Outcome o;
  std::mt19937_64 rng(987654321);
  int passed = 0;
  for (int t = 0; t < 1000; ++t) {
    const int p = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(t % 3)];
    const int e = 1 + static_cast<int>(rng() % 3);
    int n = 1;
    for (int i = 0; i < e; ++i) n *= p;
    auto G = group::FiniteGroup::cyclic(n);
    auto m = group::BrauerRep::trivial(&G, kEll, 0);
    const int dim = 1 + static_cast<int>(rng() % 8);
    for (int d = 0; d < dim; ++d) m = m + group::BrauerRep::character(&G, kEll, {static_cast<int>(rng() % static_cast<std::uint64_t>(n))});
    int sigma = 0;
    while (G.order(sigma) == 1) sigma = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    passed += group::brauer_identity_check(m, sigma, p);
  }
  o.ok = passed == 1000;
  o.note = std::to_string(passed) + "/1000 representations";
  return o;
}

Outcome hasse_arf(const std::vector<std::pair<std::string, curve::Cover>>& covers) {
  Outcome o;
  int sheaves = 0;
  for (auto& [id, c] : covers) {
    for (int a = 0; a < c.group().size(); ++a) {
      try {
        auto sw = curve::swan_class(c, group::BrauerRep::character(&c.group(), kEll, c.group().coords(a)));
        for (auto& [k, v] : sw.downstairs.terms()) o.ok = o.ok && v.denominator() == 1 && v.numerator() >= 0;
        o.ok = o.ok && sw.pullback_image;
      } catch (const IntegrityError&) {
        o.ok = false;
      }
      ++sheaves;
    }
  }
  o.note = std::to_string(sheaves) + " characters";
  return o;
}

Outcome induction() {
  Outcome o;
  auto F2 = exact::make_field(2, 1), F3 = exact::make_field(3, 1);
  auto as = [](int p, std::vector<exact::Elem> num) {
    return curve::CoverLayer{local::LayerKind::ArtinSchreier, p, {std::move(num), {1}}, {}};
  };
  std::vector<curve::Cover> towers;
  towers.emplace_back(F2, std::vector<curve::CoverLayer>{as(2, {0, 0, 0, 1}), as(2, {0, 0, 0, 0, 0, 1})}, std::vector<curve::BoundaryPoint>{kInf});
  towers.emplace_back(F3, std::vector<curve::CoverLayer>{as(3, {0, 1}), {local::LayerKind::Kummer, 2, {{0, 1}, {1}}, {}}},
                      std::vector<curve::BoundaryPoint>{{false, 0}, kInf});
  towers.emplace_back(F3, std::vector<curve::CoverLayer>{as(3, {0, 1}), as(3, {0, 0, 1})}, std::vector<curve::BoundaryPoint>{kInf});
  int cases = 0, trivial = 0;
  for (auto& c : towers) {
    for (int h = 0; h < 2; ++h) {
      const int deg = c.layers()[static_cast<std::size_t>(h)].degree;
      for (int a = 0; a < deg; ++a) {
        curve::SheafOnSubcover s{{h}, a == 0 ? std::vector<int>{} : std::vector<int>{a}, 1};
        auto r = curve::induction_check(c, s);
        o.ok = o.ok && r.upstairs_equal && r.downstairs_equal;
        if (a == 0) {
          o.ok = o.ok && r.trivial_case && r.downstairs_lhs == r.wild_discriminant;
          ++trivial;
        }
        ++cases;
      }
    }
  }
  o.note = std::to_string(towers.size()) + " towers, " + std::to_string(cases) + " sheaves, " + std::to_string(trivial) + " trivial";
  return o;
}

Outcome trace_formula() {
  Outcome o;
  int checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= 3; ++n) {
      if (n % static_cast<int>(p) == 0) continue;
      auto c = as_cover(p, n);
      for (int s = 0; s < c.group().size(); ++s) {
        if (s == c.group().identity()) continue;
        o.ok = o.ok && curve::trace_formula_check(c, s).equal;
        ++checked;
      }
    }
  }
  for (int e : {2, 4}) {
    curve::Cover k(exact::make_field(5, 1), {{local::LayerKind::Kummer, e, {{0, 1}, {1}}, {}}}, {{false, 0}, kInf});
    for (int s = 0; s < k.group().size(); ++s) {
      if (s == k.group().identity()) continue;
      auto t = curve::trace_formula_check(k, s);
      o.ok = o.ok && t.equal && t.rhs == 0 && t.lhs == exact::CyclotomicInt::integer(0);
      ++checked;
    }
  }
  o.note = std::to_string(checked) + " automorphisms";
  return o;
}

Outcome deligne() {
  Outcome o;
  for (auto [N, q, n] : std::vector<std::tuple<int, std::uint64_t, int>>{{2, 3, 1}, {3, 2, 2}, {2, 2, 2}, {4, 3, 2}}) {
    auto d = curve::deligne_check(N, q, n);
    std::int64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= static_cast<std::int64_t>(q);
    o.ok = o.ok && d.lhs == qn && d.rhs == qn;
    o.note += std::to_string(d.lhs) + "=" + std::to_string(d.rhs) + " ";
  }
  o.note.pop_back();
  return o;
}

Outcome chow_euler(const catalog::Catalog& cat) {
  Outcome o;
  int configs = 0, blowups = 0;
  for (auto& e : cat.entries) {
    if (e.kind != "chow") continue;
    auto r = catalog::run_check(e, "log", no_filter());
    o.ok = o.ok && r.status == catalog::Status::Pass;
    if (e.params.value("blowups", 0) > 0) ++blowups;
    ++configs;
  }
  o.ok = o.ok && configs >= 8 && blowups > 0;
  o.note = std::to_string(configs) + " configurations, " + std::to_string(blowups) + " on blow-ups";
  return o;
}

Outcome kato_fibration() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (n % static_cast<int>(p) == 0) continue;
      auto c = as_cover(p, n);
      auto t = rank1::theorem_5_check(c, 1);
      auto k = rank1::kato_c_class(rank1::fibration_data(c, 1));
      // product oracle: deg Sw = rank chi_c(U) - chi_c(U, F) on U = A1 x P1
      auto g = curve::gos_check(c, {1});
      const std::int64_t oracle = 2 * c.euler_char_base() - 2 * g.oracle;
      o.ok = o.ok && t.equal && g.oracle_valid && k.degree.equal && k.degree.value == 2 * n && oracle == 2 * n &&
             k.degree.coker_form == k.degree.value;
    }
  }
  o.note = "sw = 1, 2, 3 for p = 2, 3, 5";
  return o;
}

Outcome laumon(const catalog::Catalog& cat) {
  Outcome o;
  int sheaves = 0;
  for (auto& e : cat.entries) {
    if (std::find(e.checks.begin(), e.checks.end(), "laumon") == e.checks.end()) continue;
    auto r = catalog::run_check(e, "laumon", no_filter());
    o.ok = o.ok && r.status == catalog::Status::Pass && r.values.at("formula") == r.values.at("oracle");
    ++sheaves;
  }
  o.ok = o.ok && sheaves >= 3;
  o.note = std::to_string(sheaves) + " fibration sheaves";
  return o;
}

Outcome log_charts() {
  Outcome o;
  int groups = 0, perms = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int n = 1; n <= 20; ++n) {
      if (n % static_cast<int>(p) == 0) continue;
      auto g = logc::mu_torsor_group(n, p);
      o.ok = o.ok && g.order == n && g.invariants == std::vector<int>{n};
      ++groups;
    }
  }
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> s(static_cast<std::size_t>(m));
    std::iota(s.begin(), s.end(), 0);
    do {
      o.ok = o.ok && logc::barycentric_admissibility(m, s).admissible;
      ++perms;
    } while (std::next_permutation(s.begin(), s.end()));
  }
  o.note = std::to_string(groups) + " torsor groups, " + std::to_string(perms) + " permutations";
  return o;
}

Outcome determinism(const catalog::Catalog& cat) {
  Outcome o;
  catalog::RunOptions a, b;
  a.precision = 64;
  b.precision = 128;
  const auto ra = catalog::run(cat, a);
  const auto rb = catalog::run(cat, b);
  const std::string ja = catalog::to_json(ra).dump(), jb = catalog::to_json(rb).dump();
  o.ok = ja == jb && catalog::exit_code(ra) == 0;
  o.note = std::to_string(ra.size()) + " reports, " + std::to_string(ja.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  const auto cat = catalog::builtin();
  const auto covers = catalog_covers();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"artin-schreier sweep", artin_schreier_sweep},
      {"swan character classes sum to zero", [&] { return swan_character_sum(covers); }},
      {"tame covers have zero swan classes", [&] { return tame_vanishing(covers); }},
      {"brauer identity on random representations", brauer_identity},
      {"integral swan classes", [&] { return hasse_arf(covers); }},
      {"induction formula", induction},
      {"trace formula", trace_formula},
      {"power correspondence trace", deligne},
      {"log chern class vs euler characteristic", [&] { return chow_euler(cat); }},
      {"kato class of fibration sheaves", kato_fibration},
      {"reformulated laumon formula", [&] { return laumon(cat); }},
      {"log chart groups and admissibility", log_charts},
      {"doubled precision reproduces the report", [&] { return determinism(cat); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.note.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
