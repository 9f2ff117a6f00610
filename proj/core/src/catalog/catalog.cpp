#include "swancalc/catalog/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "swancalc/chow/surface.hpp"
#include "swancalc/curve/checks.hpp"
#include "swancalc/curve/cover.hpp"
#include "swancalc/error.hpp"
#include "swancalc/group/group.hpp"
#include "swancalc/local/extension.hpp"
#include "swancalc/log/charts.hpp"
#include "swancalc/rank1/fibration.hpp"
#include "swancalc/rank1/kato.hpp"

namespace swancalc::catalog {

extern const char* const kBuiltinCatalog;

namespace {

using exact::Elem;

constexpr int kEll = 0x7fffffff;

const std::map<std::string, std::set<std::string>>& allowed_checks() {
  static const std::map<std::string, std::set<std::string>> m{
      {"curve-cover", {"swan", "gos", "trace", "different", "group", "kato", "laumon"}},
      {"surface-rank1", {"swan", "kato"}},
      {"chow", {"log", "kato"}},
      {"log-chart", {"log"}},
      {"group-rep", {"group"}},
      {"correspondence", {"trace"}},
  };
  return m;
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing parameter '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("parameter '") + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const json& j, const char* key, T def) {
  return j.contains(key) ? get<T>(j, key) : def;
}

// ---- curve covers

struct CoverSpec {
  exact::FieldPtr field;
  std::vector<curve::CoverLayer> layers;
  std::vector<curve::BoundaryPoint> boundary;
};

std::pair<std::uint32_t, int> entry_field(const Entry& e, const RunOptions& opt) {
  const auto p = get<std::uint32_t>(e.params, "p");
  const int k = get_or<int>(e.params, "k", 1);
  if (opt.field_p == 0) return {p, k};
  if (opt.field_p != p) throw InputError("entry is defined in characteristic " + std::to_string(p));
  if (opt.field_k % k != 0) throw InputError("field override does not contain the entry's field");
  if (k != 1 && opt.field_k != k) throw InputError("base change from a non-prime field is not supported");
  return {p, opt.field_k};
}

std::vector<Elem> field_elems(const exact::Field* K, const json& j, const char* what) {
  std::vector<Elem> out;
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  for (auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || !K->is_valid(x.get<Elem>())) {
      throw InputError(std::string(what) + " holds a value outside the field");
    }
    out.push_back(x.get<Elem>());
  }
  return out;
}

CoverSpec cover_spec(const Entry& e, const RunOptions& opt) {
  auto [p, k] = entry_field(e, opt);
  CoverSpec s;
  s.field = exact::make_field(p, k);
  const exact::Field* K = s.field.get();
  const json& layers = e.params.at("layers");
  if (!layers.is_array() || layers.empty()) throw InputError("a cover needs a nonempty 'layers' array");
  for (auto& L : layers) {
    curve::CoverLayer c;
    const auto type = get<std::string>(L, "type");
    if (type == "AS") {
      c.kind = local::LayerKind::ArtinSchreier;
      c.degree = get_or<int>(L, "degree", static_cast<int>(p));
    } else if (type == "Kummer") {
      c.kind = local::LayerKind::Kummer;
      c.degree = get<int>(L, "degree");
    } else {
      throw InputError("unknown layer type '" + type + "'");
    }
    c.g.num = field_elems(K, L.at("num"), "num");
    c.g.den = L.contains("den") ? field_elems(K, L.at("den"), "den") : std::vector<Elem>{1};
    c.var_exps = get_or<std::vector<int>>(L, "var_exps", {});
    s.layers.push_back(std::move(c));
  }
  for (auto& b : e.params.at("boundary")) {
    if (b.is_string() && b.get<std::string>() == "inf") {
      s.boundary.push_back({true, 0});
    } else if (b.is_number_integer() && b.get<std::int64_t>() >= 0 && K->is_valid(b.get<Elem>())) {
      s.boundary.push_back({false, b.get<Elem>()});
    } else {
      throw InputError("boundary points are field elements or \"inf\"");
    }
  }
  return s;
}

curve::Cover make_cover(const Entry& e, const RunOptions& opt) {
  auto s = cover_spec(e, opt);
  const std::int64_t prec = opt.precision > 0 ? opt.precision : local::default_precision();
  return curve::Cover(s.field, s.layers, s.boundary, prec);
}

std::vector<int> character_of(const Entry& e, const curve::Cover& c) {
  auto chi = get<std::vector<int>>(e.params, "character");
  if (chi.size() != c.layers().size()) throw InputError("character needs one exponent per layer");
  return chi;
}

json cycle_json(const curve::Cover& c, const curve::ZeroCycle& z) {
  json out = json::object();
  for (auto& [k, v] : z.terms()) {
    std::string key = c.boundary()[static_cast<std::size_t>(k.point)].name(*c.base());
    if (k.place != 0) key += "." + std::to_string(k.place);
    out[key] = to_string(v);
  }
  return out;
}

json check_swan(const Entry& e, const curve::Cover& c, bool& ok) {
  const auto chi = character_of(e, c);
  auto sw = curve::swan_class(c, group::BrauerRep::character(&c.group(), kEll, chi));
  ok = sw.naive_agrees && sw.integral_agrees && sw.pullback_image && sw.local_agrees;
  return {{"downstairs", cycle_json(c, sw.downstairs)},
          {"degree", to_string(sw.downstairs.degree())},
          {"upstairs_degree", to_string(sw.upstairs.degree())},
          {"naive_agrees", sw.naive_agrees},
          {"integral_agrees", sw.integral_agrees},
          {"pullback_image", sw.pullback_image},
          {"local_agrees", sw.local_agrees}};
}

json check_gos(const Entry& e, const curve::Cover& c, bool& ok) {
  auto g = curve::gos_check(c, character_of(e, c));
  ok = g.equal && g.oracle_valid;
  return {{"swan_degree", g.swan_degree}, {"predicted", g.predicted}, {"oracle", g.oracle}, {"oracle_valid", g.oracle_valid}};
}

json check_trace(const curve::Cover& c, bool& ok) {
  ok = true;
  json rows = json::array();
  for (int s = 0; s < c.group().size(); ++s) {
    if (s == c.group().identity()) continue;
    auto t = curve::trace_formula_check(c, s);
    ok = ok && t.equal;
    rows.push_back({{"sigma", s}, {"lhs", t.lhs.to_string()}, {"rhs", t.rhs}});
  }
  return {{"elements", rows}};
}

json check_different(const Entry& e, const curve::Cover& c, bool& ok) {
  json v;
  std::int64_t wild = 0;
  for (std::size_t i = 0; i < c.boundary().size(); ++i) {
    for (auto& pd : c.places(static_cast<int>(i))) wild += pd.d_log * pd.f;
  }
  v["wild_different"] = wild;
  ok = true;
  if (c.layers().size() >= 2) {
    const auto split = get_or<std::size_t>(e.params, "split", 1);
    auto r = curve::chain_rule_check(c, split);
    ok = r.different_equal && r.discriminant_equal;
    v["different"] = to_string(r.different.degree());
    v["discriminant"] = to_string(r.discriminant.degree());
    v["chain_rule"] = r.different_equal;
    v["discriminant_chain_rule"] = r.discriminant_equal;
  }
  return v;
}

json check_group(const curve::Cover& c, bool& ok) {
  // Hasse-Arf: every character has an integral Swan class (swan_class throws
  // otherwise); the Brauer identity holds on the regular representation.
  const auto& G = c.group();
  const int p = static_cast<int>(c.base()->p());
  int characters = 0;
  ok = true;
  std::vector<int> orders = G.abelian_orders();
  for (int a = 0; a < G.size(); ++a) {
    auto sw = curve::swan_class(c, group::BrauerRep::character(&G, kEll, G.coords(a)));
    ok = ok && sw.local_agrees;
    ++characters;
  }
  auto reg = group::BrauerRep::regular(&G, kEll);
  int elements = 0;
  for (int s : group::p_part(G, p)) {
    if (s == G.identity()) continue;
    ok = ok && group::brauer_identity_check(reg, s, p);
    ++elements;
  }
  return {{"characters", characters}, {"p_elements", elements}};
}

rank1::Fiber fiber_of(const Entry& e) {
  const auto w = get_or<std::string>(e.params, "fiber", "P1");
  if (w == "P1") return rank1::Fiber::P1;
  if (w == "A1") return rank1::Fiber::A1;
  if (w == "Gm") return rank1::Fiber::Gm;
  throw InputError("fiber must be P1, A1 or Gm");
}

json check_kato_curve(const Entry& e, const curve::Cover& c, bool& ok) {
  auto r = rank1::theorem_5_check(c, character_of(e, c).front());
  ok = r.equal;
  return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"lhs_degree", r.lhs_degree}, {"rhs_degree", r.rhs_degree}};
}

json check_laumon(const Entry& e, const curve::Cover& c, bool& ok) {
  auto r = rank1::laumon_decomposition(c, character_of(e, c).front(), fiber_of(e));
  ok = r.equal;
  return {{"sw", r.sw},         {"chi_b", r.chi_b},   {"s_components", r.s_degree}, {"s_total", r.s_total},
          {"chi_u", r.chi_u},   {"formula", r.formula}, {"oracle", r.oracle},        {"oracle_valid", r.oracle_valid}};
}

// ---- surfaces

chow::SurfaceModel model_of(const json& params) {
  const auto name = get<std::string>(params, "model");
  chow::SurfaceModel X = chow::SurfaceModel::p2();
  if (name == "P1") {
    X = chow::SurfaceModel::p1();
  } else if (name == "P2") {
    X = chow::SurfaceModel::p2();
  } else if (name == "P1xP1") {
    X = chow::SurfaceModel::p1xp1();
  } else if (name == "CxP1") {
    X = chow::SurfaceModel::curve_times_p1(get<int>(params, "genus"));
  } else {
    throw InputError("unknown model '" + name + "'");
  }
  const int b = get_or<int>(params, "blowups", 0);
  if (b < 0 || b > 8) throw InputError("blowups must lie in [0, 8]");
  for (int i = 0; i < b; ++i) X = X.blow_up();
  return X;
}

chow::BoundaryDivisor boundary_of(const json& params) {
  chow::BoundaryDivisor D;
  for (auto& b : params.at("boundary")) {
    if (b.is_object()) {
      D.components.push_back(get<chow::Vec>(b, "class"));
      D.names.push_back(get_or<std::string>(b, "name", "D" + std::to_string(D.names.size() + 1)));
    } else {
      D.components.push_back(b.get<chow::Vec>());
    }
  }
  return D;
}

rank1::RankOneData rank_one_of(const Entry& e, const RunOptions& opt) {
  auto [p, k] = entry_field(e, opt);
  rank1::RankOneData d{exact::make_field(p, k), model_of(e.params), boundary_of(e.params), {}};
  const exact::Field* K = d.field.get();
  for (auto& cj : e.params.at("charts")) {
    rank1::Chart c;
    c.name = get<std::string>(cj, "name");
    c.x_component = get_or<int>(cj, "x", -1);
    c.y_component = get_or<int>(cj, "y", -1);
    for (auto& t : cj.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw InputError("chart terms are [i, j, coefficient]");
      const Elem v = t[2].get<Elem>();
      if (!K->is_valid(v)) throw InputError("chart coefficient outside the field");
      if (v != 0) c.f[{t[0].get<int>(), t[1].get<int>()}] = v;
    }
    d.charts.push_back(std::move(c));
  }
  return d;
}

json check_swan_surface(const rank1::RankOneData& d, bool& ok) {
  auto sw = rank1::swan_divisor(d);
  json comps = json::array();
  for (int i = 0; i < static_cast<int>(sw.size()); ++i) {
    json c{{"sw", sw[static_cast<std::size_t>(i)]}};
    if (sw[static_cast<std::size_t>(i)] > 0) {
      auto cl = rank1::cleanness(d, i);
      c["clean"] = cl.clean;
      c["s_clean"] = cl.s_clean;
      json bad = json::array();
      for (auto& pt : cl.not_s_clean) bad.push_back(pt.label);
      c["not_s_clean"] = bad;
    }
    comps.push_back(c);
  }
  ok = true;
  return {{"swan_divisor", sw}, {"components", comps}};
}

json check_kato_surface(const Entry& e, const rank1::RankOneData& d, bool& ok) {
  auto before = rank1::kato_c_class(d);
  auto cleaned = rank1::blowup_clean(d, get_or<int>(e.params, "max_rounds", 3));
  auto after = rank1::kato_c_class(cleaned.data);
  json steps = json::array();
  for (auto& s : cleaned.transcript) {
    steps.push_back({{"round", s.round},
                     {"center", s.center.label},
                     {"exceptional", cleaned.data.boundary.names.empty() ? std::to_string(s.exceptional)
                                                                         : cleaned.data.boundary.names[static_cast<std::size_t>(s.exceptional)]},
                     {"sw", s.exceptional_sw}});
  }
  ok = before.degree.equal && after.degree.equal && before.degree.value == after.degree.value;
  return {{"degree", before.degree.value},   {"coker_form", before.degree.coker_form},
          {"per_component", before.per_component}, {"rounds", cleaned.rounds},
          {"transcript", steps},             {"degree_after", after.degree.value},
          {"swan_divisor_after", after.sw}};
}

// chi(X) - sum chi(D_i) + sum_{i<j} D_i D_j for a normal crossings boundary.
std::int64_t stratified_euler(const chow::SurfaceModel& X, const chow::BoundaryDivisor& D) {
  std::int64_t chi = X.chi_top();
  if (X.dim() == 1) {
    for (auto& c : D.components) chi -= c.front();
    return chi;
  }
  for (std::size_t i = 0; i < D.components.size(); ++i) {
    const auto& a = D.components[i];
    chi += X.dot(X.canonical(), a) + X.dot(a, a);
    for (std::size_t j = i + 1; j < D.components.size(); ++j) chi += X.dot(a, D.components[j]);
  }
  return chi;
}

json check_log_chow(const chow::SurfaceModel& X, const chow::BoundaryDivisor& D, bool& ok) {
  chow::validate_boundary(X, D);
  const auto c = chow::chern_log(X, D);
  const std::int64_t top = X.dim() == 1 ? -chow::degree(X, c) : chow::degree(X, c);
  const std::int64_t oracle = stratified_euler(X, D);
  ok = top == oracle;
  return {{"c_top", top}, {"stratified", oracle}};
}

json check_kato_chow(const Entry& e, const chow::SurfaceModel& X, const chow::BoundaryDivisor& D, bool& ok) {
  auto k = chow::kato_class_degree(X, D, get<chow::Vec>(e.params, "sw"));
  ok = k.equal;
  return {{"value", k.value}, {"coker_form", k.coker_form}};
}

// ---- log charts

logc::MonomialChart chart_of(const json& j) {
  return {get_or<std::string>(j, "name", "X"), get<std::vector<std::string>>(j, "variables"), get<std::vector<int>>(j, "divisor")};
}

json check_log_chart(const Entry& e, bool& ok) {
  const auto op = get<std::string>(e.params, "operation");
  if (op == "product") {
    const auto X = chart_of(e.params.at("left"));
    const auto Y = chart_of(e.params.at("right"));
    auto P = logc::log_product_chart(X, Y, get<std::vector<std::pair<int, int>>>(e.params, "pairing"));
    json rel = json::array();
    for (auto& r : P.relations) rel.push_back(logc::to_string(r));
    auto d = logc::log_diagonal(X);
    ok = logc::satisfies_relations(d);
    return {{"units", P.units.size()}, {"relations", rel}, {"diagonal_consistent", ok}};
  }
  if (op == "torsor") {
    const int n = get<int>(e.params, "n");
    auto g = logc::mu_torsor_group(n, get<std::uint32_t>(e.params, "p"));
    const int bound = logc::exceptional_roots({n}).front().order;
    ok = g.order == bound && g.invariants == std::vector<int>{n};
    return {{"group", g.name()}, {"order", g.order}, {"root_bound", bound}, {"enumerated", g.enumerated}};
  }
  if (op == "roots") {
    json out = json::array();
    ok = true;
    for (auto& b : logc::exceptional_roots(get<std::vector<int>>(e.params, "multiplicities"))) {
      out.push_back({{"component", b.component}, {"order", b.order}, {"equation", b.equation}});
    }
    return {{"bounds", out}};
  }
  if (op == "barycentric") {
    const int m = get<int>(e.params, "m");
    if (m < 1 || m > 6) throw InputError("barycentric blow-up supports 1 <= m <= 6 components");
    std::vector<int> s(static_cast<std::size_t>(m));
    std::iota(s.begin(), s.end(), 0);
    int perms = 0, bad = 0;
    do {
      if (!logc::barycentric_admissibility(m, s).admissible) ++bad;
      ++perms;
    } while (std::next_permutation(s.begin(), s.end()));
    ok = bad == 0;
    return {{"permutations", perms}, {"components", (1 << m) - 1}, {"non_admissible", bad}};
  }
  throw InputError("unknown log-chart operation '" + op + "'");
}

// ---- groups and correspondences

json check_group_rep(const Entry& e, bool& ok) {
  const int p = get<int>(e.params, "p");
  const int max_e = get_or<int>(e.params, "max_exponent", 3);
  const int count = get<int>(e.params, "random");
  std::mt19937_64 rng(get_or<std::uint64_t>(e.params, "seed", 1));
  int passed = 0;
  for (int t = 0; t < count; ++t) {
    const int ex = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_e));
    int n = 1;
    for (int i = 0; i < ex; ++i) n *= p;
    auto G = group::FiniteGroup::cyclic(n);
    auto m = group::BrauerRep::trivial(&G, kEll, 0);
    const int dim = 1 + static_cast<int>(rng() % 6);
    for (int d = 0; d < dim; ++d) m = m + group::BrauerRep::character(&G, kEll, {static_cast<int>(rng() % static_cast<std::uint64_t>(n))});
    int sigma = 0;
    while (G.order(sigma) == 1) sigma = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (group::brauer_identity_check(m, sigma, p)) ++passed;
  }
  ok = passed == count;
  return {{"representations", count}, {"passed", passed}};
}

json check_correspondence(const Entry& e, bool& ok) {
  auto d = curve::deligne_check(get<int>(e.params, "N"), get<std::uint64_t>(e.params, "q"), get<int>(e.params, "n"));
  ok = d.equal;
  return {{"lhs", d.lhs}, {"rhs", d.rhs}};
}

// AS layers: pole orders at the boundary must be prime to p.
void validate_curve(const Entry& e, std::vector<Diagnostic>& out) {
  CoverSpec s = cover_spec(e, RunOptions{});
  const int p = static_cast<int>(s.field->p());
  for (auto& x : s.boundary) {
    auto ll = curve::local_layers(s.field.get(), s.layers, x);
    for (std::size_t i = 0; i < ll.size(); ++i) {
      if (s.layers[i].kind != local::LayerKind::ArtinSchreier) continue;
      const std::int64_t ord = ll[i].num.ord() - ll[i].den.ord();
      if (ord < 0 && (-ord) % p == 0) {
        out.push_back({e.id, "pole order must be prime to p (layer " + std::to_string(i + 1) + " at " + x.name(*s.field) + ")"});
      }
    }
  }
}

void compare_expected(const Entry& e, const std::string& check, Report& r) {
  if (!e.expected.contains(check)) return;
  for (auto& [key, want] : e.expected.at(check).items()) {
    if (key == "source") continue;
    if (!r.values.contains(key)) {
      r.status = Status::Fail;
      r.message += "missing value " + key + "; ";
    } else if (r.values.at(key) != want) {
      r.status = Status::Fail;
      r.message += "expected " + key + "=" + want.dump() + ", got " + r.values.at(key).dump() + "; ";
    }
  }
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> n{"swan", "gos", "trace", "different", "kato", "laumon", "log", "group"};
  return n;
}

std::vector<Diagnostic> validate(const json& doc) {
  std::vector<Diagnostic> out;
  if (!doc.is_object()) return {{"", "catalog must be a JSON object"}};
  if (!doc.contains("schema_version") || doc.at("schema_version") != kSchemaVersion) {
    out.push_back({"", "schema_version must be " + std::to_string(kSchemaVersion)});
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    out.push_back({"", "catalog needs an 'entries' array"});
    return out;
  }
  std::map<std::string, std::size_t> seen;
  const auto& entries = doc.at("entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& j = entries[i];
    const std::string where = "entry #" + std::to_string(i + 1);
    if (!j.is_object() || !j.contains("id") || !j.at("id").is_string() || j.at("id").get<std::string>().empty()) {
      out.push_back({where, "entry needs a nonempty string id"});
      continue;
    }
    const auto id = j.at("id").get<std::string>();
    if (auto it = seen.find(id); it != seen.end()) {
      out.push_back({id, "duplicate id '" + id + "' (entries #" + std::to_string(it->second + 1) + " and #" + std::to_string(i + 1) + ")"});
      continue;
    }
    seen[id] = i;
    const auto kind = j.value("kind", std::string());
    auto ak = allowed_checks().find(kind);
    if (ak == allowed_checks().end()) {
      out.push_back({id, "unknown kind '" + kind + "'"});
      continue;
    }
    if (!j.contains("checks") || !j.at("checks").is_array() || j.at("checks").empty()) {
      out.push_back({id, "entry needs a nonempty 'checks' array"});
    } else {
      for (auto& c : j.at("checks")) {
        if (!c.is_string() || !ak->second.count(c.get<std::string>())) out.push_back({id, "check " + c.dump() + " does not apply to kind " + kind});
      }
    }
    if (!j.contains("params") || !j.at("params").is_object()) {
      out.push_back({id, "entry needs a 'params' object"});
      continue;
    }
    if (j.contains("expected")) {
      for (auto& [check, v] : j.at("expected").items()) {
        if (!v.is_object() || !v.contains("source") || !v.at("source").is_string()) {
          out.push_back({id, "expected values for " + check + " need a 'source' string"});
        }
      }
    }
    if (kind == "curve-cover") {
      Entry e{id, kind, {}, j.at("params"), {}};
      try {
        validate_curve(e, out);
      } catch (const json::exception& ex) {
        out.push_back({id, std::string("malformed parameters: ") + ex.what()});
      } catch (const std::exception& ex) {
        out.push_back({id, ex.what()});
      }
    }
  }
  return out;
}

Catalog parse(const json& doc) {
  auto diags = validate(doc);
  if (!diags.empty()) {
    std::string msg = "invalid catalog:";
    for (auto& d : diags) msg += "\n  " + (d.entry.empty() ? std::string() : d.entry + ": ") + d.message;
    throw InputError(msg);
  }
  Catalog c;
  for (auto& j : doc.at("entries")) {
    c.entries.push_back({j.at("id"), j.at("kind"), j.at("checks").get<std::vector<std::string>>(), j.at("params"),
                         j.value("expected", json::object())});
  }
  std::sort(c.entries.begin(), c.entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return c;
}

const json& builtin_document() {
  static const json doc = json::parse(kBuiltinCatalog);
  return doc;
}

Catalog builtin() { return parse(builtin_document()); }

Report run_check(const Entry& e, const std::string& check, const RunOptions& opt) {
  Report r;
  r.entry = e.id;
  r.check = check;
  bool ok = false;
  try {
    if (e.kind == "curve-cover") {
      const curve::Cover c = make_cover(e, opt);
      if (check == "swan") r.values = check_swan(e, c, ok);
      else if (check == "gos") r.values = check_gos(e, c, ok);
      else if (check == "trace") r.values = check_trace(c, ok);
      else if (check == "different") r.values = check_different(e, c, ok);
      else if (check == "group") r.values = check_group(c, ok);
      else if (check == "kato") r.values = check_kato_curve(e, c, ok);
      else if (check == "laumon") r.values = check_laumon(e, c, ok);
    } else if (e.kind == "surface-rank1") {
      const auto d = rank_one_of(e, opt);
      if (check == "swan") r.values = check_swan_surface(d, ok);
      else if (check == "kato") r.values = check_kato_surface(e, d, ok);
    } else if (e.kind == "chow") {
      const auto X = model_of(e.params);
      const auto D = boundary_of(e.params);
      if (check == "log") r.values = check_log_chow(X, D, ok);
      else if (check == "kato") r.values = check_kato_chow(e, X, D, ok);
    } else if (e.kind == "log-chart") {
      r.values = check_log_chart(e, ok);
    } else if (e.kind == "group-rep") {
      r.values = check_group_rep(e, ok);
    } else if (e.kind == "correspondence") {
      r.values = check_correspondence(e, ok);
    }
    r.status = ok ? Status::Pass : Status::Fail;
    compare_expected(e, check, r);
  } catch (const InputError& ex) {
    r.status = Status::InputError;
    r.message = ex.what();
  } catch (const json::exception& ex) {
    r.status = Status::InputError;
    r.message = std::string("malformed parameters: ") + ex.what();
  } catch (const std::exception& ex) {
    r.status = Status::Error;
    r.message = ex.what();
  }
  if (!r.message.empty() && r.message.back() == ' ') r.message.erase(r.message.size() - 2);
  return r;
}

std::vector<Report> run(const Catalog& c, const RunOptions& opt) {
  std::set<std::string> wanted(opt.entries.begin(), opt.entries.end());
  for (auto& id : wanted) {
    if (std::none_of(c.entries.begin(), c.entries.end(), [&](const Entry& e) { return e.id == id; })) {
      throw InputError("no catalog entry with id '" + id + "'");
    }
  }
  for (auto& ch : opt.checks) {
    if (std::find(check_names().begin(), check_names().end(), ch) == check_names().end()) throw InputError("unknown check '" + ch + "'");
  }
  std::vector<Report> out;
  for (auto& e : c.entries) {
    if (!wanted.empty() && !wanted.count(e.id)) continue;
    if (opt.field_p != 0 && (e.kind == "curve-cover" || e.kind == "surface-rank1") &&
        get<std::uint32_t>(e.params, "p") != opt.field_p) {
      continue;
    }
    if (opt.field_p != 0 && e.kind != "curve-cover" && e.kind != "surface-rank1") continue;
    for (auto& ch : e.checks) {
      if (!opt.checks.empty() && std::find(opt.checks.begin(), opt.checks.end(), ch) == opt.checks.end()) continue;
      out.push_back(run_check(e, ch, opt));
    }
  }
  std::sort(out.begin(), out.end(), [](const Report& a, const Report& b) { return std::tie(a.entry, a.check) < std::tie(b.entry, b.check); });
  return out;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::InputError: return "input-error";
    case Status::Error: return "error";
  }
  return "error";
}

json to_json(const std::vector<Report>& reports) {
  json arr = json::array();
  for (auto& r : reports) {
    json j{{"entry", r.entry}, {"check", r.check}, {"status", status_name(r.status)}, {"values", r.values}};
    if (!r.message.empty()) j["message"] = r.message;
    arr.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion}, {"reports", arr}};
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (auto& r : reports) {
    if (r.status == Status::InputError) return 2;
    if (r.status != Status::Pass) code = 1;
  }
  return code;
}

}  // namespace swancalc::catalog
