#include "swancalc/rank1/fibration.hpp"

#include "swancalc/curve/checks.hpp"
#include "swancalc/error.hpp"
#include "swancalc/group/group.hpp"

namespace swancalc::rank1 {

namespace {

constexpr int kEll = 0x7fffffff;

int horizontal_count(Fiber w) { return w == Fiber::P1 ? 0 : w == Fiber::A1 ? 1 : 2; }

std::int64_t chi_w(Fiber w) { return w == Fiber::P1 ? 2 : w == Fiber::A1 ? 1 : 0; }

void check_fibration(const curve::Cover& cover, int a) {
  if (cover.layers().size() != 1) throw InputError("fibration sheaves come from a single-layer cover");
  const int n = cover.layers().front().degree;
  if (a <= 0 || a >= n) throw InputError("character exponent must lie in [1, " + std::to_string(n - 1) + "]");
}

// Downstairs Swan conductor of psi^a at each boundary point.
std::vector<std::int64_t> curve_swan(const curve::Cover& cover, int a) {
  auto sw = curve::swan_class(cover, group::BrauerRep::character(&cover.group(), kEll, {a}));
  std::vector<std::int64_t> out(cover.boundary().size(), 0);
  for (auto& [k, c] : sw.downstairs.terms()) {
    if (c.denominator() != 1) throw IntegrityError("fractional Swan conductor");
    out[static_cast<std::size_t>(k.point)] += c.numerator();
  }
  return out;
}

}  // namespace

const char* fiber_name(Fiber w) { return w == Fiber::P1 ? "P1" : w == Fiber::A1 ? "A1" : "Gm"; }

RankOneData fibration_data(const curve::Cover& cover, int a, Fiber w) {
  check_fibration(cover, a);
  const exact::Field* K = cover.base();
  RankOneData d{cover.base_ptr(), chow::SurfaceModel::curve_times_p1(0), {}, {}};
  for (auto& x : cover.boundary()) {
    d.boundary.components.push_back({1, 0});
    d.boundary.names.push_back("{" + x.name(*K) + "}xP1");
  }
  const char* hnames[] = {"P1x{inf}", "P1x{0}"};
  for (int h = 0; h < horizontal_count(w); ++h) {
    d.boundary.components.push_back({0, 1});
    d.boundary.names.push_back(hnames[h]);
  }
  const auto& layer = cover.layers().front();
  if (layer.kind != local::LayerKind::ArtinSchreier) return d;  // tame: nothing wild to record
  const Elem scale = K->from_int(a);
  for (std::size_t i = 0; i < cover.boundary().size(); ++i) {
    const auto& x = cover.boundary()[i];
    const auto ll = curve::local_layers(K, cover.layers(), x).front();
    const auto g = ll.num.div(ll.den, cover.precision());
    Chart c;
    c.name = "U" + x.name(*K);
    c.y_component = static_cast<int>(i);
    for (std::int64_t j = g.first(); j < 0; ++j) {
      const Elem v = K->mul(scale, g.coeff(j));
      if (v != 0) c.f[{0, static_cast<int>(j)}] = v;
    }
    d.charts.push_back(std::move(c));
  }
  return d;
}

FibrationResult theorem_5_check(const curve::Cover& cover, int a) {
  check_fibration(cover, a);
  FibrationResult r;
  const auto down = curve_swan(cover, a);
  const RankOneData d = fibration_data(cover, a, Fiber::P1);
  const KatoClass c = kato_c_class(d);
  // Sw(pr^* F) = pr^* Sw(F) . c_1 of the fiber: degree chi(P^1) = 2 per point.
  for (auto s : down) {
    r.lhs.push_back(2 * s);
    r.lhs_degree += 2 * s;
  }
  r.rhs = c.per_component;
  r.rhs_degree = c.degree.value;
  r.equal = r.lhs == r.rhs && r.lhs_degree == r.rhs_degree && c.degree.equal;
  return r;
}

LaumonResult laumon_decomposition(const curve::Cover& cover, int a, Fiber w) {
  check_fibration(cover, a);
  LaumonResult r;
  const RankOneData d = fibration_data(cover, a, w);
  const KatoClass c = kato_c_class(d);
  const auto down = curve_swan(cover, a);
  r.sw.assign(d.boundary.components.size(), 0);
  for (std::size_t i = 0; i < down.size(); ++i) r.sw[i] = down[i];
  if (c.sw != r.sw) throw IntegrityError("Swan divisor disagrees with the classical Swan conductors");
  const auto& K = d.model.canonical();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < r.sw.size(); ++i) {
    const auto& b = d.boundary.components[i];
    const std::int64_t chi = -(d.model.dot(K, b) + d.model.dot(b, b));
    r.chi_b.push_back(chi);
    // S_F restricted to B_i: Sw(F) there plus Sw_i c_1(Omega^1 of B_i).
    r.s_degree.push_back(c.per_component[i] - r.sw[i] * chi);
    r.s_total += r.s_degree.back();
    sum += r.sw[i] * chi;
  }
  r.chi_u = cover.euler_char_base() * chi_w(w);
  r.formula = r.chi_u - (sum + r.s_total);
  const auto g = curve::gos_check(cover, {a});
  r.oracle = g.oracle * chi_w(w);
  r.oracle_valid = g.oracle_valid;
  r.equal = r.oracle_valid && r.formula == r.oracle;
  return r;
}

}  // namespace swancalc::rank1
