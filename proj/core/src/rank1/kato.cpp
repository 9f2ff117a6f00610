#include "swancalc/rank1/kato.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "swancalc/error.hpp"
#include "swancalc/exact/embedding.hpp"

namespace swancalc::rank1 {

using exact::Field;
using exact::Poly;

namespace {

void add_term(const Field* K, Terms& t, int i, int j, Elem c) {
  auto& v = t[{i, j}];
  v = K->add(v, c);
  if (v == 0) t.erase({i, j});
}

Terms transposed(const Terms& t) {
  Terms r;
  for (auto& [e, c] : t) r[{e.second, e.first}] = c;
  return r;
}

// Removes p-th power leading rows along {y = 0}; returns true if f changed.
bool reduce_along_y(const Field* K, Terms& f) {
  bool changed = false;
  for (;;) {
    int lo = 0;
    for (auto& [e, c] : f) lo = std::min(lo, e.second);
    if (lo == 0) return changed;
    const int n = -lo;
    const int p = static_cast<int>(K->p());
    if (n % p != 0) return changed;
    std::vector<std::pair<int, Elem>> row;
    for (auto& [e, c] : f) {
      if (e.second != lo) continue;
      if (((e.first % p) + p) % p != 0) return changed;
      row.push_back({e.first, c});
    }
    for (auto& [i, c] : row) {
      f.erase({i, lo});
      add_term(K, f, i / p, lo / p, K->pth_root(c));
    }
    changed = true;
  }
}

void check_standard_form(const Chart& c) {
  for (auto& [e, v] : c.f) {
    if ((e.first < 0 && c.x_component < 0) || (e.second < 0 && c.y_component < 0)) {
      throw InputError("representative on chart " + c.name + " is not in standard form: pole off the boundary");
    }
  }
}

Elem binomial_mod(std::int64_t n, std::int64_t k, const Field* K) {
  // Lucas-free: small exponents only, computed in the field.
  Elem r = K->one();
  for (std::int64_t i = 0; i < k; ++i) {
    r = K->mul(r, K->from_int(n - i));
  }
  Elem d = K->one();
  for (std::int64_t i = 1; i <= k; ++i) d = K->mul(d, K->from_int(i));
  if (d != 0) return K->div(r, d);
  // k! vanishes mod p: expand by Pascal's rule instead
  std::vector<Elem> row{K->one()};
  for (std::int64_t m = 1; m <= n; ++m) {
    std::vector<Elem> next(static_cast<std::size_t>(m) + 1, 0);
    next[0] = next[static_cast<std::size_t>(m)] = K->one();
    for (std::int64_t j = 1; j < m; ++j) next[static_cast<std::size_t>(j)] = K->add(row[static_cast<std::size_t>(j - 1)], row[static_cast<std::size_t>(j)]);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// f(x + a, y + b) for exponents that are nonnegative in every shifted variable.
Terms shifted(const Field* K, const Terms& f, Elem a, Elem b) {
  Terms r;
  for (auto& [e, c] : f) {
    const auto [i, j] = e;
    if ((a != 0 && i < 0) || (b != 0 && j < 0)) throw UnsupportedError("blow-up center is not representable in a polynomial chart");
    const int ni = a == 0 ? 0 : i, nj = b == 0 ? 0 : j;
    for (int k = 0; k <= ni; ++k) {
      Elem ck = a == 0 ? K->one() : K->mul(binomial_mod(i, k, K), K->pow(a, i - k));
      for (int l = 0; l <= nj; ++l) {
        Elem cl = b == 0 ? K->one() : K->mul(binomial_mod(j, l, K), K->pow(b, j - l));
        add_term(K, r, a == 0 ? i : k, b == 0 ? j : l, K->mul(c, K->mul(ck, cl)));
      }
    }
  }
  return r;
}

struct AxisData {
  std::int64_t sw = 0;
  Poly residue, transverse;
};

// rsw along {y = 0} with coordinate x.
AxisData axis_data(const Field* K, const Terms& f, bool x_boundary) {
  AxisData d;
  int lo = 0, xlo = 0;
  for (auto& [e, c] : f) {
    lo = std::min(lo, e.second);
    xlo = std::min(xlo, e.first);
  }
  d.sw = -lo;
  d.residue = Poly(K);
  d.transverse = Poly(K);
  if (d.sw == 0) return d;
  const int np = x_boundary ? -xlo : 0;
  std::vector<Elem> r, t;
  auto put = [&](std::vector<Elem>& v, int k, Elem c) {
    if (k < 0) throw IntegrityError("negative exponent in a twisted refined Swan part");
    if (v.size() <= static_cast<std::size_t>(k)) v.resize(static_cast<std::size_t>(k) + 1, 0);
    v[static_cast<std::size_t>(k)] = K->add(v[static_cast<std::size_t>(k)], c);
  };
  const Elem minus_n = K->neg(K->from_int(d.sw));
  for (auto& [e, c] : f) {
    if (e.second != lo) continue;
    const int i = e.first;
    put(r, i + np, K->mul(minus_n, c));
    const Elem ic = K->mul(K->from_int(i), c);
    if (x_boundary) {
      put(t, i + np, ic);
    } else if (i > 0) {
      put(t, i - 1, ic);
    }
  }
  d.residue = Poly(K, r);
  d.transverse = Poly(K, t);
  return d;
}

AxisData axis_data(const Field* K, const Chart& c, int axis) {
  if (axis == 0) return axis_data(K, c.f, c.x_component >= 0);
  return axis_data(K, transposed(c.f), c.y_component >= 0);
}

int axis_component(const Chart& c, int axis) { return axis == 0 ? c.y_component : c.x_component; }

RankOneData normalized(const RankOneData& data) {
  RankOneData d = data;
  chow::validate_boundary(d.model, d.boundary);
  for (auto& c : d.charts) {
    if (c.x_component >= static_cast<int>(d.boundary.components.size()) ||
        c.y_component >= static_cast<int>(d.boundary.components.size())) {
      throw InputError("chart " + c.name + " refers to an unknown boundary component");
    }
    c.f = reduce_representative(d.field.get(), c);
  }
  return d;
}

// Is the point (px, py) of chart ci (coordinates in K) in the part of the
// surface that chart ci is responsible for?
bool in_region(const RankOneData& d, int ci, const Field* K, Elem px, Elem py) {
  const Chart& c = d.charts[static_cast<std::size_t>(ci)];
  if (!c.excluded.empty()) {
    auto emb = exact::canonical_embedding(d.field.get(), K);
    for (auto& [ex, ey] : c.excluded) {
      if (emb(ex) == px && emb(ey) == py) return false;
    }
  }
  switch (c.kind) {
    case ChartKind::Root:
      return true;
    case ChartKind::Copy: {
      if (px != 0 || py != 0) return false;
      auto emb = exact::canonical_embedding(d.field.get(), K);
      return in_region(d, c.parent, K, emb(c.cx), emb(c.cy));
    }
    case ChartKind::Chart1:
      return px == 0 && in_region(d, c.parent, K, 0, py);
    case ChartKind::Chart2:
      return in_region(d, c.parent, K, px, K->mul(px, py));
  }
  return false;
}

bool owns(const RankOneData& d, int ci, const Field* K, Elem px, Elem py) {
  return d.charts[static_cast<std::size_t>(ci)].active && in_region(d, ci, K, px, py);
}

std::string poly_string(const Poly& g) {
  std::ostringstream os;
  bool first = true;
  for (int i = g.degree(); i >= 0; --i) {
    if (g[i] == 0) continue;
    if (!first) os << " + ";
    os << g.field()->to_string(g[i]);
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

// Closed points of the axis cut out by g, restricted to the chart's responsibility.
std::vector<ChartPoint> axis_points(const RankOneData& d, int ci, int axis, const Poly& g) {
  std::vector<ChartPoint> out;
  const Field* K = d.field.get();
  const Chart& c = d.charts[static_cast<std::size_t>(ci)];
  for (auto& [h, mult] : exact::factor(g)) {
    ChartPoint pt;
    pt.chart = ci;
    pt.axis = axis;
    pt.degree = h.degree();
    pt.minimal = h;
    const Field* L = K;
    if (h.degree() == 1) {
      pt.coord = K->neg(h[0]);
    } else {
      if (K->k() * h.degree() > 12) throw UnsupportedError("closed point of too large degree on chart " + c.name);
      L = exact::make_field(K->p(), K->k() * h.degree()).get();
      auto emb = exact::canonical_embedding(K, L);
      std::vector<Elem> hc;
      for (auto x : h.coeffs()) hc.push_back(emb(x));
      pt.coord = exact::roots(Poly(L, hc)).front();
    }
    const Elem px = axis == 0 ? pt.coord : 0, py = axis == 0 ? 0 : pt.coord;
    if (!owns(d, ci, L, px, py)) continue;
    std::ostringstream os;
    if (h.degree() == 1) {
      os << c.name << "(" << K->to_string(px) << "," << K->to_string(py) << ")";
    } else {
      os << c.name << "{" << (axis == 0 ? "y=0, " : "x=0, ") << poly_string(h) << "=0}";
    }
    pt.label = os.str();
    out.push_back(std::move(pt));
  }
  return out;
}

Cleanness cleanness_normalized(const RankOneData& d, int component) {
  Cleanness r;
  int zero_seen = -1;  // residue identically zero: -1 unknown, 0 no, 1 yes
  for (int ci = 0; ci < static_cast<int>(d.charts.size()); ++ci) {
    const Chart& c = d.charts[static_cast<std::size_t>(ci)];
    if (!c.active) continue;
    for (int axis = 0; axis < 2; ++axis) {
      if (axis_component(c, axis) != component) continue;
      AxisData a = axis_data(d.field.get(), c, axis);
      if (a.sw == 0) continue;
      if (a.residue.is_zero() && a.transverse.is_zero()) {
        throw IntegrityError("refined Swan character vanishes along a component on chart " + c.name);
      }
      for (auto& pt : axis_points(d, ci, axis, exact::gcd(a.residue, a.transverse))) r.not_clean.push_back(pt);
      const int z = a.residue.is_zero() ? 1 : 0;
      if (zero_seen >= 0 && zero_seen != z) throw IntegrityError("residue part is zero on one chart of a component only");
      zero_seen = z;
      if (!z) {
        for (auto& pt : axis_points(d, ci, axis, a.residue)) r.not_s_clean.push_back(pt);
      }
    }
  }
  r.residue_vanishes = zero_seen == 1;
  r.clean = r.not_clean.empty();
  r.s_clean = r.clean && r.not_s_clean.empty();
  return r;
}

chow::Vec swan_divisor_normalized(const RankOneData& d) {
  chow::Vec sw(d.boundary.components.size(), 0);
  std::vector<char> seen(sw.size(), 0);
  for (auto& c : d.charts) {
    if (!c.active) continue;
    for (int axis = 0; axis < 2; ++axis) {
      const int comp = axis_component(c, axis);
      if (comp < 0) continue;
      const std::int64_t n = axis_data(d.field.get(), c, axis).sw;
      if (seen[static_cast<std::size_t>(comp)] && sw[static_cast<std::size_t>(comp)] != n) {
        throw IntegrityError("charts disagree on the Swan multiplicity of component " + std::to_string(comp));
      }
      seen[static_cast<std::size_t>(comp)] = 1;
      sw[static_cast<std::size_t>(comp)] = n;
    }
  }
  return sw;
}

BlowupStep blow_up_point(RankOneData& d, const ChartPoint& pt, int round) {
  const Field* K = d.field.get();
  const int ci = pt.chart;
  const Elem px = pt.axis == 0 ? pt.coord : 0, py = pt.axis == 0 ? 0 : pt.coord;
  BlowupStep step;
  step.round = round;
  step.center = pt;
  {
    const Chart& c = d.charts[static_cast<std::size_t>(ci)];
    if (py == 0 && c.y_component >= 0) step.through.push_back(c.y_component);
    if (px == 0 && c.x_component >= 0) step.through.push_back(c.x_component);
  }
  int t = ci;
  if (px == 0 && py == 0) {
    d.charts[static_cast<std::size_t>(ci)].active = false;
  } else {
    Chart copy;
    const Chart& c = d.charts[static_cast<std::size_t>(ci)];
    copy.name = c.name + "@" + K->to_string(px) + "," + K->to_string(py);
    copy.f = shifted(K, c.f, px, py);
    copy.x_component = px == 0 ? c.x_component : -1;
    copy.y_component = py == 0 ? c.y_component : -1;
    copy.kind = ChartKind::Copy;
    copy.parent = ci;
    copy.cx = px;
    copy.cy = py;
    copy.active = false;
    d.charts[static_cast<std::size_t>(ci)].excluded.push_back({px, py});
    d.charts.push_back(std::move(copy));
    t = static_cast<int>(d.charts.size()) - 1;
  }
  // Global model: new class E, proper transforms D - E.
  const int e = static_cast<int>(d.boundary.components.size());
  const std::string ename = "E" + std::to_string(d.model.rank());
  d.model = d.model.blow_up(ename);
  for (auto& v : d.boundary.components) v.push_back(0);
  for (int comp : step.through) d.boundary.components[static_cast<std::size_t>(comp)].back() = -1;
  chow::Vec ev(d.model.rank(), 0);
  ev.back() = 1;
  d.boundary.components.push_back(ev);
  if (!d.boundary.names.empty()) d.boundary.names.push_back(ename);
  step.exceptional = e;

  const Chart target = d.charts[static_cast<std::size_t>(t)];
  Chart c1, c2;
  c1.name = target.name + "/" + ename + ".1";
  c2.name = target.name + "/" + ename + ".2";
  for (auto& [ex, v] : target.f) {
    add_term(K, c1.f, ex.first, ex.first + ex.second, v);
    add_term(K, c2.f, ex.first + ex.second, ex.second, v);
  }
  c1.x_component = target.x_component;
  c1.y_component = e;
  c2.x_component = e;
  c2.y_component = target.y_component;
  c1.kind = ChartKind::Chart1;
  c2.kind = ChartKind::Chart2;
  c1.parent = c2.parent = t;
  c1.f = reduce_representative(K, c1);
  c2.f = reduce_representative(K, c2);
  step.exceptional_sw = axis_data(K, c1, 0).sw;
  d.charts.push_back(std::move(c1));
  d.charts.push_back(std::move(c2));
  return step;
}

}  // namespace

Terms reduce_representative(const Field* K, const Chart& chart) {
  check_standard_form(chart);
  Terms f = chart.f;
  for (bool changed = true; changed;) {
    changed = false;
    if (chart.y_component >= 0) changed = reduce_along_y(K, f) || changed;
    if (chart.x_component >= 0) {
      Terms g = transposed(f);
      if (reduce_along_y(K, g)) {
        f = transposed(g);
        changed = true;
      }
    }
  }
  return f;
}

chow::Vec swan_divisor(const RankOneData& data) { return swan_divisor_normalized(normalized(data)); }

std::vector<RefinedSwan> refined_swan(const RankOneData& data, int component) {
  RankOneData d = normalized(data);
  std::vector<RefinedSwan> out;
  for (int ci = 0; ci < static_cast<int>(d.charts.size()); ++ci) {
    const Chart& c = d.charts[static_cast<std::size_t>(ci)];
    if (!c.active) continue;
    for (int axis = 0; axis < 2; ++axis) {
      if (axis_component(c, axis) != component) continue;
      AxisData a = axis_data(d.field.get(), c, axis);
      if (a.sw == 0) continue;
      out.push_back({component, ci, axis, a.sw, a.residue, a.transverse});
    }
  }
  if (out.empty()) throw InputError("component " + std::to_string(component) + " has Swan multiplicity 0");
  return out;
}

Cleanness cleanness(const RankOneData& data, int component) { return cleanness_normalized(normalized(data), component); }

CleaningResult blowup_clean(const RankOneData& data, int max_rounds) {
  CleaningResult res{normalized(data), {}, 0};
  for (int round = 1;; ++round) {
    std::vector<ChartPoint> bad;
    for (int comp = 0; comp < static_cast<int>(res.data.boundary.components.size()); ++comp) {
      Cleanness cl = cleanness_normalized(res.data, comp);
      if (!cl.clean) throw InputError("not clean at " + cl.not_clean.front().label);
      for (auto& pt : cl.not_s_clean) bad.push_back(pt);
    }
    if (bad.empty()) return res;
    if (round > max_rounds) throw PrecisionError("still not s-clean after " + std::to_string(max_rounds) + " rounds of blow-ups");
    // A crossing point shows up on both axes of its chart.
    std::sort(bad.begin(), bad.end(), [](const ChartPoint& a, const ChartPoint& b) {
      const Elem ax = a.axis == 0 ? a.coord : 0, ay = a.axis == 0 ? 0 : a.coord;
      const Elem bx = b.axis == 0 ? b.coord : 0, by = b.axis == 0 ? 0 : b.coord;
      return std::tie(a.chart, ax, ay, a.axis) < std::tie(b.chart, bx, by, b.axis);
    });
    std::set<std::tuple<int, Elem, Elem>> done;
    for (auto& pt : bad) {
      if (pt.degree != 1) throw UnsupportedError("blow-up at the non-rational point " + pt.label);
      const Elem x = pt.axis == 0 ? pt.coord : 0, y = pt.axis == 0 ? 0 : pt.coord;
      if (!done.insert({pt.chart, x, y}).second) continue;
      res.transcript.push_back(blow_up_point(res.data, pt, round));
    }
    res.rounds = round;
  }
}

KatoClass kato_c_class(const RankOneData& data) {
  RankOneData d = normalized(data);
  KatoClass r;
  r.sw = swan_divisor_normalized(d);
  for (int comp = 0; comp < static_cast<int>(r.sw.size()); ++comp) {
    if (r.sw[static_cast<std::size_t>(comp)] == 0) continue;
    Cleanness cl = cleanness_normalized(d, comp);
    if (!cl.clean) throw InputError("c_F needs a clean sheaf; not clean at " + cl.not_clean.front().label);
  }
  r.degree = chow::kato_class_degree(d.model, d.boundary, r.sw);
  const chow::Vec dchi = chow::combination(d.model, d.boundary, r.sw, "Swan multiplicities");
  const chow::GradedClass c = chow::chern_log(d.model, d.boundary);
  for (std::size_t i = 0; i < r.sw.size(); ++i) {
    const auto& di = d.boundary.components[i];
    const std::int64_t coker = d.model.dim() == 1 ? 1 : d.model.dot(c.c1, di) + d.model.dot(dchi, di);
    r.per_component.push_back(d.model.dim() == 1 ? r.sw[i] : -r.sw[i] * coker);
  }
  return r;
}

}  // namespace swancalc::rank1
