#include "swancalc/curve/cover.hpp"

#include <algorithm>
#include <set>

#include "swancalc/error.hpp"
#include "swancalc/exact/poly.hpp"

namespace swancalc::curve {

using exact::CyclotomicInt;
using exact::Poly;
using exact::Series;

std::string BoundaryPoint::name(const Field& f) const { return infinity ? std::string("inf") : "t=" + f.to_string(a); }

namespace {

struct Reduced {
  Poly num, den;
};

Reduced reduce(const Field* K, const RationalFunction& g) {
  Poly n(K, g.num), d(K, g.den);
  if (d.is_zero()) throw InputError("rational function with zero denominator");
  if (n.is_zero()) return {n, Poly::constant(K, 1)};
  Poly c = exact::gcd(n, d);
  n = n / c;
  d = d / c;
  Elem l = K->inv(d.lead());
  return {n.scaled(l), d.scaled(l)};
}

void add_roots(const Poly& f, std::set<BoundaryPoint>& out, const char* what) {
  if (f.degree() < 1) return;
  for (auto& [g, m] : exact::factor(f)) {
    if (g.degree() > 1) {
      throw InputError(std::string(what) + " at a point of degree " + std::to_string(g.degree()) +
                       "; only rational branch points are supported");
    }
    out.insert(BoundaryPoint{false, f.field()->neg(g[0])});
  }
}

std::set<BoundaryPoint> bad_points(const Field* K, const CoverLayer& L, bool with_zeros) {
  Reduced r = reduce(K, L.g);
  std::set<BoundaryPoint> out;
  add_roots(r.den, out, "pole");
  if (r.num.degree() > r.den.degree()) out.insert(BoundaryPoint{true, 0});
  if (with_zeros) {
    if (r.num.is_zero()) throw InputError("Kummer layer with zero right-hand side");
    add_roots(r.num, out, "zero");
    if (r.num.degree() < r.den.degree()) out.insert(BoundaryPoint{true, 0});
  }
  return out;
}

// p(t + a) for a polynomial with coefficients c.
std::vector<Elem> taylor_shift(const Field* K, const std::vector<Elem>& c, Elem a) {
  Poly acc(K);
  Poly lin(K, {a, K->one()});
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lin + Poly::constant(K, *it);
  return acc.coeffs();
}

Series laurent(const Field* K, const std::vector<Elem>& c, const BoundaryPoint& x) {
  Poly p(K, c);
  if (p.is_zero()) return Series::zero(K);
  if (x.infinity) {
    // p(1/tau) = tau^{-deg p} * (reversed p)(tau)
    std::vector<Elem> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return Series(K, -p.degree(), rev);
  }
  return Series(K, 0, taylor_shift(K, p.coeffs(), x.a));
}

}  // namespace

RationalFunction reduced(const Field* base, const RationalFunction& g) {
  Reduced r = reduce(base, g);
  return {r.num.coeffs(), r.den.coeffs()};
}

std::vector<local::LocalLayer> local_layers(const Field* base, const std::vector<CoverLayer>& layers, const BoundaryPoint& x) {
  std::vector<local::LocalLayer> out;
  for (auto& L : layers) {
    Reduced r = reduce(base, L.g);
    local::LocalLayer ll;
    ll.kind = L.kind;
    ll.degree = L.degree;
    ll.num = laurent(base, r.num.coeffs(), x);
    ll.den = laurent(base, r.den.coeffs(), x);
    ll.var_exps = L.var_exps;
    out.push_back(std::move(ll));
  }
  return out;
}

Cover::Cover(FieldPtr base, std::vector<CoverLayer> layers, std::vector<BoundaryPoint> boundary, std::int64_t prec)
    : base_(std::move(base)), layers_(std::move(layers)), boundary_(std::move(boundary)), prec_(prec) {
  const Field* K = base_.get();
  if (layers_.empty()) throw InputError("a cover needs at least one layer");
  std::sort(boundary_.begin(), boundary_.end());
  if (std::adjacent_find(boundary_.begin(), boundary_.end()) != boundary_.end()) throw InputError("boundary point listed twice");
  for (auto& x : boundary_) {
    if (!x.infinity && !K->is_valid(x.a)) throw InputError("boundary point outside the base field");
  }
  galois_ = true;
  std::vector<std::set<BoundaryPoint>> locus(layers_.size());
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    auto& L = layers_[i];
    if (L.kind == LayerKind::ArtinSchreier && L.degree != static_cast<int>(K->p())) {
      throw InputError("Artin-Schreier layer degree must equal the characteristic");
    }
    if (L.kind == LayerKind::Kummer && (L.degree < 2 || L.degree % static_cast<int>(K->p()) == 0)) {
      throw InputError("Kummer layer degree must be at least 2 and prime to p");
    }
    if (L.var_exps.size() > i) throw InputError("a layer may only refer to earlier layers");
    L.var_exps.resize(i, 0);
    locus[i] = bad_points(K, L, L.kind == LayerKind::Kummer);
    for (std::size_t j = 0; j < i; ++j) {
      if (L.var_exps[j] == 0) continue;
      galois_ = false;
      // The norm of z_j is g_j up to sign, so z_j is a unit away from its zeros and poles.
      auto zj = bad_points(K, layers_[j], true);
      locus[i].insert(zj.begin(), zj.end());
      locus[i].insert(locus[j].begin(), locus[j].end());
    }
    if (L.kind == LayerKind::Kummer && (K->q() - 1) % static_cast<std::uint64_t>(L.degree) != 0) galois_ = false;
    for (auto& x : locus[i]) {
      if (!std::binary_search(boundary_.begin(), boundary_.end(), x)) {
        throw InputError("layer " + std::to_string(i) + " ramifies at " + x.name(*K) + ", which is not a boundary point");
      }
    }
  }
  if (boundary_.empty()) throw InputError("a cover needs at least one boundary point");
  if (galois_) {
    std::vector<int> orders;
    for (auto& L : layers_) orders.push_back(L.degree);
    group_ = std::make_unique<group::FiniteGroup>(group::FiniteGroup::abelian(orders));
  }
  for (auto& x : boundary_) {
    auto ext = std::make_shared<local::LocalExtension>(local::build_stable(K, local_layers(K, layers_, x), prec_));
    std::vector<PlaceData> pds;
    for (std::size_t i = 0; i < ext->places().size(); ++i) {
      const auto& pl = ext->places()[i];
      PlaceData pd;
      pd.e = pl.e;
      pd.f = pl.f;
      pd.path = pl.path;
      if (galois_) {
        const auto& inv = ext->invariants(i);
        pd.d_log = inv.d_log;
        for (auto& a : inv.inertia) {
          int g = group_->from_coords(a.sigma);
          pd.inertia.push_back(g);
          pd.j[g] = a.j;
        }
        std::sort(pd.inertia.begin(), pd.inertia.end());
      } else {
        pd.d_log = ext->wild_different_over_stage(i, 0);
      }
      pds.push_back(std::move(pd));
    }
    local_.push_back(std::move(ext));
    places_.push_back(std::move(pds));
  }
  if (galois_) {
    // P^1 is simply connected, so the inertia groups generate the geometric
    // Galois group; anything smaller means V is not geometrically connected.
    std::vector<int> gens;
    for (auto& pds : places_) {
      for (auto& pd : pds) gens.insert(gens.end(), pd.inertia.begin(), pd.inertia.end());
    }
    if (static_cast<int>(group_->generated(gens).size()) != group_->size()) {
      throw InputError("cover is not geometrically connected (inertia groups generate a proper subgroup)");
    }
  }
}

int Cover::degree() const {
  int d = 1;
  for (auto& L : layers_) d *= L.degree;
  return d;
}

const group::FiniteGroup& Cover::group() const {
  if (!group_) throw UnsupportedError("cover is not Galois");
  return *group_;
}

int Cover::point_index(const BoundaryPoint& x) const {
  auto it = std::lower_bound(boundary_.begin(), boundary_.end(), x);
  if (it == boundary_.end() || *it != x) throw InputError("not a boundary point");
  return static_cast<int>(it - boundary_.begin());
}

Cover Cover::prefix(std::size_t s) const {
  if (s == 0 || s > layers_.size()) throw InputError("prefix length out of range");
  std::vector<CoverLayer> ls(layers_.begin(), layers_.begin() + static_cast<std::ptrdiff_t>(s));
  return Cover(base_, ls, boundary_, prec_);
}

Cover Cover::reordered(const std::vector<int>& perm) const {
  if (perm.size() != layers_.size()) throw InputError("permutation has the wrong length");
  std::vector<CoverLayer> ls;
  for (int i : perm) {
    const auto& L = layers_.at(static_cast<std::size_t>(i));
    for (int x : L.var_exps) {
      if (x != 0) throw UnsupportedError("only independent layers can be reordered");
    }
    ls.push_back(L);
    ls.back().var_exps.clear();
  }
  return Cover(base_, ls, boundary_, prec_);
}

std::vector<BoundaryPoint> Cover::branch_locus(std::size_t layer) const {
  auto s = bad_points(base(), layers_.at(layer), layers_[layer].kind == LayerKind::Kummer);
  return {s.begin(), s.end()};
}

const std::vector<PlaceData>& decompose_places(const Cover& cover, const BoundaryPoint& x) {
  return cover.places(cover.point_index(x));
}

ZeroCycle swan_character_class(const Cover& cover, int sigma) {
  const auto& G = cover.group();
  ZeroCycle z;
  for (int x = 0; x < static_cast<int>(cover.boundary().size()); ++x) {
    const auto& pds = cover.places(x);
    for (int y = 0; y < static_cast<int>(pds.size()); ++y) {
      const auto& pd = pds[static_cast<std::size_t>(y)];
      if (sigma == G.identity()) {
        z.add({x, y}, Rational(pd.d_log), pd.f);
      } else {
        auto it = pd.j.find(sigma);
        z.add({x, y}, Rational(it == pd.j.end() ? 0 : -it->second), pd.f);
      }
    }
  }
  return z;
}

ZeroCycle pushforward(const Cover& cover, const ZeroCycle& up) {
  ZeroCycle d;
  for (auto& [k, c] : up.terms()) d.add({k.point, 0}, c * cover.places(k.point).at(static_cast<std::size_t>(k.place)).f);
  return d;
}

ZeroCycle pullback(const Cover& cover, const ZeroCycle& down) {
  ZeroCycle u;
  for (auto& [k, c] : down.terms()) {
    const auto& pds = cover.places(k.point);
    for (int y = 0; y < static_cast<int>(pds.size()); ++y) {
      u.add({k.point, y}, c * pds[static_cast<std::size_t>(y)].e, pds[static_cast<std::size_t>(y)].f);
    }
  }
  return u;
}

std::int64_t local_swan_conductor(const local::LocalExtension& ext, std::size_t place, const group::BrauerRep& m) {
  const auto& G = m.group();
  if (G.abelian_orders() != ext.group_orders()) throw InputError("representation is not on the Galois group of the extension");
  const auto& inv = ext.invariants(place);
  CyclotomicInt acc = CyclotomicInt::integer(inv.d_log * m.dim());
  for (auto& a : inv.inertia) {
    if (a.j == 0) continue;
    acc = acc - a.j * m.trace(G.from_coords(a.sigma));
  }
  CyclotomicInt sw = acc.divided(static_cast<std::int64_t>(inv.inertia.size()));
  if (!sw.is_integer() || sw.to_integer() < 0) {
    throw IntegrityError("local Swan conductor " + sw.to_string() + " is not a natural number");
  }
  return sw.to_integer();
}

SwanClass swan_class(const Cover& cover, const group::BrauerRep& m) {
  const auto& G = cover.group();
  if (&m.group() != &G && m.group().abelian_orders() != G.abelian_orders()) {
    throw InputError("representation is not on the Galois group of the cover");
  }
  const int p = static_cast<int>(cover.base()->p());
  SwanClass out;
  auto pp = group::p_part(G, p);
  std::map<int, ZeroCycle> s;
  for (int sigma : pp) s[sigma] = swan_character_class(cover, sigma);
  for (int sigma : pp) {
    out.upstairs = out.upstairs + s[sigma] * group::swan_coeff(m, sigma, p);
    for (auto& [k, c] : s[sigma].terms()) {
      auto cur = out.naive.count(k) ? out.naive[k] : CyclotomicInt::integer(0);
      out.naive[k] = cur + c.numerator() * m.trace(sigma);
    }
  }
  // One term per cyclic p-subgroup, represented by its smallest generator.
  std::set<std::vector<int>> seen;
  for (int sigma : pp) {
    auto C = G.generated({sigma});
    if (!seen.insert(C).second) continue;
    int units = 0;
    for (int x : C) units += G.order(x) == static_cast<int>(C.size()) ? 1 : 0;
    out.integral = out.integral + s[sigma] * (group::swan_coeff(m, sigma, p) * units);
  }
  out.downstairs = pushforward(cover, out.upstairs) * Rational(1, G.size());
  for (auto& [k, c] : out.downstairs.terms()) {
    if (c.denominator() != 1 || c < 0) {
      throw IntegrityError("Swan coefficient " + swancalc::to_string(c) + " at " + cover.boundary()[static_cast<std::size_t>(k.point)].name(*cover.base()) +
                           " is not a natural number");
    }
  }
  out.naive_agrees = true;
  std::set<PlaceKey> keys;
  for (auto& [k, c] : out.naive) keys.insert(k);
  for (auto& [k, c] : out.upstairs.terms()) keys.insert(k);
  for (auto& k : keys) {
    Rational r = out.upstairs.coeff(k);
    auto it = out.naive.find(k);
    CyclotomicInt n = it == out.naive.end() ? CyclotomicInt::integer(0) : it->second;
    if (r.denominator() * n != CyclotomicInt::integer(r.numerator())) out.naive_agrees = false;
  }
  out.integral_agrees = out.integral == out.upstairs;
  out.pullback_image = pullback(cover, out.downstairs) == out.upstairs;
  out.local_agrees = true;
  for (int x = 0; x < static_cast<int>(cover.boundary().size()); ++x) {
    if (out.downstairs.coeff({x, 0}) != local_swan_conductor(cover.local(x), 0, m)) out.local_agrees = false;
  }
  return out;
}

}  // namespace swancalc::curve
