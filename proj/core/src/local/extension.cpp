#include "swancalc/local/extension.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "swancalc/error.hpp"
#include "swancalc/exact/poly.hpp"

namespace swancalc::local {

using exact::Embedding;
using exact::Poly;

std::int64_t default_precision() {
  if (const char* env = std::getenv("SWANCALC_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 8 && v <= 4096) return v;
    throw InputError(std::string("SWANCALC_PRECISION must be an integer in [8, 4096], got '") + env + "'");
  }
  return kDefaultPrecision;
}

namespace {

// x^p for a series: exponents and precision scale by p, coefficients by Frobenius.
Series frobenius(const Series& h) {
  const Field* K = h.field();
  const std::int64_t p = K->p();
  if (h.is_zero()) return h;
  if (h.is_unknown_zero()) return Series::big_oh(K, h.prec() * p);
  std::vector<Elem> c(static_cast<std::size_t>((h.last() - h.first() - 1) * p + 1), 0);
  for (std::int64_t i = h.first(); i < h.last(); ++i) c[static_cast<std::size_t>((i - h.first()) * p)] = K->frobenius(h.coeff(i));
  return Series(K, h.first() * p, std::move(c), h.is_exact() ? Series::kExact : h.prec() * p);
}

// (x, y) with a x + b y = 1 for coprime a, b (b may be negative).
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r != 1) throw IntegrityError("bezout on non-coprime integers");
  return {old_s, old_t};
}

const Field* extend_field(const Field* K, int f) {
  if (f == 1) return K;
  int k = K->k() * f;
  if (k > 12) throw UnsupportedError("residue field F_" + std::to_string(K->p()) + "^" + std::to_string(k) + " exceeds the supported degree 12");
  // Fields are cached for the lifetime of the process, so raw pointers stay valid.
  return exact::make_field(K->p(), k).get();
}

void map_step(StepRecord& s, const Embedding& e) {
  s.down = s.down.mapped(e);
  s.c = s.c.mapped(e);
  s.w = s.w.mapped(e);
  s.y = s.y.mapped(e);
  s.r = e(s.r);
  s.gamma = e(s.gamma);
  s.zeta = e(s.zeta);
}

void map_place(Place& b, const Embedding& e) {
  if (e.source() == e.target()) return;
  b.residue = e.target();
  b.from_base = e.after(b.from_base);
  b.tau = b.tau.mapped(e);
  for (auto& z : b.z) z = z.mapped(e);
  for (auto& u : b.stage_unif) u = u.mapped(e);
  for (auto& s : b.steps) map_step(s, e);
}

void substitute(Place& b, const Series& down, std::int64_t cap) {
  b.tau = b.tau.compose(down, cap);
  for (auto& z : b.z) z = z.compose(down, cap);
  for (auto& u : b.stage_unif) u = u.compose(down, cap);
}

Series layer_value(const LocalLayer& L, const Place& b, std::int64_t cap) {
  const Field* K = b.residue;
  Series num = L.num.mapped(b.from_base).compose(b.tau, cap);
  Series den = L.den.mapped(b.from_base).compose(b.tau, cap);
  Series h = num.div(den, cap);
  for (std::size_t j = 0; j < L.var_exps.size(); ++j) {
    if (L.var_exps[j] == 0) continue;
    if (j >= b.z.size()) throw InputError("layer refers to a later variable");
    h = h * b.z[j].pow(L.var_exps[j], cap);
  }
  (void)K;
  return h.truncated(cap);
}

void finish_child(Place& child, StepRecord rec, const Series& z, int branch, int e_step, std::int64_t cap, const Field* base) {
  substitute(child, rec.down, cap);
  child.z.push_back(z.truncated(cap));
  child.steps.push_back(std::move(rec));
  child.path.push_back(branch);
  child.e *= e_step;
  child.stage_unif.push_back(Series::t(child.residue));
  child.stage_e.push_back(child.e);
  child.f = child.residue->k() / base->k();
}

std::vector<Place> apply_artin_schreier(const Place& b, const LocalLayer& L, std::int64_t cap, const Field* base) {
  const Field* K = b.residue;
  const std::int64_t p = K->p();
  if (L.degree != p) throw InputError("Artin-Schreier layer degree must equal the characteristic");
  Series h = layer_value(L, b, cap);
  Series c = Series::zero(K);
  // Strip p-th power poles: h -> h - (T^p - T), z -> z - T.
  for (;;) {
    if (h.is_zero() || h.is_unknown_zero()) break;
    std::int64_t v = h.ord();
    if (v >= 0 || v % p != 0) break;
    Elem a = h.lead();
    Series T = Series::monomial(K, K->pth_root(a), v / p);
    h = h - Series::monomial(K, a, v) + T;
    c = c + T;
  }
  std::vector<Place> out;
  if (!h.is_zero() && !h.is_unknown_zero() && h.ord() < 0) {
    const std::int64_t m = -h.ord();
    const Elem a = h.lead();
    const Elem gamma = K->pth_root(a);
    Series U = h.shifted(m).scaled(K->inv(a));
    Series phi = U.unit_root(-m, cap).shifted(1);
    std::vector<Elem> inner(static_cast<std::size_t>(m * (p - 1) + 1), 0);
    inner[0] = 1;
    inner.back() = K->neg(K->pow(gamma, 1 - p));
    Series R = Series(K, 0, inner).unit_root(-m, cap).shifted(p);
    StepRecord rec;
    rec.kind = LayerKind::ArtinSchreier;
    rec.type = StepType::RamifiedAS;
    rec.degree = static_cast<int>(p);
    rec.down = exact::solve_series(phi, R, cap);
    rec.c = c;
    rec.gamma = gamma;
    rec.m = m;
    Series z = c.is_zero() ? Series::monomial(K, gamma, -m) : c.compose(rec.down, cap) + Series::monomial(K, gamma, -m);
    Place child = b;
    finish_child(child, std::move(rec), z, 0, static_cast<int>(p), cap, base);
    out.push_back(std::move(child));
    return out;
  }
  if (h.is_unknown_zero() && h.prec() < 1) throw PrecisionError("Artin-Schreier constant term not determined");
  const Elem h0 = (h.is_zero() || h.is_unknown_zero()) ? 0 : h.coeff(0);
  Series H = h - Series::constant(K, h0);
  Series w = Series::zero(K);
  // w = -(H + H^p + H^{p^2} + ...), cut at absolute order cap.
  for (Series term = H; !term.is_zero();) {
    if (term.is_unknown_zero() || term.ord() >= cap) {
      w = w.with_prec(std::min(term.prec(), cap));
      break;
    }
    w = w - term;
    term = frobenius(term);
  }
  auto eqn = [&](const Field* F, Elem c0) {
    std::vector<Elem> coef(static_cast<std::size_t>(p) + 1, 0);
    coef[0] = F->neg(c0);
    coef[1] = F->neg(F->one());
    coef[static_cast<std::size_t>(p)] = F->one();
    return Poly(F, coef);
  };
  auto rs = exact::roots(eqn(K, h0));
  if (!rs.empty()) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      StepRecord rec;
      rec.kind = LayerKind::ArtinSchreier;
      rec.type = StepType::Split;
      rec.degree = static_cast<int>(p);
      rec.down = Series::t(K);
      rec.c = c;
      rec.r = rs[i];
      rec.w = w;
      Place child = b;
      Series z = c + Series::constant(K, rs[i]) + w;
      finish_child(child, std::move(rec), z, static_cast<int>(i), 1, cap, base);
      out.push_back(std::move(child));
    }
    return out;
  }
  const Field* K2 = extend_field(K, static_cast<int>(p));
  Embedding e = exact::canonical_embedding(K, K2);
  Place child = b;
  map_place(child, e);
  auto rs2 = exact::roots(eqn(K2, e(h0)));
  if (rs2.empty()) throw IntegrityError("Artin-Schreier residue equation has no root in the degree-p extension");
  StepRecord rec;
  rec.kind = LayerKind::ArtinSchreier;
  rec.type = StepType::Inert;
  rec.degree = static_cast<int>(p);
  rec.down = Series::t(K2);
  rec.c = c.mapped(e);
  rec.r = rs2.front();
  rec.w = w.mapped(e);
  Series z = rec.c + Series::constant(K2, rec.r) + rec.w;
  finish_child(child, std::move(rec), z, 0, 1, cap, base);
  out.push_back(std::move(child));
  return out;
}

std::vector<Place> apply_kummer(const Place& b, const LocalLayer& L, Elem zeta_base, std::int64_t cap, const Field* base) {
  const Field* K = b.residue;
  const std::int64_t e = L.degree;
  if (e < 1 || e % static_cast<std::int64_t>(K->p()) == 0) throw InputError("Kummer degree must be prime to p");
  Series h = layer_value(L, b, cap);
  if (h.is_zero()) throw InputError("Kummer layer with zero right-hand side");
  const std::int64_t v = h.ord();
  const std::int64_t d = std::gcd(e, v < 0 ? -v : v) == 0 ? e : std::gcd(e, v < 0 ? -v : v);
  const std::int64_t ep = e / d, vp = v / d;
  Series U = h.shifted(-v);
  const Elem U0 = U.lead();
  Series U1 = U.scaled(K->inv(U0));
  std::vector<Elem> coef(static_cast<std::size_t>(d) + 1, 0);
  coef[0] = K->neg(U0);
  coef[static_cast<std::size_t>(d)] = K->one();
  auto factors = exact::factor(Poly(K, coef));
  std::vector<Place> out;
  int branch = 0;
  for (auto& [g, mult] : factors) {
    if (mult != 1) throw IntegrityError("X^d - U0 is not separable");
    const Field* K2 = extend_field(K, g.degree());
    Embedding emb = exact::canonical_embedding(K, K2);
    std::vector<Elem> gc;
    for (auto c : g.coeffs()) gc.push_back(emb(c));
    auto rs = exact::roots(Poly(K2, gc));
    if (rs.empty()) throw IntegrityError("irreducible factor has no root in its splitting field");
    Place child = b;
    map_place(child, emb);
    StepRecord rec;
    rec.kind = LayerKind::Kummer;
    rec.degree = static_cast<int>(e);
    rec.e_prime = ep;
    rec.v_prime = vp;
    rec.zeta = emb(zeta_base);
    rec.y = U1.mapped(emb).unit_root(d, cap).scaled(rs.front());
    Series z;
    if (ep == 1) {
      rec.type = StepType::KummerUnramified;
      rec.down = Series::t(K2);
      z = rec.y.shifted(vp);
    } else {
      rec.type = StepType::KummerRamified;
      auto [alpha, beta] = bezout(ep, vp);
      rec.alpha = alpha;
      rec.beta = beta;
      Series psi = rec.y.pow(beta, cap).shifted(1);
      rec.down = exact::solve_series(psi, Series::monomial(K2, K2->one(), ep).with_prec(ep + cap), cap);
      z = rec.y.compose(rec.down, cap).pow(alpha, cap).shifted(vp);
    }
    finish_child(child, std::move(rec), z, branch++, static_cast<int>(ep), cap, base);
    out.push_back(std::move(child));
  }
  return out;
}

}  // namespace

LocalExtension::LocalExtension(const Field* base, std::vector<LocalLayer> layers, std::int64_t prec)
    : base_(base), layers_(std::move(layers)), prec_(prec) {
  if (prec_ < 4) throw InputError("precision must be at least 4");
  galois_ = true;
  for (auto& L : layers_) {
    for (int x : L.var_exps) {
      if (x != 0) galois_ = false;
    }
    if (L.kind == LayerKind::Kummer && (base_->q() - 1) % static_cast<std::uint64_t>(L.degree) != 0) galois_ = false;
    if (L.num.field() == nullptr) L.num = Series::constant(base_, 1);
    if (L.den.field() == nullptr) L.den = Series::constant(base_, 1);
  }
  build();
  if (galois_) compute_galois();
}

std::vector<int> LocalExtension::group_orders() const {
  std::vector<int> out;
  for (auto& L : layers_) out.push_back(L.degree);
  return out;
}

int LocalExtension::degree() const {
  int d = 1;
  for (auto& L : layers_) d *= L.degree;
  return d;
}

void LocalExtension::build() {
  Place root;
  root.residue = base_;
  root.from_base = exact::identity_embedding(base_);
  root.tau = Series::t(base_);
  root.stage_unif.push_back(Series::t(base_));
  root.stage_e.push_back(1);
  std::vector<Place> cur{root};
  for (auto& L : layers_) {
    Elem zeta = 0;
    if (L.kind == LayerKind::Kummer && (base_->q() - 1) % static_cast<std::uint64_t>(L.degree) == 0) {
      zeta = base_->pow(base_->generator(), static_cast<std::int64_t>((base_->q() - 1) / static_cast<std::uint64_t>(L.degree)));
    }
    std::vector<Place> next;
    for (auto& b : cur) {
      auto kids = L.kind == LayerKind::ArtinSchreier ? apply_artin_schreier(b, L, prec_, base_)
                                                     : apply_kummer(b, L, zeta, prec_, base_);
      for (auto& k : kids) next.push_back(std::move(k));
    }
    cur = std::move(next);
  }
  places_ = std::move(cur);
  int total = 0;
  for (auto& pl : places_) total += pl.e * pl.f;
  if (total != degree()) {
    throw IntegrityError("sum of e*f over places is " + std::to_string(total) + ", expected the degree " + std::to_string(degree()));
  }
}

std::optional<Series> LocalExtension::act(std::size_t place, const GroupVec& sigma) const {
  const Place& pl = places_.at(place);
  const Field* K = pl.residue;
  const std::int64_t cap = prec_;
  if (sigma.size() != layers_.size()) throw InputError("group element has the wrong length");
  Series S = Series::t(K);
  for (std::size_t s = 0; s < pl.steps.size(); ++s) {
    const StepRecord& rec = pl.steps[s];
    const int a = sigma[s];
    switch (rec.type) {
      case StepType::Split:
      case StepType::Inert: {
        Series lhs = Series::constant(K, K->neg(K->from_int(a)));
        if (!rec.c.is_zero()) lhs = lhs + rec.c.compose(S, cap) - rec.c;
        if (!rec.w.is_zero()) lhs = lhs + rec.w.compose(S, cap) - rec.w;
        if (!lhs.is_zero() && !lhs.is_unknown_zero()) return std::nullopt;
        break;
      }
      case StepType::RamifiedAS: {
        Series SD = S.compose(rec.down, cap);
        Series numer = Series::constant(K, K->from_int(a));
        if (!rec.c.is_zero()) numer = numer + rec.c.compose(rec.down, cap) - rec.c.compose(SD, cap);
        Series rho = Series::constant(K, 1) + numer.shifted(rec.m).scaled(K->inv(rec.gamma));
        if (rho.ord() != 0) return std::nullopt;
        const Elem u0 = rho.lead();
        if (S.ord() != 1) return std::nullopt;
        const Elem lambda = K->pth_root(S.lead());
        if (K->pow(lambda, -rec.m) != u0) return std::nullopt;
        Series SPi = rho.scaled(K->inv(u0)).unit_root(-rec.m, cap).scaled(lambda).shifted(1);
        if (!rec.down.compose(SPi, cap).agrees(SD)) return std::nullopt;
        S = SPi;
        break;
      }
      case StepType::KummerUnramified:
      case StepType::KummerRamified: {
        const Elem za = K->pow(rec.zeta, a);
        Series lhs = rec.y.compose(S, cap);
        Series rhs = rec.y.scaled(K->pow(za, rec.e_prime)) * Series::t(K).div(S, cap).pow(rec.v_prime, cap);
        if (!lhs.agrees(rhs)) return std::nullopt;
        if (rec.type == StepType::KummerRamified) {
          Series SD = S.compose(rec.down, cap);
          Series SPi = SD.div(rec.down, cap).pow(rec.alpha, cap).scaled(K->pow(za, rec.beta)).shifted(1);
          if (!rec.down.compose(SPi, cap).agrees(SD)) return std::nullopt;
          S = SPi;
        }
        break;
      }
    }
    S = S.truncated(cap);
  }
  if (!pl.tau.compose(S, cap).agrees(pl.tau)) return std::nullopt;
  return S;
}

void LocalExtension::compute_galois() {
  const auto orders = group_orders();
  const int n = degree();
  inv_.assign(places_.size(), {});
  for (std::size_t i = 0; i < places_.size(); ++i) {
    const Place& pl = places_[i];
    PlaceInvariants& iv = inv_[i];
    Series dtau = pl.tau.derivative();
    iv.d_log = dtau.ord() - (pl.e - 1);
    for (int idx = 0; idx < n; ++idx) {
      GroupVec sigma(orders.size());
      int r = idx;
      for (std::size_t l = 0; l < orders.size(); ++l) {
        sigma[l] = r % orders[l];
        r /= orders[l];
      }
      bool identity = std::all_of(sigma.begin(), sigma.end(), [](int x) { return x == 0; });
      auto img = act(i, sigma);
      if (!img) {
        if (identity) throw IntegrityError("identity failed to act on its own place");
        continue;
      }
      LocalAutomorphism a;
      a.sigma = sigma;
      a.image = *img;
      if (!identity) {
        Series diff = img->div(Series::t(pl.residue), prec_) - Series::constant(pl.residue, 1);
        if (diff.is_zero()) throw IntegrityError("non-identity element acts trivially on the uniformizer");
        a.j = diff.ord();
      }
      iv.inertia.push_back(std::move(a));
    }
    if (static_cast<int>(iv.inertia.size()) != pl.e) {
      throw IntegrityError("inertia group has order " + std::to_string(iv.inertia.size()) + " but e = " + std::to_string(pl.e));
    }
  }
}

std::vector<GroupVec> LocalExtension::inertia_group() const {
  std::vector<GroupVec> out;
  if (inv_.empty()) throw UnsupportedError("Galois data is only available for Galois towers");
  for (auto& a : inv_.front().inertia) out.push_back(a.sigma);
  return out;
}

std::int64_t LocalExtension::log_fixed_length(const GroupVec& sigma) const {
  if (inv_.empty()) throw UnsupportedError("Galois data is only available for Galois towers");
  for (auto& a : inv_.front().inertia) {
    if (a.sigma == sigma) return a.j;
  }
  return 0;
}

std::int64_t LocalExtension::wild_different_over_stage(std::size_t place, std::size_t stage) const {
  const Place& pl = places_.at(place);
  const Series& u = pl.stage_unif.at(stage);
  const int e_rel = pl.e / pl.stage_e.at(stage);
  if (stage + 1 == pl.stage_unif.size()) return 0;
  return u.derivative().ord() - (e_rel - 1);
}

LocalSummary summarize(const LocalExtension& ext) {
  LocalSummary s;
  s.places = static_cast<int>(ext.places().size());
  s.e = ext.ramification_index();
  s.f = ext.residue_degree();
  if (ext.is_galois()) {
    s.d_log = ext.wild_different();
    for (auto& a : ext.invariants(0).inertia) s.j.emplace_back(a.sigma, a.j);
  } else {
    s.d_log = ext.wild_different_over_stage(0, 0);
  }
  return s;
}

LocalExtension build_stable(const Field* base, const std::vector<LocalLayer>& layers, std::int64_t prec) {
  LocalExtension a(base, layers, prec);
  LocalExtension b(base, layers, 2 * prec);
  if (!(summarize(a) == summarize(b))) {
    throw PrecisionError("unstable precision: results at " + std::to_string(prec) + " and " + std::to_string(2 * prec) + " coefficients differ");
  }
  return a;
}

}  // namespace swancalc::local
