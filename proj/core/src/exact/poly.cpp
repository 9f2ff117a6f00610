#include "swancalc/exact/poly.hpp"

#include <algorithm>
#include <random>

#include "swancalc/error.hpp"

namespace swancalc::exact {

Poly::Poly(const Field* f, std::vector<Elem> c) : f_(f), c_(std::move(c)) { normalize(); }

Poly Poly::monomial(const Field* f, Elem c, int deg) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  const Field* f = f_ ? f_ : o.f_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->add((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
  return Poly(f, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  const Field* f = f_ ? f_ : o.f_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->sub((*this)[static_cast<int>(i)], o[static_cast<int>(i)]);
  return Poly(f, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const Field* f = f_ ? f_ : o.f_;
  if (c_.empty() || o.c_.empty()) return Poly(f);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f->add(r[i + j], f->mul(c_[i], o.c_[j]));
  }
  return Poly(f, std::move(r));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c);
  return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f_->inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Elem> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i % f_->p())));
  return Poly(f_, std::move(r));
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_->add(f_->mul(acc, x), *it);
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw InputError("polynomial division by zero");
  const Field* f = f_ ? f_ : d.f_;
  if (degree() < d.degree()) return {Poly(f), *this};
  std::vector<Elem> r = c_;
  std::vector<Elem> q(c_.size() - d.c_.size() + 1, 0);
  const Elem li = f->inv(d.lead());
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t i = r.size(); i-- > dd;) {
    Elem c = f->mul(r[i], li);
    if (!c) continue;
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] = f->sub(r[i - dd + j], f->mul(c, d.c_[j]));
  }
  r.resize(dd);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

namespace {

// g with g(x)^p = f(x); f must have only exponents divisible by p.
Poly pth_root_poly(const Poly& f) {
  const Field* F = f.field();
  const int p = static_cast<int>(F->p());
  std::vector<Elem> r(f.degree() / p + 1, 0);
  for (int i = 0; i <= f.degree(); i += p) r[i / p] = F->pth_root(f[i]);
  return Poly(F, std::move(r));
}

void sqf_rec(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  const Field* F = f.field();
  if (f.degree() <= 0) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one() && c.degree() > 0) sqf_rec(pth_root_poly(c.monic()), mult * static_cast<int>(F->p()), out);
}

// f square-free and monic; returns (g_d) with g_d the product of the
// degree-d irreducible factors.
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Field* F = f.field();
  Poly h = Poly::x(F) % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, F->q(), f);
    Poly g = gcd(f, h - Poly::x(F));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

// Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field* F = f.field();
  std::uniform_int_distribution<std::uint64_t> dist(0, F->q() - 1);
  for (;;) {
    std::vector<Elem> rc(f.degree());
    for (auto& c : rc) c = dist(rng);
    Poly a(F, rc);
    if (a.degree() <= 0) continue;
    Poly b;
    if (F->p() == 2) {
      // Absolute trace map to F_2 of F_{q^d}.
      const int steps = F->k() * d;
      Poly t = a % f, acc = t;
      for (int i = 1; i < steps; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}.
      Poly t = a % f, acc = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, F->q(), f);
        acc = (acc * t) % f;
      }
      b = powmod(acc, (F->q() - 1) / 2, f) - Poly::constant(F, 1);
    }
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.is_zero()) throw InputError("square-free decomposition of zero");
  sqf_rec(f.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return canonical_less(a.first, b.first);
  });
  return out;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [g, m] : squarefree_decomposition(f)) {
    for (auto& [h, d] : distinct_degree(g)) {
      std::vector<Poly> parts;
      equal_degree(h, d, rng, parts);
      for (auto& part : parts) out.emplace_back(part, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

std::vector<Elem> roots(const Poly& f) {
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<Elem> out;
  if (f.degree() <= 0) return out;
  const Field* F = f.field();
  Poly m = f.monic();
  Poly g = gcd(m, powmod(Poly::x(F), F->q(), m) - Poly::x(F));
  if (g.degree() <= 0) return out;
  std::mt19937_64 rng(0x5eed);
  std::vector<Poly> lin;
  equal_degree(g, 1, rng, lin);
  for (auto& l : lin) out.push_back(F->neg(l[0]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace swancalc::exact
