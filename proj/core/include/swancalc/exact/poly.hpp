#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "swancalc/exact/field.hpp"

namespace swancalc::exact {

/// Dense univariate polynomial over a finite field, constant term first.
/// The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field* f) : f_(f) {}
  Poly(const Field* f, std::vector<Elem> c);

  static Poly constant(const Field* f, Elem c) { return Poly(f, {c}); }
  static Poly monomial(const Field* f, Elem c, int deg);
  static Poly x(const Field* f) { return monomial(f, f->one(), 1); }

  const Field* field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void normalize();
  const Field* f_ = nullptr;
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Square-free decomposition f = lead * prod g_i^i, returned as (g_i, i)
/// with g_i monic, square-free and pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Monic irreducible factors with multiplicity, in a canonical order
/// (degree, then coefficients).
std::vector<std::pair<Poly, int>> factor(const Poly& f);

/// Distinct roots in the coefficient field, ascending by code.
std::vector<Elem> roots(const Poly& f);

}  // namespace swancalc::exact
