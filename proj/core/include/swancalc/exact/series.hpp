#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "swancalc/exact/embedding.hpp"
#include "swancalc/exact/field.hpp"

namespace swancalc::exact {

/// Truncated Laurent series sum c_i t^i over a finite field, known modulo
/// t^prec (absolute precision). prec == kExact marks a Laurent polynomial
/// known exactly. A series with no stored coefficients is either the exact
/// zero or an unknown O(t^prec).
class Series {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  Series() = default;
  explicit Series(const Field* f) : f_(f) {}
  /// Coefficients c[i] at t^{val + i}.
  Series(const Field* f, std::int64_t val, std::vector<Elem> c, std::int64_t prec = kExact);

  static Series zero(const Field* f) { return Series(f); }
  static Series big_oh(const Field* f, std::int64_t prec) { return Series(f, 0, {}, prec); }
  static Series constant(const Field* f, Elem c) { return Series(f, 0, {c}); }
  static Series monomial(const Field* f, Elem c, std::int64_t deg) { return Series(f, deg, {c}); }
  static Series t(const Field* f) { return monomial(f, f->one(), 1); }

  const Field* field() const { return f_; }
  bool is_exact() const { return prec_ >= kExact; }
  /// True for the exact zero only.
  bool is_zero() const { return c_.empty() && is_exact(); }
  /// True when no coefficient below the precision is nonzero.
  bool is_unknown_zero() const { return c_.empty() && !is_exact(); }
  std::int64_t prec() const { return prec_; }
  /// Relative precision prec - ord; kExact for exact series.
  std::int64_t rel_prec() const;
  /// Valuation; throws PrecisionError when it is not determined.
  std::int64_t ord() const;
  Elem lead() const;
  Elem coeff(std::int64_t i) const;
  std::int64_t first() const { return val_; }
  std::int64_t last() const { return val_ + static_cast<std::int64_t>(c_.size()); }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series scaled(Elem c) const;
  Series shifted(std::int64_t k) const;  // times t^k

  /// Multiplicative inverse. Exact non-monomial inputs are expanded to
  /// relative precision cap.
  Series inverse(std::int64_t cap) const;
  Series div(const Series& o, std::int64_t cap) const { return (*this) * o.inverse(cap); }
  Series pow(std::int64_t n, std::int64_t cap) const;
  /// f(g) for g of positive valuation.
  Series compose(const Series& g, std::int64_t cap) const;
  Series derivative() const;
  /// The m-th root with constant term 1 of a series with constant term 1,
  /// p not dividing m; m may be negative.
  Series unit_root(std::int64_t m, std::int64_t cap) const;
  Series truncated(std::int64_t rel) const;
  Series with_prec(std::int64_t prec) const;
  Series mapped(const Embedding& e) const;

  /// Equal on their common range of known coefficients.
  bool agrees(const Series& o) const;
  std::string to_string(int max_terms = 8) const;

 private:
  void normalize();
  const Field* f_ = nullptr;
  std::int64_t val_ = 0;
  std::vector<Elem> c_;
  std::int64_t prec_ = kExact;
};

/// Solve phi(x) = r for x, where phi(x) = x * unit and r has positive
/// valuation; the answer is a series in the variable of r.
Series solve_series(const Series& phi, const Series& r, std::int64_t cap);

}  // namespace swancalc::exact
