#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace swancalc::exact {

/// Elements of F_{p^k} are encoded as the integer sum a_i p^i of their
/// coordinates in the basis 1, x, ..., x^{k-1} of F_p[x]/(modulus).
using Elem = std::uint64_t;

/// The finite field F_{p^k}. Instances are immutable and shared; obtain
/// them through make_field so that equal (p, k) give the same object.
class Field {
 public:
  Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t q() const { return q_; }
  /// Monic defining polynomial, constant term first, size k + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const;
  /// The class of x in F_p[x]/(modulus).
  Elem x() const { return k_ == 1 ? Elem{0} : Elem{p_}; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t n) const;
  Elem scale(Elem a, std::uint32_t c) const;  // c in F_p

  /// Smallest (by code) element of multiplicative order q - 1.
  Elem generator() const { return generator_; }
  std::uint64_t order(Elem a) const;
  /// Discrete logarithm to the base generator(); a must be nonzero.
  std::uint64_t log(Elem a) const;
  Elem exp(std::uint64_t n) const;
  bool has_tables() const { return !exp_table_.empty(); }

  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// The unique b with b^p = a.
  Elem pth_root(Elem a) const;
  /// Absolute trace to F_p.
  std::uint32_t trace(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;
  std::string to_string(Elem a) const;
  bool is_valid(Elem a) const { return a < q_; }

  /// Distinct prime factors of q - 1.
  const std::vector<std::uint64_t>& unit_group_primes() const { return unit_primes_; }

 private:
  Elem mul_poly(Elem a, Elem b) const;
  Elem pow_poly(Elem a, std::uint64_t n) const;
  void build_tables();

  std::uint32_t p_;
  int k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> pw_;  // p^i
  std::vector<std::uint32_t> basis_trace_;
  std::vector<std::uint64_t> unit_primes_;
  Elem generator_ = 1;
  std::vector<std::uint32_t> log_table_;
  std::vector<std::uint32_t> exp_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Deterministic descriptor for F_{p^k}: the modulus is the smallest monic
/// irreducible of degree k, ordered lexicographically from the x^{k-1}
/// coefficient down. Throws InputError for non-prime p, k outside [1, 12]
/// or p^k beyond 2^40.
FieldPtr make_field(std::uint32_t p, int k);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Value wrapper used at API boundaries and in tests.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field* f, Elem v) : f_(f), v_(v) {}

  const Field* field() const { return f_; }
  Elem code() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend FieldElement operator+(FieldElement a, FieldElement b) { return {a.f_, a.f_->add(a.v_, b.v_)}; }
  friend FieldElement operator-(FieldElement a, FieldElement b) { return {a.f_, a.f_->sub(a.v_, b.v_)}; }
  friend FieldElement operator*(FieldElement a, FieldElement b) { return {a.f_, a.f_->mul(a.v_, b.v_)}; }
  friend FieldElement operator/(FieldElement a, FieldElement b) { return {a.f_, a.f_->div(a.v_, b.v_)}; }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  FieldElement inverse() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(std::int64_t n) const { return {f_, f_->pow(v_, n)}; }
  friend bool operator==(FieldElement a, FieldElement b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  const Field* f_ = nullptr;
  Elem v_ = 0;
};

}  // namespace swancalc::exact
