#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swancalc/exact/field.hpp"

namespace swancalc::exact {

/// Element of Z[zeta_m], stored by its coefficients in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1} (reduced modulo the m-th cyclotomic
/// polynomial). Values with different m are compared and combined after
/// lifting both to the lcm.
class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(std::uint32_t m);
  CyclotomicInt(std::uint32_t m, std::vector<std::int64_t> coeffs);

  static CyclotomicInt integer(std::int64_t n, std::uint32_t m = 1);
  /// zeta_m^k.
  static CyclotomicInt zeta(std::uint32_t m, std::int64_t k);

  std::uint32_t modulus() const { return m_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_integer() const;
  /// The rational integer value; throws IntegrityError if not an integer.
  std::int64_t to_integer() const;

  /// Same value in Z[zeta_M], m | M.
  CyclotomicInt lifted(std::uint32_t M) const;
  /// zeta -> zeta^a, gcd(a, m) = 1.
  CyclotomicInt galois(std::int64_t a) const;
  CyclotomicInt conj() const { return galois(-1); }
  /// Exact division by a nonzero integer; throws if not divisible.
  CyclotomicInt divided(std::int64_t d) const;

  friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  friend CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& a);
  CyclotomicInt operator-() const;
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);
  friend bool operator!=(const CyclotomicInt& a, const CyclotomicInt& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void reduce(std::vector<std::int64_t> raw);
  std::uint32_t m_;
  std::vector<std::int64_t> c_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);
std::uint32_t euler_phi(std::uint32_t m);

/// The root of unity of order ord(a) lifting a nonzero a in F_{l^r}:
/// zeta_{q-1}^{log a}, with the logarithm taken to the field's generator.
CyclotomicInt teichmuller_lift(const Field& f, Elem a);

}  // namespace swancalc::exact
