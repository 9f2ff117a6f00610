#pragma once

#include <map>
#include <string>
#include <utility>

#include "swancalc/exact/rational.hpp"

namespace swancalc::curve {

/// A boundary place: point index in the cover's boundary list, and the
/// place index above it (0 for points of the base).
struct PlaceKey {
  int point = 0;
  int place = 0;
  auto operator<=>(const PlaceKey&) const = default;
};

/// Finite formal sum of boundary places with rational coefficients. Each
/// place carries its residue degree over the base field for deg().
class ZeroCycle {
 public:
  void add(PlaceKey k, Rational c, int residue_degree = 1);
  Rational coeff(PlaceKey k) const;
  int residue_degree(PlaceKey k) const;
  Rational degree() const;
  bool is_zero() const { return c_.empty(); }
  const std::map<PlaceKey, Rational>& terms() const { return c_; }

  ZeroCycle operator+(const ZeroCycle& o) const;
  ZeroCycle operator-(const ZeroCycle& o) const;
  ZeroCycle operator*(const Rational& r) const;
  bool operator==(const ZeroCycle& o) const { return c_ == o.c_; }
  bool operator!=(const ZeroCycle& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<PlaceKey, Rational> c_;  // zero coefficients are never stored
  std::map<PlaceKey, int> f_;
};

}  // namespace swancalc::curve
