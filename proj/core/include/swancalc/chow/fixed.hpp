#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "swancalc/exact/field.hpp"

namespace swancalc::chow {

/// Polynomial in x, y: exponent pair -> coefficient.
struct BiPoly {
  const exact::Field* field = nullptr;
  std::map<std::pair<int, int>, exact::Elem> terms;
};

/// Colength of the ideal generated by f and g in the local ring k[[x, y]],
/// found as the first N <= max_order with dim k[x,y]/(I + m^N) stable from
/// N to N + 1 (then m^N lies in I). Throws PrecisionError if the colength
/// is still growing at max_order.
std::int64_t local_colength(const BiPoly& f, const BiPoly& g, int max_order);

/// Isolated fixed point of sigma(x, y) = (sx, sy) at the origin, compared
/// with the blown-up side: f_* (Gamma', Delta_{Y'}) = [O_{Y^sigma}] - [y].
struct IsolatedFixedReport {
  std::int64_t length = 0;       // colength of (sigma x - x, sigma y - y)
  std::int64_t predicted = 0;    // length - 1
  std::int64_t diagonal_term = 0;   // (Delta_E, Delta_E) = chi_top(P^1)
  std::int64_t segre_term = 0;      // {(1 + E)^{-2} E^2}_0 on the blow-up
  std::int64_t blowup_value = 0;    // length - diagonal_term - segre_term
  bool direct_available = false;    // log fixed part on the blow-up is empty
  std::int64_t direct_value = 0;
  bool consistent = false;
};

/// The linear part of sigma must be scalar, so that sigma lifts to the
/// blow-up acting trivially on the exceptional line.
IsolatedFixedReport isolated_fixed_report(const BiPoly& sx, const BiPoly& sy, int max_order);

}  // namespace swancalc::chow
