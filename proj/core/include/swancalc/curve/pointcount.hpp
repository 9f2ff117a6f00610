#pragma once

#include <cstdint>
#include <vector>

#include "swancalc/curve/cover.hpp"
#include "swancalc/exact/cyclotomic.hpp"

namespace swancalc::curve {

/// hist[m - 1][a]: number of points t of U over F_{q^m} whose Frobenius is
/// the group element a, for m = 1..max_m. Exhaustive enumeration.
std::vector<std::vector<std::int64_t>> frobenius_histogram(const Cover& cover, int max_m);

/// L-function of the rank-one sheaf of a character, read off from character
/// sums up to a horizon.
struct LFunction {
  std::vector<exact::CyclotomicInt> coeffs;  // c_0 .. c_horizon of exp(sum S_m T^m / m)
  int horizon = 0;
  int degree = -1;          // largest k <= horizon with c_k != 0
  bool settled = false;     // c_horizon == 0, so the degree is below the horizon
  bool pure = false;        // |c_deg|^2 == q^(deg - unramified boundary points)
  std::int64_t euler_char = 0;
};

/// chi is the exponent vector of a character of prod Z/n_i. For the trivial
/// character chi_c(U) is read from the point counts; otherwise chi_c = -deg L.
LFunction character_l_function(const Cover& cover, const std::vector<std::vector<std::int64_t>>& hist,
                               const std::vector<int>& chi);

/// Convenience: histogram up to expected_degree + 1, then the L-function.
LFunction character_l_function(const Cover& cover, const std::vector<int>& chi, int expected_degree);

}  // namespace swancalc::curve
