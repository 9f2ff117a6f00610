#pragma once

#include <cstdint>
#include <vector>

#include "swancalc/curve/cover.hpp"
#include "swancalc/rank1/kato.hpp"

namespace swancalc::rank1 {

/// Second factor W of U = U_C x W inside X = P^1 x P^1.
enum class Fiber { P1, A1, Gm };

const char* fiber_name(Fiber w);

/// pr^* F_chi on U_C x W for the character chi = psi^a of a one-layer cover
/// of P^1 (Artin-Schreier, or Kummer for the tame case). Components: the
/// fibers {x} x P^1 over the boundary points, in boundary order, then the
/// horizontal P^1 x {0}, P^1 x {inf} removed by W.
RankOneData fibration_data(const curve::Cover& cover, int a, Fiber w = Fiber::P1);

struct FibrationResult {
  std::vector<std::int64_t> lhs;  // per component: Sw of the pullback, from the curve
  std::vector<std::int64_t> rhs;  // per component: c_F from the Swan divisor
  std::int64_t lhs_degree = 0;
  std::int64_t rhs_degree = 0;
  bool equal = false;
};
FibrationResult theorem_5_check(const curve::Cover& cover, int a);

struct LaumonResult {
  std::vector<std::int64_t> sw;        // Sw_i per boundary component
  std::vector<std::int64_t> chi_b;     // chi of the normalized component
  std::vector<std::int64_t> s_degree;  // part of deg S_F carried by the component
  std::int64_t s_total = 0;
  std::int64_t chi_u = 0;              // chi_c(U)
  std::int64_t formula = 0;            // chi_c(U, F) from the reformulated Laumon formula
  std::int64_t oracle = 0;             // chi_c(U_C, F) chi_c(W) from point counts
  bool oracle_valid = false;
  bool equal = false;
};
LaumonResult laumon_decomposition(const curve::Cover& cover, int a, Fiber w);

}  // namespace swancalc::rank1
