#pragma once

#include <cstdint>
#include <vector>

#include "swancalc/curve/cover.hpp"
#include "swancalc/curve/pointcount.hpp"

namespace swancalc::curve {

/// Euler characteristic of the rank-one sheaf of a character chi: the
/// Swan-class prediction rank * chi_c(U) - deg Sw against the L-function.
struct GosResult {
  std::int64_t swan_degree = 0;
  std::int64_t predicted = 0;
  std::int64_t oracle = 0;
  bool oracle_valid = false;  // degree settled below the horizon and purity holds
  bool equal = false;
};
GosResult gos_check(const Cover& cover, const std::vector<int>& chi);
/// Same, with point counts already taken.
GosResult gos_check(const Cover& cover, const std::vector<std::vector<std::int64_t>>& hist, const std::vector<int>& chi);

/// Trace of sigma != 1 on H^*_c(V): the character decomposition
/// sum_chi conj(chi(sigma)) chi_c(U, F_chi) with point-count Euler
/// characteristics, against sum_y j_y(sigma) f_y.
struct TraceResult {
  exact::CyclotomicInt lhs;
  std::int64_t rhs = 0;
  bool equal = false;
};
TraceResult trace_formula_check(const Cover& cover, int sigma);

/// Tower V -> V' -> U with V' given by the first `split` layers.
struct ChainResult {
  ZeroCycle different;        // D_{V/U}
  ZeroCycle different_split;  // D_{V/V'} + g^* D_{V'/U}
  ZeroCycle discriminant;     // d_{V/U}
  ZeroCycle discriminant_split;  // [V:V'] d_{V'/U} + h_* d_{V/V'}
  bool different_equal = false;
  bool discriminant_equal = false;
};
ChainResult chain_rule_check(const Cover& tower, std::size_t split);

/// Sheaf on U' = V/H for H the product of the layers listed in h_layers:
/// either a character of H (exponents per listed layer) or the trivial
/// sheaf of rank `rank`.
struct SheafOnSubcover {
  std::vector<int> h_layers;
  std::vector<int> chi;  // empty: trivial
  int rank = 1;
};
struct InductionResult {
  ZeroCycle upstairs_lhs, upstairs_rhs;      // Sw_{V/U}(h_* F) and its transversal form
  ZeroCycle downstairs_lhs, downstairs_rhs;  // Sw(h_* F) and h_* Sw(F) + rank d_{U'/U}
  ZeroCycle wild_discriminant;               // d_{U'/U}
  bool upstairs_equal = false;
  bool downstairs_equal = false;
  bool trivial_case = false;  // F trivial of rank 1: Sw(h_* F) == d_{U'/U}
};
InductionResult induction_check(const Cover& cover, const SheafOnSubcover& sheaf);

/// Power correspondence x = y^N on A^1 over F_q, twisted by Fr^n.
struct DeligneResult {
  std::int64_t lhs = 0;  // Tr(Fr^n Gamma^* | H^*_c(A^1))
  std::int64_t rhs = 0;  // roots of y^{q^n} - y^N with multiplicity
  bool equal = false;
};
DeligneResult deligne_check(int N, std::uint64_t q, int n);

}  // namespace swancalc::curve
