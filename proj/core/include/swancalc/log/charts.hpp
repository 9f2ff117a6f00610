#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace swancalc::logc {

/// Spec A[x_1..x_r] with some variables marked as divisor variables t_i.
struct MonomialChart {
  std::string name;
  std::vector<std::string> variables;
  std::vector<int> divisor;  // indices into variables
};
void validate(const MonomialChart& X);

/// f^* E_j = sum_i e_ij D_i; unit factors are only named.
struct MonomialMorphism {
  MonomialChart source, target;
  std::vector<std::vector<int>> exponents;  // [source divisor i][target divisor j]
  std::vector<std::string> units;
};
void validate(const MonomialMorphism& f);

/// Monomial in named generators, exponents may be negative (units).
using Monomial = std::map<std::string, int>;
std::string to_string(const Monomial& m);

/// lhs = rhs, read as lhs - rhs in the presented algebra.
struct Relation {
  Monomial lhs, rhs;
};
std::string to_string(const Relation& r);

/// (A (x) B)[U_i^{+-1}] / (t_i (x) 1 - U_i (1 (x) s_i)).
struct LogProduct {
  MonomialChart left, right;
  std::vector<std::string> generators;  // a(x)1, 1(x)b, then the units
  std::vector<std::string> units;
  std::vector<Relation> relations;
};
/// pairing[k] = (index into X.divisor, index into Y.divisor); must be a bijection.
LogProduct log_product_chart(const MonomialChart& X, const MonomialChart& Y, const std::vector<std::pair<int, int>>& pairing);

/// Map from the log product of X with itself back to A: a(x)1, 1(x)a -> a and U_i -> 1.
struct DiagonalMap {
  LogProduct product;
  std::map<std::string, Monomial> images;
};
DiagonalMap log_diagonal(const MonomialChart& X);
Monomial substitute(const Monomial& m, const std::map<std::string, Monomial>& images);
/// Every relation of the product maps to an identity.
bool satisfies_relations(const DiagonalMap& d);

/// Fiber group of the log product of the n-th power map with itself: the
/// roots of V^n = 1. Throws InputError when p | n.
struct TorsorGroup {
  int order = 0;
  std::vector<int> invariants;  // elementary divisors; {n} for a cyclic group
  bool separable = false;       // V^n - 1 has no repeated roots
  bool enumerated = false;      // roots counted in an explicit splitting field
  std::string name() const;
};
TorsorGroup mu_torsor_group(int n, std::uint32_t p);

/// Reduction of (v(x)1 / 1(x)v) prod U_k^{e_k} = 1 on the diagonal and over D_i.
struct RootBound {
  int component = 0;
  int order = 0;  // the intersection lies in mu_order
  std::string equation;
};
std::vector<RootBound> exceptional_roots(const std::vector<int>& multiplicities);

/// Components of the barycentric blow-up boundary are the nonempty subsets of
/// {0..m-1}; strata are chains. sigma is admissible when every component is
/// fixed or shares no chain with its image.
struct Admissibility {
  bool admissible = true;
  int components = 0;
  int fixed = 0;
  std::vector<std::uint32_t> witness;  // J and sigma(J) on one chain
};
Admissibility barycentric_admissibility(int m, const std::vector<int>& sigma);

}  // namespace swancalc::logc
