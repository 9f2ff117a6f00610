#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "swancalc/exact/cyclotomic.hpp"
#include "swancalc/exact/rational.hpp"

namespace swancalc::group {

using exact::CyclotomicInt;

/// Finite group given by its multiplication table, at most 128 elements.
class FiniteGroup {
 public:
  /// table[a * n + b] = a * b. Checks closure, identity, inverses and
  /// associativity (exhaustively).
  FiniteGroup(int n, std::vector<int> table, std::vector<std::string> names = {});

  /// Z/n_1 x ... x Z/n_r; element index = a_1 + n_1 (a_2 + n_2 (...)).
  static FiniteGroup abelian(const std::vector<int>& orders);
  static FiniteGroup cyclic(int n) { return abelian({n}); }
  /// Symmetric group on k <= 4 letters, permutations in lexicographic order.
  static FiniteGroup symmetric(int k);
  /// Dihedral group of order 2n: r^i s^j at index i + n j.
  static FiniteGroup dihedral(int n);

  int size() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int order(int a) const { return ord_[static_cast<std::size_t>(a)]; }
  int pow(int a, std::int64_t k) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  bool is_abelian() const;
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }

  /// Sorted element list of the subgroup generated by gens.
  std::vector<int> generated(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& h) const;
  /// All subgroups, each sorted, in a deterministic order.
  std::vector<std::vector<int>> subgroups() const;
  /// Smallest-index representative of each left coset gH, in increasing order.
  std::vector<int> left_transversal(const std::vector<int>& h) const;

  /// For abelian(orders): the exponent vector of an element, and back.
  const std::vector<int>& abelian_orders() const { return orders_; }
  std::vector<int> coords(int a) const;
  int from_coords(const std::vector<int>& v) const;

 private:
  int n_;
  std::vector<int> table_;
  int e_ = 0;
  std::vector<int> inv_, ord_;
  std::vector<std::string> names_;
  std::vector<int> orders_;
};

/// Elements of p-power order, identity included, increasing.
std::vector<int> p_part(const FiniteGroup& g, int p);

/// Representation recorded by its Brauer character: values[a] is the lift of
/// the trace of element a (meaningful for elements of order prime to ell).
class BrauerRep {
 public:
  BrauerRep(const FiniteGroup* g, int ell, std::vector<CyclotomicInt> values);

  static BrauerRep trivial(const FiniteGroup* g, int ell, int dim = 1);
  static BrauerRep regular(const FiniteGroup* g, int ell);
  /// Character of abelian(orders): a -> prod zeta_{n_i}^{k_i a_i}.
  static BrauerRep character(const FiniteGroup* g, int ell, const std::vector<int>& k);
  /// Direct sum.
  BrauerRep operator+(const BrauerRep& o) const;

  const FiniteGroup& group() const { return *g_; }
  int ell() const { return ell_; }
  int dim() const { return dim_; }
  const CyclotomicInt& trace(int a) const;
  const std::vector<CyclotomicInt>& values() const { return v_; }

 private:
  const FiniteGroup* g_;
  int ell_;
  int dim_;
  std::vector<CyclotomicInt> v_;
};

/// dim M^sigma as the average of the character over <sigma>.
int fixed_dim(const BrauerRep& m, int sigma);
/// dim M^sigma - (dim M^{sigma^p} - dim M^sigma) / (p - 1), sigma in G_(p).
Rational swan_coeff(const BrauerRep& m, int sigma, int p);
/// |(Z/p^e)^x| swan_coeff(M, sigma) == sum over units i of Tr(sigma^i).
bool brauer_identity_check(const BrauerRep& m, int sigma, int p);
/// dim (Ind_H^G M)^sigma by the transversal formula; m is a rep of
/// subgroup_as_group(g, h), whose element i is h[i].
int induced_fixed_dim(const FiniteGroup& g, const std::vector<int>& h, const BrauerRep& m, int sigma);

/// Subgroup h of g as a group in its own right, with h[i] the image of i.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& h);

}  // namespace swancalc::group
