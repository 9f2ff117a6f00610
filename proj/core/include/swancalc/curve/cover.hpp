#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "swancalc/curve/cycle.hpp"
#include "swancalc/exact/field.hpp"
#include "swancalc/group/group.hpp"
#include "swancalc/local/extension.hpp"

namespace swancalc::curve {

using exact::Elem;
using exact::Field;
using exact::FieldPtr;
using local::LayerKind;

/// num / den with coefficients in the base field, constant term first.
struct RationalFunction {
  std::vector<Elem> num{1};
  std::vector<Elem> den{1};
};

/// num / den in lowest terms with monic denominator.
RationalFunction reduced(const Field* base, const RationalFunction& g);

/// z^p - z = g (Artin-Schreier) or z^e = g (Kummer), g = g(t) * prod z_j^{var_exps[j]}.
struct CoverLayer {
  LayerKind kind = LayerKind::ArtinSchreier;
  int degree = 0;
  RationalFunction g;
  std::vector<int> var_exps;
};

/// Rational point of P^1: t = a, or infinity.
struct BoundaryPoint {
  bool infinity = false;
  Elem a = 0;
  auto operator<=>(const BoundaryPoint&) const = default;
  std::string name(const Field& f) const;
};

/// One place of the smooth compactification over a boundary point.
struct PlaceData {
  int e = 1;
  int f = 1;  // residue degree over the base field
  std::int64_t d_log = 0;
  std::vector<int> inertia;             // group elements, increasing (Galois covers only)
  std::map<int, std::int64_t> j;        // j(sigma) for sigma in inertia
  std::vector<int> path;                // branch choices, shared with intermediate covers
};

/// Covering of P^1 over F_q, etale outside the boundary points, built as a
/// tower of Kummer and Artin-Schreier layers.
class Cover {
 public:
  Cover(FieldPtr base, std::vector<CoverLayer> layers, std::vector<BoundaryPoint> boundary,
        std::int64_t prec = local::default_precision());

  const Field* base() const { return base_.get(); }
  const FieldPtr& base_ptr() const { return base_; }
  const std::vector<CoverLayer>& layers() const { return layers_; }
  const std::vector<BoundaryPoint>& boundary() const { return boundary_; }
  std::int64_t precision() const { return prec_; }
  int degree() const;
  /// Galois with group prod Z/n_i: no layer refers to earlier variables and
  /// every Kummer degree divides q - 1.
  bool is_galois() const { return galois_; }
  const group::FiniteGroup& group() const;
  /// chi_c of P^1 minus the boundary.
  int euler_char_base() const { return 2 - static_cast<int>(boundary_.size()); }

  int point_index(const BoundaryPoint& x) const;
  const local::LocalExtension& local(int point) const { return *local_.at(static_cast<std::size_t>(point)); }
  /// Places above boundary point `point`, in branch order.
  const std::vector<PlaceData>& places(int point) const { return places_.at(static_cast<std::size_t>(point)); }

  /// Cover given by the first `s` layers, same boundary and precision.
  Cover prefix(std::size_t s) const;
  /// Same cover with its layers permuted (new layer i = old layer perm[i]).
  Cover reordered(const std::vector<int>& perm) const;

  /// Bad points of g for a layer (poles; for Kummer also zeros).
  std::vector<BoundaryPoint> branch_locus(std::size_t layer) const;

 private:
  FieldPtr base_;
  std::vector<CoverLayer> layers_;
  std::vector<BoundaryPoint> boundary_;
  std::int64_t prec_;
  bool galois_ = false;
  std::unique_ptr<group::FiniteGroup> group_;
  std::vector<std::shared_ptr<local::LocalExtension>> local_;
  std::vector<std::vector<PlaceData>> places_;
};

/// Local layers at a boundary point, in the local parameter t - a or 1/t.
std::vector<local::LocalLayer> local_layers(const Field* base, const std::vector<CoverLayer>& layers, const BoundaryPoint& x);

/// Places above point x with e, f, inertia and j.
const std::vector<PlaceData>& decompose_places(const Cover& cover, const BoundaryPoint& x);

/// s(1) = sum D^log_y [y]; s(sigma) = -sum_{sigma in I_y} j_y(sigma) [y].
ZeroCycle swan_character_class(const Cover& cover, int sigma);

/// f_*: places upstairs to boundary points (coefficients times residue degree).
ZeroCycle pushforward(const Cover& cover, const ZeroCycle& up);
/// f^*: boundary points to places (coefficients times e).
ZeroCycle pullback(const Cover& cover, const ZeroCycle& down);

struct SwanClass {
  ZeroCycle upstairs;    // sum over G_(p) of swan_coeff * s(sigma)
  ZeroCycle downstairs;  // (1/|G|) f_* upstairs
  ZeroCycle integral;    // sum over cyclic p-subgroups, C = {1} included
  std::map<PlaceKey, exact::CyclotomicInt> naive;  // sum s(sigma) Tr(sigma)
  bool naive_agrees = false;
  bool integral_agrees = false;
  bool pullback_image = false;  // upstairs == f^* downstairs
  bool local_agrees = false;    // downstairs == local Swan conductors
};

/// Swan classes of the sheaf given by the representation m of the Galois group.
/// Throws IntegrityError if a downstairs coefficient is not a natural number.
SwanClass swan_class(const Cover& cover, const group::BrauerRep& m);

/// (1/|I|) [D^log dim M - sum_{sigma in I, sigma != 1} j(sigma) Tr(sigma)] at one
/// place; m is a representation of the abelian group of the extension.
std::int64_t local_swan_conductor(const local::LocalExtension& ext, std::size_t place, const group::BrauerRep& m);

}  // namespace swancalc::curve
