#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swancalc/exact/embedding.hpp"
#include "swancalc/exact/series.hpp"

namespace swancalc::local {

using exact::Elem;
using exact::Field;
using exact::Series;

enum class LayerKind { ArtinSchreier, Kummer };

/// One layer z^p - z = g (Artin-Schreier, degree p) or z^e = g (Kummer,
/// p not dividing e). g = num(tau) / den(tau) * prod_j z_j^{var_exps[j]},
/// with num and den exact Laurent polynomials in the local parameter tau and
/// z_j the variables of the earlier layers.
struct LocalLayer {
  LayerKind kind = LayerKind::ArtinSchreier;
  int degree = 0;
  Series num;
  Series den;
  std::vector<int> var_exps;
};

/// Default relative precision (coefficients) of every series computation.
constexpr std::int64_t kDefaultPrecision = 64;
/// kDefaultPrecision, or SWANCALC_PRECISION from the environment.
std::int64_t default_precision();

/// Group element of prod Z/n_i as its exponent vector.
using GroupVec = std::vector<int>;

enum class StepType { Split, Inert, RamifiedAS, KummerUnramified, KummerRamified };

/// What one layer did along one branch, with its series over the branch's
/// final residue field. Series named "in stage" use the uniformizer before
/// the step, "down" gives that uniformizer in terms of the one after.
struct StepRecord {
  LayerKind kind = LayerKind::ArtinSchreier;
  StepType type = StepType::Split;
  int degree = 0;
  Series down;
  // Artin-Schreier data: z = c + r + w (unramified) or z = c + gamma*Pi^-m.
  Series c;
  Elem r = 0;
  Series w;
  Elem gamma = 0;
  std::int64_t m = 0;
  // Kummer data: y = z^{e'} * pi^{-v'}, Pi = z^beta * pi^alpha.
  Series y;
  std::int64_t e_prime = 1, v_prime = 0, alpha = 0, beta = 0;
  Elem zeta = 0;  // fixed primitive e-th root of unity (image in residue field)
};

/// One place of the extension over the closed point.
struct Place {
  const Field* residue = nullptr;  // residue field
  exact::Embedding from_base;      // base field -> residue field
  int e = 1;                       // ramification index
  int f = 1;                       // residue degree over the base field
  Series tau;                      // local parameter of the base in terms of Pi
  std::vector<Series> z;           // layer variables in terms of Pi
  std::vector<StepRecord> steps;
  std::vector<int> path;           // branch choice per layer
  std::vector<Series> stage_unif;  // uniformizer after stage s (s = 0..r) in terms of Pi
  std::vector<int> stage_e;        // ramification index of stage s over the base
};

/// Action of a Galois element on the uniformizer of a place.
struct LocalAutomorphism {
  GroupVec sigma;
  Series image;  // sigma(Pi)
  std::int64_t j = 0;  // ord(sigma(Pi)/Pi - 1); 0 for the identity
};

struct PlaceInvariants {
  std::int64_t d_log = 0;  // wild different, via ord(d tau / d Pi) - (e - 1)
  std::vector<LocalAutomorphism> inertia;  // including the identity, first
};

/// Finite extension of F((tau)) given by a tower of layers.
class LocalExtension {
 public:
  /// Builds all places at relative precision `prec`. Galois data is computed
  /// when every layer is Galois over the base (no var_exps and Kummer
  /// degrees dividing q - 1).
  LocalExtension(const Field* base, std::vector<LocalLayer> layers, std::int64_t prec);

  const Field* base() const { return base_; }
  const std::vector<LocalLayer>& layers() const { return layers_; }
  std::int64_t precision() const { return prec_; }
  bool is_galois() const { return galois_; }
  std::vector<int> group_orders() const;
  int degree() const;

  const std::vector<Place>& places() const { return places_; }
  const PlaceInvariants& invariants(std::size_t place) const { return inv_.at(place); }
  /// Inertia elements, common to all places (abelian).
  std::vector<GroupVec> inertia_group() const;
  int ramification_index() const { return places_.front().e; }
  int residue_degree() const { return places_.front().f; }
  std::int64_t wild_different() const { return inv_.front().d_log; }
  /// j(sigma) for sigma in the inertia group; 0 for elements outside it.
  std::int64_t log_fixed_length(const GroupVec& sigma) const;

  /// Kahler route on place i: ord(d tau_s / d Pi) - (e_{Pi/s} - 1) for the
  /// stage s uniformizer tau_s, i.e. the wild different over stage s.
  std::int64_t wild_different_over_stage(std::size_t place, std::size_t stage) const;

  /// Try to extend sigma to an automorphism fixing the place; nullopt when
  /// sigma is not in the inertia group there.
  std::optional<Series> act(std::size_t place, const GroupVec& sigma) const;

 private:
  void build();
  void compute_galois();

  const Field* base_;
  std::vector<LocalLayer> layers_;
  std::int64_t prec_;
  bool galois_ = false;
  Elem zeta_base_ = 0;
  std::vector<Place> places_;
  std::vector<PlaceInvariants> inv_;
};

/// Invariants that must be reproduced exactly at doubled precision.
struct LocalSummary {
  int places = 0;
  int e = 0;
  int f = 0;
  std::int64_t d_log = 0;
  std::vector<std::pair<GroupVec, std::int64_t>> j;
  bool operator==(const LocalSummary&) const = default;
};
LocalSummary summarize(const LocalExtension& ext);

/// Builds at prec and at 2 * prec; throws PrecisionError unless the
/// summaries agree. Returns the extension at prec.
LocalExtension build_stable(const Field* base, const std::vector<LocalLayer>& layers, std::int64_t prec);

}  // namespace swancalc::local
