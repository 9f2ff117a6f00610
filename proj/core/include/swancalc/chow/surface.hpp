#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swancalc::chow {

using Vec = std::vector<std::int64_t>;
using Matrix = std::vector<Vec>;

/// Numerical intersection data of a smooth projective curve or surface:
/// divisor classes in a fixed basis, the pairing on them, the canonical
/// class and the topological Euler characteristic (degree of c_d(T)).
/// For curves the basis is the single point class.
class SurfaceModel {
 public:
  SurfaceModel(std::string name, int dim, std::vector<std::string> basis, Matrix pairing, Vec canonical, std::int64_t chi_top,
               Vec ample = {});

  static SurfaceModel p1();
  static SurfaceModel p2();
  static SurfaceModel p1xp1();
  /// C x P^1 with C of genus g; basis f = {pt} x P^1, s = C x {pt}.
  static SurfaceModel curve_times_p1(int genus);
  /// Blow-up at a point: a new class E with E^2 = -1, orthogonal to the old
  /// basis, and K' = K + E.
  SurfaceModel blow_up(const std::string& exceptional = "") const;

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Matrix& pairing() const { return pairing_; }
  const Vec& canonical() const { return canonical_; }
  /// A class positive on every curve; empty when unknown.
  const Vec& ample() const { return ample_; }
  std::int64_t chi_top() const { return chi_top_; }
  std::int64_t dot(const Vec& a, const Vec& b) const;
  /// Number of positive and negative eigenvalues of the pairing.
  std::pair<int, int> signature() const;
  std::string class_name(const Vec& a) const;

 private:
  std::string name_;
  int dim_;
  std::vector<std::string> basis_;
  Matrix pairing_;
  Vec canonical_;
  std::int64_t chi_top_;
  Vec ample_;
};

/// c_0 + c_1 + c_2 with c_1 a divisor class and c_2 a multiple of the point
/// class (for curves c_1 is already top-dimensional and c_2 is unused).
struct GradedClass {
  std::int64_t c0 = 0;
  Vec c1;
  std::int64_t c2 = 0;
};

GradedClass one(const SurfaceModel& X);
GradedClass divisor(const SurfaceModel& X, const Vec& d);
GradedClass add(const SurfaceModel& X, const GradedClass& a, const GradedClass& b);
GradedClass multiply(const SurfaceModel& X, const GradedClass& a, const GradedClass& b);
/// (-1)^i on the codimension i part.
GradedClass dual(const GradedClass& a);
/// Inverse of a class with c_0 = 1.
GradedClass inverse(const SurfaceModel& X, const GradedClass& a);
/// Degree of the dimension 0 part.
std::int64_t degree(const SurfaceModel& X, const GradedClass& a);
std::string to_string(const SurfaceModel& X, const GradedClass& a);

/// Simple normal crossings boundary, components given by their classes.
struct BoundaryDivisor {
  std::vector<Vec> components;
  std::vector<std::string> names;
};

/// Sum of multiplicities times components; throws on negative entries.
Vec combination(const SurfaceModel& X, const BoundaryDivisor& D, const Vec& mult, const char* what);

/// Validates the boundary: classes of the right size, nonnegative pairwise
/// intersections, integral nonnegative genus by adjunction.
void validate_boundary(const SurfaceModel& X, const BoundaryDivisor& D);

/// c(Omega^1_X(log D)) = c(Omega^1_X) prod_i (1 - D_i)^{-1}.
GradedClass chern_log(const SurfaceModel& X, const BoundaryDivisor& D);

struct KatoDegree {
  std::int64_t value = 0;       // {c(Omega^1(log D))^* (1 + D_chi)^{-1} D_chi}_0
  std::int64_t coker_form = 0;  // (-1)^{d-1} sum sw_i deg c_{d-1}(Coker rsw_i)
  bool equal = false;
};
KatoDegree kato_class_degree(const SurfaceModel& X, const BoundaryDivisor& D, const Vec& sw);

struct DivisorialLefschetz {
  std::int64_t value = 0;      // with (1 + D_sigma)^{-1} D_sigma
  std::int64_t segre_form = 0;  // with the Segre class of D_sigma
  std::int64_t dual_form = 0;  // (-1)^{d-1} {c (1 - D_sigma)^{-1} D_sigma}_0
  bool equal = false;
};
DivisorialLefschetz log_lefschetz_divisorial(const SurfaceModel& Y, const BoundaryDivisor& D, const Vec& fixed_mult);

/// Pullback along a finite map f: Y -> X on divisor classes (column j is
/// f^* of basis class j of X) and its degree.
struct Pullback {
  Matrix classes;
  std::int64_t degree = 1;
};
/// (-1)^{d-1} [deg c_d(Omega^1_Y(log D)) - deg c_d(f^* Omega^1_X(log B))].
std::int64_t localized_chern_different_degree(const SurfaceModel& Y, const BoundaryDivisor& D, const SurfaceModel& X,
                                              const BoundaryDivisor& B, const Pullback& f);

}  // namespace swancalc::chow
