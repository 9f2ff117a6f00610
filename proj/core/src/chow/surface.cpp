#include "swancalc/chow/surface.hpp"

#include <sstream>

#include "swancalc/error.hpp"
#include "swancalc/exact/rational.hpp"

namespace swancalc::chow {

SurfaceModel::SurfaceModel(std::string name, int dim, std::vector<std::string> basis, Matrix pairing, Vec canonical,
                           std::int64_t chi_top, Vec ample)
    : name_(std::move(name)), dim_(dim), basis_(std::move(basis)), pairing_(std::move(pairing)),
      canonical_(std::move(canonical)), chi_top_(chi_top), ample_(std::move(ample)) {
  if (dim_ != 1 && dim_ != 2) throw InputError("models are curves or surfaces");
  const std::size_t n = basis_.size();
  if (n == 0 || pairing_.size() != n || canonical_.size() != n) throw InputError("model data of inconsistent size");
  if (dim_ == 1 && n != 1) throw InputError("a curve model has the point class as its only basis element");
  if (!ample_.empty() && ample_.size() != n) throw InputError("ample class has the wrong number of coordinates");
  for (std::size_t i = 0; i < n; ++i) {
    if (pairing_[i].size() != n) throw InputError("intersection matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (pairing_[i][j] != pairing_[j][i]) throw InputError("intersection matrix is not symmetric");
    }
  }
  // Hodge index theorem.
  if (dim_ == 2) {
    auto [pos, neg] = signature();
    if (pos != 1 || pos + neg != static_cast<int>(n)) throw InputError("intersection matrix does not have signature (1, n-1)");
  }
}

SurfaceModel SurfaceModel::p1() { return SurfaceModel("P1", 1, {"pt"}, {{0}}, {-2}, 2); }

SurfaceModel SurfaceModel::p2() { return SurfaceModel("P2", 2, {"h"}, {{1}}, {-3}, 3, {1}); }

SurfaceModel SurfaceModel::p1xp1() { return SurfaceModel("P1xP1", 2, {"f1", "f2"}, {{0, 1}, {1, 0}}, {-2, -2}, 4, {1, 1}); }

SurfaceModel SurfaceModel::curve_times_p1(int genus) {
  if (genus < 0) throw InputError("negative genus");
  return SurfaceModel("C" + std::to_string(genus) + "xP1", 2, {"f", "s"}, {{0, 1}, {1, 0}}, {2 * genus - 2, -2},
                      2 * (2 - 2 * static_cast<std::int64_t>(genus)), {1, 1});
}

SurfaceModel SurfaceModel::blow_up(const std::string& exceptional) const {
  if (dim_ != 2) throw InputError("only surfaces are blown up");
  const std::size_t n = rank();
  auto basis = basis_;
  basis.push_back(exceptional.empty() ? "E" + std::to_string(n) : exceptional);
  Matrix m(n + 1, Vec(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = pairing_[i][j];
  }
  m[n][n] = -1;
  Vec k = canonical_;
  k.push_back(1);
  // 4A - E stays ample for the few blow-ups the catalog uses.
  Vec a;
  if (!ample_.empty()) {
    for (auto x : ample_) a.push_back(4 * x);
    a.push_back(-1);
  }
  std::string name = name_ + "+" + basis.back();
  return SurfaceModel(std::move(name), 2, std::move(basis), std::move(m), std::move(k), chi_top_ + 1, std::move(a));
}

std::int64_t SurfaceModel::dot(const Vec& a, const Vec& b) const {
  if (a.size() != rank() || b.size() != rank()) throw InputError("class has the wrong number of coordinates");
  if (dim_ == 1) return 0;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * pairing_[i][j] * b[j];
  }
  return s;
}

std::pair<int, int> SurfaceModel::signature() const {
  // Symmetric elimination over Q; a zero pivot is fixed by adding a later row and column.
  const std::size_t n = rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(pairing_[i][j]);
  }
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == Rational(0)) {
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a[k][r] != Rational(0)) {
          // e_k += c e_r with c chosen so the new diagonal is nonzero
          Rational c(1);
          if (a[k][k] + Rational(2) * c * a[k][r] + c * c * a[r][r] == Rational(0)) c = Rational(2);
          for (std::size_t j = 0; j < n; ++j) a[k][j] += c * a[r][j];
          for (std::size_t j = 0; j < n; ++j) a[j][k] += c * a[j][r];
          break;
        }
      }
    }
    if (a[k][k] == Rational(0)) continue;
    (a[k][k] > Rational(0) ? pos : neg)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
  }
  return {pos, neg};
}

std::string SurfaceModel::class_name(const Vec& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << (a[i] > 0 ? "+" : "");
    if (a[i] == -1) {
      os << "-";
    } else if (a[i] != 1) {
      os << a[i];
    }
    os << basis_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GradedClass one(const SurfaceModel& X) { return {1, Vec(X.rank(), 0), 0}; }

GradedClass divisor(const SurfaceModel& X, const Vec& d) {
  if (d.size() != X.rank()) throw InputError("divisor class has the wrong number of coordinates");
  return {0, d, 0};
}

GradedClass add(const SurfaceModel& X, const GradedClass& a, const GradedClass& b) {
  GradedClass r{a.c0 + b.c0, Vec(X.rank(), 0), a.c2 + b.c2};
  for (std::size_t i = 0; i < X.rank(); ++i) r.c1[i] = a.c1[i] + b.c1[i];
  return r;
}

GradedClass multiply(const SurfaceModel& X, const GradedClass& a, const GradedClass& b) {
  GradedClass r{a.c0 * b.c0, Vec(X.rank(), 0), 0};
  for (std::size_t i = 0; i < X.rank(); ++i) r.c1[i] = a.c0 * b.c1[i] + b.c0 * a.c1[i];
  if (X.dim() == 2) r.c2 = a.c0 * b.c2 + b.c0 * a.c2 + X.dot(a.c1, b.c1);
  return r;
}

GradedClass dual(const GradedClass& a) {
  GradedClass r = a;
  for (auto& x : r.c1) x = -x;
  return r;
}

GradedClass inverse(const SurfaceModel& X, const GradedClass& a) {
  if (a.c0 != 1) throw InputError("only classes with constant term 1 are inverted");
  // (1 + x)^{-1} = 1 - x + x^2 with x of positive codimension
  GradedClass x = a;
  x.c0 = 0;
  GradedClass x2 = multiply(X, x, x);
  GradedClass r = one(X);
  for (std::size_t i = 0; i < X.rank(); ++i) r.c1[i] = -x.c1[i];
  r.c2 = -x.c2 + x2.c2;
  return r;
}

std::int64_t degree(const SurfaceModel& X, const GradedClass& a) { return X.dim() == 1 ? a.c1[0] : a.c2; }

std::string to_string(const SurfaceModel& X, const GradedClass& a) {
  std::ostringstream os;
  os << a.c0 << " + [" << X.class_name(a.c1) << "]";
  if (X.dim() == 2) os << " + " << a.c2 << "pt";
  return os.str();
}

Vec combination(const SurfaceModel& X, const BoundaryDivisor& D, const Vec& mult, const char* what) {
  if (mult.size() != D.components.size()) throw InputError(std::string(what) + ": one multiplicity per boundary component");
  Vec r(X.rank(), 0);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] < 0) throw InputError(std::string(what) + ": negative multiplicity");
    for (std::size_t k = 0; k < X.rank(); ++k) r[k] += mult[i] * D.components[i][k];
  }
  return r;
}

void validate_boundary(const SurfaceModel& X, const BoundaryDivisor& D) {
  for (auto& c : D.components) {
    if (c.size() != X.rank()) throw InputError("boundary component has the wrong number of coordinates");
    if (X.dim() == 1) {
      if (c[0] != 1) throw InputError("boundary components of a curve are rational points");
      continue;
    }
    if (!X.ample().empty() && X.dot(X.ample(), c) <= 0) throw InputError("boundary component " + X.class_name(c) + " is not effective");
    const std::int64_t twice_g_minus_2 = X.dot(c, c) + X.dot(X.canonical(), c);
    if (twice_g_minus_2 < -2 || twice_g_minus_2 % 2 != 0) {
      throw InputError("boundary component " + X.class_name(c) + " is not a smooth curve");
    }
  }
  if (X.dim() == 2) {
    for (std::size_t i = 0; i < D.components.size(); ++i) {
      for (std::size_t j = i + 1; j < D.components.size(); ++j) {
        if (X.dot(D.components[i], D.components[j]) < 0) throw InputError("boundary components meet negatively");
      }
    }
  }
}

GradedClass chern_log(const SurfaceModel& X, const BoundaryDivisor& D) {
  validate_boundary(X, D);
  GradedClass c{1, X.canonical(), X.dim() == 2 ? X.chi_top() : 0};
  for (auto& di : D.components) {
    GradedClass f = one(X);
    f.c1 = di;
    f.c2 = X.dot(di, di);  // (1 - D)^{-1} = 1 + D + D^2
    c = multiply(X, c, f);
  }
  return c;
}

KatoDegree kato_class_degree(const SurfaceModel& X, const BoundaryDivisor& D, const Vec& sw) {
  KatoDegree r;
  const Vec dchi = combination(X, D, sw, "Swan multiplicities");
  const GradedClass c = chern_log(X, D);
  GradedClass one_plus = one(X);
  one_plus.c1 = dchi;
  GradedClass cls = multiply(X, multiply(X, dual(c), inverse(X, one_plus)), divisor(X, dchi));
  r.value = degree(X, cls);
  // Coker of O(-D_chi)|D_i -> Omega^1(log D)|D_i has c_1 = c_1(Omega^1(log D))|D_i + D_chi|D_i;
  // for curves the cokernel is zero and c_0 = 1.
  std::int64_t s = 0;
  for (std::size_t i = 0; i < sw.size(); ++i) {
    if (sw[i] == 0) continue;
    const auto& di = D.components[i];
    const std::int64_t cd1 = X.dim() == 1 ? 1 : X.dot(c.c1, di) + X.dot(dchi, di);
    s += sw[i] * cd1;
  }
  r.coker_form = X.dim() == 1 ? s : -s;
  r.equal = r.value == r.coker_form;
  return r;
}

DivisorialLefschetz log_lefschetz_divisorial(const SurfaceModel& Y, const BoundaryDivisor& D, const Vec& fixed_mult) {
  DivisorialLefschetz r;
  const Vec ds = combination(Y, D, fixed_mult, "fixed divisor");
  const GradedClass c = chern_log(Y, D);
  GradedClass plus = one(Y), minus = one(Y);
  plus.c1 = ds;
  for (std::size_t i = 0; i < ds.size(); ++i) minus.c1[i] = -ds[i];
  r.value = degree(Y, multiply(Y, multiply(Y, dual(c), inverse(Y, plus)), divisor(Y, ds)));
  // s(D/Y) = D - D^2 + ... for a Cartier divisor
  GradedClass segre = divisor(Y, ds);
  segre.c2 = -Y.dot(ds, ds);
  r.segre_form = degree(Y, multiply(Y, dual(c), segre));
  const std::int64_t sign = Y.dim() % 2 == 1 ? 1 : -1;
  r.dual_form = sign * degree(Y, multiply(Y, multiply(Y, c, inverse(Y, minus)), divisor(Y, ds)));
  r.equal = r.value == r.segre_form && r.value == r.dual_form;
  return r;
}

std::int64_t localized_chern_different_degree(const SurfaceModel& Y, const BoundaryDivisor& D, const SurfaceModel& X,
                                              const BoundaryDivisor& B, const Pullback& f) {
  if (X.dim() != Y.dim()) throw InputError("pullback between models of different dimension");
  if (f.degree < 1) throw InputError("pullback degree must be positive");
  if (f.classes.size() != Y.rank()) throw InputError("pullback matrix has the wrong number of rows");
  for (auto& row : f.classes) {
    if (row.size() != X.rank()) throw InputError("pullback matrix has the wrong number of columns");
  }
  auto pull = [&](const Vec& a) {
    Vec r(Y.rank(), 0);
    for (std::size_t i = 0; i < Y.rank(); ++i) {
      for (std::size_t j = 0; j < X.rank(); ++j) r[i] += f.classes[i][j] * a[j];
    }
    return r;
  };
  std::vector<Vec> unit(X.rank(), Vec(X.rank(), 0));
  for (std::size_t j = 0; j < X.rank(); ++j) unit[j][j] = 1;
  for (std::size_t a = 0; a < X.rank() && X.dim() == 2; ++a) {
    for (std::size_t b = 0; b < X.rank(); ++b) {
      if (Y.dot(pull(unit[a]), pull(unit[b])) != f.degree * X.dot(unit[a], unit[b])) {
        throw InputError("pullback data inconsistent with the intersection matrices");
      }
    }
  }
  GradedClass cx = chern_log(X, B);
  GradedClass cy = chern_log(Y, D);
  GradedClass pulled{cx.c0, pull(cx.c1), f.degree * cx.c2};
  const std::int64_t top = X.dim() == 1 ? cy.c1[0] - f.degree * cx.c1[0] : cy.c2 - pulled.c2;
  return X.dim() % 2 == 1 ? top : -top;
}

}  // namespace swancalc::chow
