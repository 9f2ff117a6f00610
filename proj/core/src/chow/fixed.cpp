#include "swancalc/chow/fixed.hpp"

#include <vector>

#include "swancalc/chow/surface.hpp"
#include "swancalc/error.hpp"

namespace swancalc::chow {

using exact::Elem;
using exact::Field;

namespace {

int monomial_index(int a, int b) {
  const int d = a + b;
  return d * (d + 1) / 2 + b;
}

// dim k[x,y]/(f, g, m^N)
std::int64_t truncated_colength(const BiPoly& f, const BiPoly& g, int N) {
  const Field* F = f.field;
  const int n = N * (N + 1) / 2;
  // Rows in echelon form keyed by pivot, the lowest monomial index.
  std::vector<std::vector<Elem>> pivots(static_cast<std::size_t>(n));
  int rank = 0;
  for (const BiPoly* h : {&f, &g}) {
    for (int d = 0; d < N; ++d) {
      for (int b = 0; b <= d; ++b) {
        const int a = d - b;
        std::vector<Elem> row(static_cast<std::size_t>(n), 0);
        for (auto& [e, c] : h->terms) {
          const int i = e.first + a, j = e.second + b;
          if (i + j < N) row[static_cast<std::size_t>(monomial_index(i, j))] = F->add(row[static_cast<std::size_t>(monomial_index(i, j))], c);
        }
        for (int k = 0; k < n; ++k) {
          if (row[static_cast<std::size_t>(k)] == 0) continue;
          auto& pr = pivots[static_cast<std::size_t>(k)];
          if (pr.empty()) {
            const Elem inv = F->inv(row[static_cast<std::size_t>(k)]);
            for (auto& x : row) x = F->mul(x, inv);
            pr = std::move(row);
            ++rank;
            break;
          }
          const Elem c = row[static_cast<std::size_t>(k)];
          for (int l = k; l < n; ++l) row[static_cast<std::size_t>(l)] = F->sub(row[static_cast<std::size_t>(l)], F->mul(c, pr[static_cast<std::size_t>(l)]));
        }
      }
    }
  }
  return n - rank;
}

Elem coeff(const BiPoly& p, int a, int b) {
  auto it = p.terms.find({a, b});
  return it == p.terms.end() ? 0 : it->second;
}

BiPoly minus_variable(const BiPoly& s, int a, int b) {
  BiPoly r = s;
  const Field* F = s.field;
  Elem c = F->sub(coeff(s, a, b), F->one());
  if (c == 0) {
    r.terms.erase({a, b});
  } else {
    r.terms[{a, b}] = c;
  }
  return r;
}

}  // namespace

std::int64_t local_colength(const BiPoly& f, const BiPoly& g, int max_order) {
  if (f.field == nullptr || f.field != g.field) throw InputError("both series must live over the same field");
  std::int64_t prev = truncated_colength(f, g, 1);
  for (int N = 1; N < max_order; ++N) {
    const std::int64_t next = truncated_colength(f, g, N + 1);
    if (next == prev) return prev;
    prev = next;
  }
  throw PrecisionError("colength still growing at order " + std::to_string(max_order) + ": fixed locus is not isolated");
}

IsolatedFixedReport isolated_fixed_report(const BiPoly& sx, const BiPoly& sy, int max_order) {
  const Field* F = sx.field;
  if (F == nullptr || sy.field != F) throw InputError("sigma must be given over one field");
  if (coeff(sx, 0, 0) != 0 || coeff(sy, 0, 0) != 0) throw InputError("sigma must fix the origin");
  const Elem lambda = coeff(sx, 1, 0);
  if (lambda == 0 || coeff(sy, 0, 1) != lambda || coeff(sx, 0, 1) != 0 || coeff(sy, 1, 0) != 0) {
    throw UnsupportedError("only automorphisms with scalar linear part are compared with the blow-up");
  }
  IsolatedFixedReport r;
  try {
    r.length = local_colength(minus_variable(sx, 1, 0), minus_variable(sy, 0, 1), max_order);
  } catch (const PrecisionError&) {
    throw InputError("non-isolated fixed locus");
  }
  r.predicted = r.length - 1;
  // Exceptional line E = P^1 on the blow-up of P^2 at a point.
  SurfaceModel B = SurfaceModel::p2().blow_up("E");
  const Vec e{0, 1};
  r.diagonal_term = SurfaceModel::p1().chi_top();
  GradedClass one_plus = one(B);
  one_plus.c1 = e;
  GradedClass inv = inverse(B, one_plus);
  r.segre_term = degree(B, multiply(B, multiply(B, inv, inv), multiply(B, divisor(B, e), divisor(B, e))));
  r.blowup_value = r.length - r.diagonal_term - r.segre_term;
  // With lambda != 1 the log fixed part on the blow-up is empty: sigma'(u)/u - 1 is the unit lambda - 1.
  if (lambda != F->one()) {
    r.direct_available = true;
    r.direct_value = 0;
  }
  r.consistent = r.blowup_value == r.predicted && (!r.direct_available || r.direct_value == r.predicted);
  return r;
}

}  // namespace swancalc::chow
