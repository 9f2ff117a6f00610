#include "swancalc/log/charts.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "swancalc/error.hpp"
#include "swancalc/exact/field.hpp"
#include "swancalc/exact/poly.hpp"

namespace swancalc::logc {

namespace {

Monomial product(Monomial a, const Monomial& b) {
  for (auto& [g, e] : b) {
    if ((a[g] += e) == 0) a.erase(g);
  }
  return a;
}

std::string left(const std::string& v) { return v + "(x)1"; }
std::string right(const std::string& v) { return "1(x)" + v; }

int multiplicative_order(std::uint64_t q, int n) {
  if (n == 1) return 1;
  std::uint64_t x = q % static_cast<std::uint64_t>(n);
  for (int k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = x * q % static_cast<std::uint64_t>(n);
  }
  return 0;
}

exact::Poly x_power_minus_one(const exact::Field* K, int n) {
  std::vector<exact::Elem> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = K->neg(K->one());
  c.back() = K->one();
  return exact::Poly(K, c);
}

}  // namespace

void validate(const MonomialChart& X) {
  std::set<std::string> names(X.variables.begin(), X.variables.end());
  if (names.size() != X.variables.size()) throw InputError("chart " + X.name + " repeats a variable");
  std::set<int> seen;
  for (int i : X.divisor) {
    if (i < 0 || i >= static_cast<int>(X.variables.size())) throw InputError("chart " + X.name + ": divisor index out of range");
    if (!seen.insert(i).second) throw InputError("chart " + X.name + ": divisor variables must be distinct");
  }
}

void validate(const MonomialMorphism& f) {
  validate(f.source);
  validate(f.target);
  if (f.exponents.size() != f.source.divisor.size()) throw InputError("exponent matrix needs one row per source divisor");
  for (auto& row : f.exponents) {
    if (row.size() != f.target.divisor.size()) throw InputError("exponent matrix needs one column per target divisor");
    for (int e : row) {
      if (e < 0) throw InputError("pullback of a boundary divisor must be effective");
    }
  }
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (auto& [g, e] : m) {
    if (!s.empty()) s += "*";
    s += g;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const Relation& r) { return to_string(r.lhs) + " - " + to_string(r.rhs); }

LogProduct log_product_chart(const MonomialChart& X, const MonomialChart& Y, const std::vector<std::pair<int, int>>& pairing) {
  validate(X);
  validate(Y);
  if (X.divisor.size() != Y.divisor.size() || pairing.size() != X.divisor.size()) {
    throw InputError("log product needs matching divisor families");
  }
  std::set<int> a, b;
  for (auto [i, j] : pairing) {
    if (i < 0 || i >= static_cast<int>(X.divisor.size()) || j < 0 || j >= static_cast<int>(Y.divisor.size()) ||
        !a.insert(i).second || !b.insert(j).second) {
      throw InputError("divisor pairing is not one-to-one");
    }
  }
  LogProduct P{X, Y, {}, {}, {}};
  for (auto& v : X.variables) P.generators.push_back(left(v));
  for (auto& v : Y.variables) P.generators.push_back(right(v));
  for (std::size_t k = 0; k < pairing.size(); ++k) {
    const std::string u = "U" + std::to_string(k + 1);
    P.units.push_back(u);
    P.generators.push_back(u + "^+-1");
    const auto& t = X.variables[static_cast<std::size_t>(X.divisor[static_cast<std::size_t>(pairing[k].first)])];
    const auto& s = Y.variables[static_cast<std::size_t>(Y.divisor[static_cast<std::size_t>(pairing[k].second)])];
    P.relations.push_back({{{left(t), 1}}, {{u, 1}, {right(s), 1}}});
  }
  return P;
}

DiagonalMap log_diagonal(const MonomialChart& X) {
  std::vector<std::pair<int, int>> id;
  for (int i = 0; i < static_cast<int>(X.divisor.size()); ++i) id.push_back({i, i});
  DiagonalMap d{log_product_chart(X, X, id), {}};
  for (auto& v : X.variables) {
    d.images[left(v)] = {{v, 1}};
    d.images[right(v)] = {{v, 1}};
  }
  for (auto& u : d.product.units) d.images[u] = {};
  return d;
}

Monomial substitute(const Monomial& m, const std::map<std::string, Monomial>& images) {
  Monomial r;
  for (auto& [g, e] : m) {
    auto it = images.find(g);
    if (it == images.end()) throw InputError("generator " + g + " has no image");
    for (int k = 0; k < std::abs(e); ++k) {
      Monomial img = it->second;
      if (e < 0) {
        for (auto& [h, f] : img) f = -f;
      }
      r = product(r, img);
    }
  }
  return r;
}

bool satisfies_relations(const DiagonalMap& d) {
  for (auto& rel : d.product.relations) {
    if (substitute(rel.lhs, d.images) != substitute(rel.rhs, d.images)) return false;
  }
  return true;
}

std::string TorsorGroup::name() const {
  if (order == 1) return "1";
  std::string s;
  for (int k : invariants) s += (s.empty() ? "Z/" : " x Z/") + std::to_string(k);
  return s;
}

TorsorGroup mu_torsor_group(int n, std::uint32_t p) {
  if (n < 1) throw InputError("power map exponent must be positive");
  if (n % static_cast<int>(p) == 0) throw InputError("power map exponent " + std::to_string(n) + " is not invertible in characteristic " + std::to_string(p));
  TorsorGroup g;
  auto Fp = exact::make_field(p, 1);
  const auto f = x_power_minus_one(Fp.get(), n);
  g.separable = exact::gcd(f, f.derivative()).degree() == 0;
  if (!g.separable) throw IntegrityError("V^n - 1 is inseparable although p does not divide n");
  // Separable of degree n: n roots in the algebraic closure, a finite subgroup
  // of a multiplicative group, hence cyclic.
  g.order = n;
  g.invariants = {n};
  const int k = multiplicative_order(p, n);
  exact::FieldPtr L;
  try {
    L = exact::make_field(p, k);
  } catch (const InputError&) {
    return g;  // splitting field too large to enumerate
  }
  const auto roots = exact::roots(x_power_minus_one(L.get(), n));
  if (static_cast<int>(roots.size()) != n) throw IntegrityError("V^n - 1 does not split in its splitting field");
  std::uint64_t top = 1;
  for (auto r : roots) top = std::max<std::uint64_t>(top, n == 1 ? 1 : L->order(r));
  if (static_cast<int>(top) != n) throw IntegrityError("roots of unity do not form a cyclic group");
  g.enumerated = true;
  return g;
}

std::vector<RootBound> exceptional_roots(const std::vector<int>& multiplicities) {
  std::vector<RootBound> out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 1) throw InputError("multiplicity must be positive");
    // (v(x)1 / 1(x)v) prod U_k^{e_k}; on the diagonal v(x)1 = 1(x)v
    Monomial eq{{"v(x)1", 1}, {"1(x)v", -1}};
    for (std::size_t k = 0; k < multiplicities.size(); ++k) eq["U" + std::to_string(k + 1)] += multiplicities[k];
    std::map<std::string, Monomial> images{{"v(x)1", {{"v", 1}}}, {"1(x)v", {{"v", 1}}}};
    for (std::size_t k = 0; k < multiplicities.size(); ++k) {
      const std::string u = "U" + std::to_string(k + 1);
      images[u] = k == i ? Monomial{{u, 1}} : Monomial{};
    }
    const Monomial reduced = substitute(eq, images);
    RootBound b;
    b.component = static_cast<int>(i);
    b.order = reduced.empty() ? 1 : reduced.begin()->second;
    b.equation = to_string(reduced) + " = 1";
    out.push_back(std::move(b));
  }
  return out;
}

Admissibility barycentric_admissibility(int m, const std::vector<int>& sigma) {
  if (m < 1 || m > 6) throw InputError("barycentric blow-up supports 1 <= m <= 6 components");
  if (static_cast<int>(sigma.size()) != m) throw InputError("permutation has the wrong length");
  std::vector<int> check = sigma;
  std::sort(check.begin(), check.end());
  std::vector<int> id(static_cast<std::size_t>(m));
  std::iota(id.begin(), id.end(), 0);
  if (check != id) throw InputError("not a permutation of the components");
  Admissibility a;
  const std::uint32_t all = (1u << m) - 1;
  for (std::uint32_t J = 1; J <= all; ++J) {
    std::uint32_t image = 0;
    for (int i = 0; i < m; ++i) {
      if (J & (1u << i)) image |= 1u << sigma[static_cast<std::size_t>(i)];
    }
    ++a.components;
    if (image == J) {
      ++a.fixed;
      continue;
    }
    // J and sigma(J) lie on a common chain iff one contains the other
    const bool comparable = (J & image) == J || (J & image) == image;
    if (comparable && a.admissible) {
      a.admissible = false;
      a.witness = {J, image};
    }
  }
  return a;
}

}  // namespace swancalc::logc
