#include "swancalc/group/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "swancalc/error.hpp"

namespace swancalc::group {

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::vector<std::string> names)
    : n_(n), table_(std::move(table)), names_(std::move(names)) {
  if (n < 1 || n > 128) throw InputError("group order must be in [1, 128]");
  if (table_.size() != static_cast<std::size_t>(n) * n) throw InputError("multiplication table has the wrong size");
  for (int x : table_) {
    if (x < 0 || x >= n) throw InputError("multiplication table entry out of range");
  }
  e_ = -1;
  for (int a = 0; a < n && e_ < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) e_ = a;
  }
  if (e_ < 0) throw InputError("multiplication table has no identity");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("multiplication table is not associative");
      }
    }
  }
  inv_.assign(static_cast<std::size_t>(n), -1);
  ord_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == e_) inv_[static_cast<std::size_t>(a)] = b;
    }
    if (inv_[static_cast<std::size_t>(a)] < 0) throw InputError("element without inverse");
  }
  for (int a = 0; a < n; ++a) {
    int k = 1;
    int x = a;
    while (x != e_) {
      x = mul(x, a);
      ++k;
    }
    ord_[static_cast<std::size_t>(a)] = a == e_ ? 1 : k;
  }
  if (names_.empty()) {
    for (int a = 0; a < n; ++a) names_.push_back(std::to_string(a));
  }
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& orders) {
  int n = 1;
  for (int o : orders) {
    if (o < 1) throw InputError("cyclic factor order must be positive");
    n *= o;
    if (n > 128) throw InputError("group order must be in [1, 128]");
  }
  auto coords = [&](int a) {
    std::vector<int> v;
    for (int o : orders) {
      v.push_back(a % o);
      a /= o;
    }
    return v;
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    auto va = coords(a);
    std::string nm = "(";
    for (std::size_t i = 0; i < va.size(); ++i) nm += (i ? "," : "") + std::to_string(va[i]);
    names.push_back(nm + ")");
    for (int b = 0; b < n; ++b) {
      auto vb = coords(b);
      int c = 0, scale = 1;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        c += ((va[i] + vb[i]) % orders[i]) * scale;
        scale *= orders[i];
      }
      table[static_cast<std::size_t>(a * n + b)] = c;
    }
  }
  FiniteGroup g(n, std::move(table), std::move(names));
  g.orders_ = orders;
  return g;
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 4) throw InputError("symmetric group degree must be in [1, 4]");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[static_cast<std::size_t>(i)]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    std::string nm = "[";
    for (int x : perms[static_cast<std::size_t>(a)]) nm += std::to_string(x + 1);
    names.push_back(nm + "]");
    for (int b = 0; b < n; ++b) {
      // (a b)(x) = a(b(x))
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int x = 0; x < k; ++x) c[static_cast<std::size_t>(x)] = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
      table[static_cast<std::size_t>(a * n + b)] = index.at(c);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1 || 2 * n > 128) throw InputError("dihedral parameter out of range");
  const int N = 2 * n;
  std::vector<int> table(static_cast<std::size_t>(N) * N);
  std::vector<std::string> names;
  for (int a = 0; a < N; ++a) {
    int i = a % n, j = a / n;
    names.push_back("r" + std::to_string(i) + (j ? "s" : ""));
    for (int b = 0; b < N; ++b) {
      int k = b % n, l = b / n;
      // r^i s^j r^k s^l = r^{i + (-1)^j k} s^{j+l}
      int ri = ((i + (j ? -k : k)) % n + n) % n;
      table[static_cast<std::size_t>(a * N + b)] = ri + n * ((j + l) % 2);
    }
  }
  return FiniteGroup(N, std::move(table), std::move(names));
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  const int o = order(a);
  k %= o;
  if (k < 0) k += o;
  int r = e_;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < a; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  std::vector<int> out{e_};
  in[static_cast<std::size_t>(e_)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      int x = mul(out[i], g);
      if (!in[static_cast<std::size_t>(x)]) {
        in[static_cast<std::size_t>(x)] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
  if (h.empty()) return false;
  std::set<int> s(h.begin(), h.end());
  if (s.size() != h.size() || !s.count(e_)) return false;
  for (int a : h) {
    if (a < 0 || a >= n_) return false;
    for (int b : h) {
      if (!s.count(mul(a, inv(b)))) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{generated({})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& h : frontier) {
      for (int g = 0; g < n_; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        auto gens = h;
        gens.push_back(g);
        auto k = generated(gens);
        if (found.insert(k).second) next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<int> FiniteGroup::left_transversal(const std::vector<int>& h) const {
  if (!is_subgroup(h)) throw InputError("not a subgroup");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> reps;
  for (int g = 0; g < n_; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    reps.push_back(g);
    for (int x : h) seen[static_cast<std::size_t>(mul(g, x))] = 1;
  }
  return reps;
}

std::vector<int> FiniteGroup::coords(int a) const {
  if (orders_.empty() && n_ > 1) throw UnsupportedError("group was not built as a product of cyclic groups");
  std::vector<int> v;
  for (int o : orders_) {
    v.push_back(a % o);
    a /= o;
  }
  return v;
}

int FiniteGroup::from_coords(const std::vector<int>& v) const {
  if (v.size() != orders_.size()) throw InputError("coordinate vector has the wrong length");
  int a = 0, scale = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    a += (((v[i] % orders_[i]) + orders_[i]) % orders_[i]) * scale;
    scale *= orders_[i];
  }
  return a;
}

std::vector<int> p_part(const FiniteGroup& g, int p) {
  std::vector<int> out;
  for (int a = 0; a < g.size(); ++a) {
    int o = g.order(a);
    while (p > 1 && o % p == 0) o /= p;
    if (o == 1) out.push_back(a);
  }
  return out;
}

BrauerRep::BrauerRep(const FiniteGroup* g, int ell, std::vector<CyclotomicInt> values)
    : g_(g), ell_(ell), v_(std::move(values)) {
  if (v_.size() != static_cast<std::size_t>(g_->size())) throw InputError("one Brauer value per group element is required");
  if (!v_[static_cast<std::size_t>(g_->identity())].is_integer()) throw InputError("Brauer value at the identity must be the dimension");
  dim_ = static_cast<int>(v_[static_cast<std::size_t>(g_->identity())].to_integer());
  if (dim_ < 0) throw InputError("negative dimension");
  for (int a = 0; a < g_->size(); ++a) {
    for (int x = 0; x < g_->size(); ++x) {
      if (g_->order(a) % ell_ != 0 && v_[static_cast<std::size_t>(a)] != v_[static_cast<std::size_t>(g_->conj(x, a))]) {
        throw InputError("Brauer character is not a class function");
      }
    }
  }
}

BrauerRep BrauerRep::trivial(const FiniteGroup* g, int ell, int dim) {
  return BrauerRep(g, ell, std::vector<CyclotomicInt>(static_cast<std::size_t>(g->size()), CyclotomicInt::integer(dim)));
}

BrauerRep BrauerRep::regular(const FiniteGroup* g, int ell) {
  std::vector<CyclotomicInt> v(static_cast<std::size_t>(g->size()), CyclotomicInt::integer(0));
  v[static_cast<std::size_t>(g->identity())] = CyclotomicInt::integer(g->size());
  return BrauerRep(g, ell, std::move(v));
}

BrauerRep BrauerRep::character(const FiniteGroup* g, int ell, const std::vector<int>& k) {
  const auto& orders = g->abelian_orders();
  if (k.size() != orders.size()) throw InputError("character exponent vector has the wrong length");
  std::uint32_t m = 1;
  for (int o : orders) m = std::lcm(m, static_cast<std::uint32_t>(o));
  std::vector<CyclotomicInt> v;
  for (int a = 0; a < g->size(); ++a) {
    auto c = g->coords(a);
    std::int64_t e = 0;
    for (std::size_t i = 0; i < c.size(); ++i) e += static_cast<std::int64_t>(k[i]) * c[i] * (m / static_cast<std::uint32_t>(orders[i]));
    v.push_back(CyclotomicInt::zeta(m, e));
  }
  return BrauerRep(g, ell, std::move(v));
}

BrauerRep BrauerRep::operator+(const BrauerRep& o) const {
  if (g_ != o.g_ || ell_ != o.ell_) throw InputError("direct sum of representations of different groups");
  std::vector<CyclotomicInt> v;
  for (std::size_t i = 0; i < v_.size(); ++i) v.push_back(v_[i] + o.v_[i]);
  return BrauerRep(g_, ell_, std::move(v));
}

const CyclotomicInt& BrauerRep::trace(int a) const {
  if (g_->order(a) % ell_ == 0) throw UnsupportedError("Brauer trace at an element of order divisible by ell");
  return v_.at(static_cast<std::size_t>(a));
}

int fixed_dim(const BrauerRep& m, int sigma) {
  const auto& g = m.group();
  const int o = g.order(sigma);
  if (o % m.ell() == 0) throw UnsupportedError("fixed part at an element of order divisible by ell");
  CyclotomicInt s(1);
  for (int k = 0; k < o; ++k) s = s + m.trace(g.pow(sigma, k));
  CyclotomicInt d = s.divided(o);
  if (!d.is_integer() || d.to_integer() < 0) throw IntegrityError("fixed-space dimension is not a natural number");
  return static_cast<int>(d.to_integer());
}

Rational swan_coeff(const BrauerRep& m, int sigma, int p) {
  const auto& g = m.group();
  int o = g.order(sigma);
  while (o % p == 0) o /= p;
  if (o != 1) throw InputError("swan_coeff needs an element of p-power order");
  const int a = fixed_dim(m, sigma);
  const int b = fixed_dim(m, g.pow(sigma, p));
  return Rational(a) - Rational(b - a, p - 1);
}

bool brauer_identity_check(const BrauerRep& m, int sigma, int p) {
  const auto& g = m.group();
  const int o = g.order(sigma);
  int e = 0;
  for (int x = o; x > 1; x /= p) {
    if (x % p != 0) throw InputError("brauer_identity_check needs an element of order p^e");
    ++e;
  }
  if (e == 0) throw InputError("brauer_identity_check needs a non-identity element");
  const std::int64_t units = o / p * (p - 1);
  Rational lhs = swan_coeff(m, sigma, p) * units;
  if (lhs.denominator() != 1) return false;
  CyclotomicInt rhs(1);
  for (int i = 1; i < o; ++i) {
    if (i % p != 0) rhs = rhs + m.trace(g.pow(sigma, i));
  }
  return rhs == CyclotomicInt::integer(lhs.numerator());
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& h) {
  if (!g.is_subgroup(h)) throw InputError("not a subgroup");
  const int n = static_cast<int>(h.size());
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[h[static_cast<std::size_t>(i)]] = i;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    names.push_back(g.name(h[static_cast<std::size_t>(i)]));
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i * n + j)] = idx.at(g.mul(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)]));
  }
  return FiniteGroup(n, std::move(table), std::move(names));
}

int induced_fixed_dim(const FiniteGroup& g, const std::vector<int>& h, const BrauerRep& m, int sigma) {
  if (!g.is_subgroup(h)) throw InputError("not a subgroup");
  if (m.group().size() != static_cast<int>(h.size())) throw InputError("representation is not on the given subgroup");
  std::map<int, int> idx;
  for (std::size_t i = 0; i < h.size(); ++i) idx[h[i]] = static_cast<int>(i);
  // The stabilizer of the coset tau H in <sigma> acts on tau M through
  // tau^-1 sigma tau; <s> ∩ H is generated by s^index.
  Rational acc = 0;
  for (int tau : g.left_transversal(h)) {
    const int s = g.conj(g.inv(tau), sigma);
    auto cyc = g.generated({s});
    int in_h = 0;
    for (int x : cyc) in_h += idx.count(x) ? 1 : 0;
    const int index = static_cast<int>(cyc.size()) / in_h;
    acc += Rational(fixed_dim(m, idx.at(g.pow(s, index))), index);
  }
  if (acc.denominator() != 1) throw IntegrityError("induced fixed dimension is not an integer");
  return static_cast<int>(acc.numerator());
}

}  // namespace swancalc::group
