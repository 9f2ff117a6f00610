#include "swancalc/exact/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "swancalc/error.hpp"

namespace swancalc::exact {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;
constexpr std::uint64_t kFieldLimit = std::uint64_t{1} << 40;

using Coeffs = std::vector<std::uint32_t>;

// Dense polynomials over F_p, only what the irreducibility test needs.
void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t li = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = std::uint64_t{a.back()} * li % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint32_t p) {
  Coeffs r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin: f of degree k is irreducible iff x^{p^k} = x mod f and
// gcd(x^{p^{k/r}} - x, f) = 1 for every prime r | k.
bool rabin_irreducible(const Coeffs& f, std::uint32_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  std::vector<Coeffs> frob(k + 1);
  frob[0] = poly_mod(Coeffs{0, 1}, f, p);
  for (int i = 1; i <= k; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  Coeffs xm = poly_mod(Coeffs{0, 1}, f, p);
  if (frob[k] != xm) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(k))) {
    Coeffs h = frob[k / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Coeffs g = poly_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Coeffs smallest_irreducible(std::uint32_t p, int k) {
  if (k == 1) return {0, 1};
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs f(k + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (rabin_irreducible(f, p)) return f;
  }
  throw IntegrityError("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  pw_.resize(k_ + 1);
  pw_[0] = 1;
  for (int i = 1; i <= k_; ++i) pw_[i] = pw_[i - 1] * p_;
  q_ = pw_[k_];
  unit_primes_ = prime_factors(q_ - 1);

  basis_trace_.assign(k_, 0);
  for (int i = 0; i < k_; ++i) {
    Elem s = 0, c = pw_[i];
    for (int j = 0; j < k_; ++j) {
      s = add(s, c);
      c = pow_poly(c, p_);
    }
    basis_trace_[i] = static_cast<std::uint32_t>(s);
  }

  if (q_ == 2) {
    generator_ = 1;
  } else {
    for (Elem g = 2; g < q_; ++g) {
      bool prim = true;
      for (auto r : unit_primes_) {
        if (pow_poly(g, (q_ - 1) / r) == 1) {
          prim = false;
          break;
        }
      }
      if (prim) {
        generator_ = g;
        break;
      }
    }
  }
  if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const std::uint64_t n = q_ - 1;
  exp_table_.resize(n);
  log_table_.assign(q_, 0);
  // Multiply by the generator in coordinates, keeping the digit vector live.
  std::vector<std::uint32_t> g = digits(generator_);
  std::vector<std::uint32_t> cur(k_, 0), nxt(2 * k_, 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    Elem code = from_digits(cur);
    exp_table_[i] = static_cast<std::uint32_t>(code);
    log_table_[code] = static_cast<std::uint32_t>(i);
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int a = 0; a < k_; ++a) {
      if (!g[a]) continue;
      for (int b = 0; b < k_; ++b) {
        if (cur[b]) nxt[a + b] = static_cast<std::uint32_t>((nxt[a + b] + std::uint64_t{g[a]} * cur[b]) % p_);
      }
    }
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      std::uint32_t c = nxt[d];
      if (!c) continue;
      nxt[d] = 0;
      for (int j = 0; j < k_; ++j) {
        nxt[d - k_ + j] = static_cast<std::uint32_t>((nxt[d - k_ + j] + std::uint64_t{p_ - c} * modulus_[j]) % p_);
      }
    }
    std::copy(nxt.begin(), nxt.begin() + k_, cur.begin());
  }
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem a = 0;
  for (int i = k_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(d.size()) ? d[i] % p_ : 0);
  return a;
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0;
  for (int i = 0; i < k_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0;
  for (int i = 0; i < k_; ++i) {
    Elem d = a % p_;
    if (d) r += (p_ - d) * pw_[i];
    a /= p_;
  }
  return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::scale(Elem a, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return a;
  Elem r = 0;
  for (int i = 0; i < k_; ++i) {
    r += (a % p_) * c % p_ * pw_[i];
    a /= p_;
  }
  return r;
}

Elem Field::mul_poly(Elem a, Elem b) const {
  if (k_ == 1) return a * b % p_;
  std::vector<std::uint32_t> da = digits(a), db = digits(b);
  std::vector<std::uint64_t> r(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    std::uint64_t c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (int j = 0; j < k_; ++j) r[d - k_ + j] = (r[d - k_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  Elem out = 0;
  for (int i = k_ - 1; i >= 0; --i) out = out * p_ + r[i];
  return out;
}

Elem Field::pow_poly(Elem a, std::uint64_t n) const {
  Elem r = 1;
  while (n) {
    if (n & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    n >>= 1;
  }
  return r;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_table_.empty()) {
    std::uint64_t s = std::uint64_t{log_table_[a]} + log_table_[b];
    const std::uint64_t n = q_ - 1;
    if (s >= n) s -= n;
    return exp_table_[s];
  }
  return mul_poly(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw InputError("inverse of zero in F_" + std::to_string(q_));
  if (!exp_table_.empty()) {
    std::uint64_t l = log_table_[a];
    return exp_table_[l == 0 ? 0 : (q_ - 1 - l)];
  }
  return pow_poly(a, q_ - 2);
}

Elem Field::pow(Elem a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  if (a == 0) return n == 0 ? 1 : 0;
  const std::uint64_t ord = q_ - 1;
  std::uint64_t e = static_cast<std::uint64_t>(n) % ord;
  if (!exp_table_.empty()) {
    unsigned __int128 s = static_cast<unsigned __int128>(log_table_[a]) * e % ord;
    return exp_table_[static_cast<std::uint64_t>(s)];
  }
  return pow_poly(a, e);
}

std::uint64_t Field::order(Elem a) const {
  if (a == 0) throw InputError("order of zero");
  std::uint64_t n = q_ - 1;
  for (auto r : unit_primes_) {
    while (n % r == 0 && pow(a, static_cast<std::int64_t>(n / r)) == 1) n /= r;
  }
  return n;
}

std::uint64_t Field::log(Elem a) const {
  if (a == 0) throw InputError("logarithm of zero");
  if (exp_table_.empty()) throw UnsupportedError("discrete logarithm needs tables; field too large");
  return log_table_[a];
}

Elem Field::exp(std::uint64_t n) const {
  n %= (q_ - 1);
  if (!exp_table_.empty()) return exp_table_[n];
  return pow_poly(generator_, n);
}

Elem Field::pth_root(Elem a) const {
  if (k_ == 1) return a;
  return pow(a, static_cast<std::int64_t>(q_ / p_));
}

std::uint32_t Field::trace(Elem a) const {
  std::uint64_t s = 0;
  for (int i = 0; i < k_; ++i) {
    s += (a % p_) * basis_trace_[i];
    a /= p_;
  }
  return static_cast<std::uint32_t>(s % p_);
}

std::string Field::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

FieldPtr make_field(std::uint32_t p, int k) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 12) throw InputError("extension degree " + std::to_string(k) + " outside [1, 12]");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kFieldLimit) throw InputError("field of order " + std::to_string(p) + "^" + std::to_string(k) + " is too large");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(p, k, smallest_irreducible(p, k));
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

}  // namespace swancalc::exact
