#include "swancalc/exact/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "swancalc/error.hpp"

namespace swancalc::exact {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegrityError("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegrityError("cyclotomic coefficient overflow");
  return r;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::uint32_t euler_phi(std::uint32_t m) {
  std::uint32_t r = m;
  for (auto q : prime_factors(m)) r = r / static_cast<std::uint32_t>(q) * static_cast<std::uint32_t>(q - 1);
  return r;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  if (m == 0) throw InputError("cyclotomic polynomial of order 0");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint32_t d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      std::int64_t c = num[i];
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(num)).first->second;
}

CyclotomicInt::CyclotomicInt(std::uint32_t m) : m_(m), c_(euler_phi(m), 0) {
  if (m == 0) throw InputError("cyclotomic modulus 0");
}

CyclotomicInt::CyclotomicInt(std::uint32_t m, std::vector<std::int64_t> coeffs) : m_(m) {
  if (m == 0) throw InputError("cyclotomic modulus 0");
  reduce(std::move(coeffs));
}

void CyclotomicInt::reduce(std::vector<std::int64_t> raw) {
  const auto& phi = cyclotomic_polynomial(m_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = raw.size(); i-- > deg;) {
    std::int64_t c = raw[i];
    if (!c) continue;
    raw[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] = checked_add(raw[i - deg + j], -checked_mul(c, phi[j]));
  }
  raw.resize(deg, 0);
  c_ = std::move(raw);
}

CyclotomicInt CyclotomicInt::integer(std::int64_t n, std::uint32_t m) {
  CyclotomicInt r(m);
  r.c_[0] = n;
  return r;
}

CyclotomicInt CyclotomicInt::zeta(std::uint32_t m, std::int64_t k) {
  std::int64_t e = k % static_cast<std::int64_t>(m);
  if (e < 0) e += m;
  std::vector<std::int64_t> raw(static_cast<std::size_t>(e) + 1, 0);
  raw[static_cast<std::size_t>(e)] = 1;
  return CyclotomicInt(m, std::move(raw));
}

bool CyclotomicInt::is_zero() const {
  for (auto x : c_) {
    if (x) return false;
  }
  return true;
}

bool CyclotomicInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i]) return false;
  }
  return true;
}

std::int64_t CyclotomicInt::to_integer() const {
  if (!is_integer()) throw IntegrityError("value " + to_string() + " is not a rational integer");
  return c_[0];
}

CyclotomicInt CyclotomicInt::lifted(std::uint32_t M) const {
  if (M % m_) throw InputError("cannot lift Z[zeta_" + std::to_string(m_) + "] to Z[zeta_" + std::to_string(M) + "]");
  if (M == m_) return *this;
  const std::size_t step = M / m_;
  std::vector<std::int64_t> raw(c_.size() * step + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return CyclotomicInt(M, std::move(raw));
}

CyclotomicInt CyclotomicInt::galois(std::int64_t a) const {
  std::int64_t aa = a % static_cast<std::int64_t>(m_);
  if (aa < 0) aa += m_;
  if (std::gcd(static_cast<std::uint32_t>(aa), m_) != 1 && m_ > 1) throw InputError("Galois exponent not a unit");
  std::vector<std::int64_t> raw(m_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::size_t e = static_cast<std::size_t>((static_cast<std::int64_t>(i) * aa) % m_);
    raw[e] = checked_add(raw[e], c_[i]);
  }
  return CyclotomicInt(m_, std::move(raw));
}

CyclotomicInt CyclotomicInt::divided(std::int64_t d) const {
  if (d == 0) throw InputError("division by zero");
  CyclotomicInt r = *this;
  for (auto& x : r.c_) {
    if (x % d) throw IntegrityError(to_string() + " is not divisible by " + std::to_string(d));
    x /= d;
  }
  return r;
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
  std::uint32_t M = lcm32(a.m_, b.m_);
  CyclotomicInt x = a.lifted(M), y = b.lifted(M);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] = checked_add(x.c_[i], y.c_[i]);
  return x;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) { return a + (-b); }

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  std::uint32_t M = lcm32(a.m_, b.m_);
  CyclotomicInt x = a.lifted(M), y = b.lifted(M);
  std::vector<std::int64_t> raw(x.c_.size() + y.c_.size(), 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (!x.c_[i]) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) raw[i + j] = checked_add(raw[i + j], checked_mul(x.c_[i], y.c_[j]));
  }
  return CyclotomicInt(M, std::move(raw));
}

CyclotomicInt operator*(std::int64_t k, const CyclotomicInt& a) {
  CyclotomicInt r = a;
  for (auto& x : r.c_) x = checked_mul(x, k);
  return r;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  std::uint32_t M = lcm32(a.m_, b.m_);
  return a.lifted(M).c_ == b.lifted(M).c_;
}

std::string CyclotomicInt::to_string() const {
  const CyclotomicInt& s = *this;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < s.c_.size(); ++i) {
    std::int64_t c = s.c_[i];
    if (!c) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "z" << s.m_;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicInt teichmuller_lift(const Field& f, Elem a) {
  if (a == 0) throw InputError("Teichmuller lift of zero");
  const std::uint64_t n = f.q() - 1;
  const std::uint64_t l = f.log(a);
  const std::uint64_t ord = n / std::gcd(n, l);
  // zeta_n^l = zeta_ord^{l / (n / ord)}.
  return CyclotomicInt::zeta(static_cast<std::uint32_t>(ord), static_cast<std::int64_t>(l / (n / ord)));
}

}  // namespace swancalc::exact
