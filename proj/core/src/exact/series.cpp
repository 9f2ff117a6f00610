#include "swancalc/exact/series.hpp"

#include <algorithm>
#include <sstream>

#include "swancalc/error.hpp"

namespace swancalc::exact {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  return a + b;
}

}  // namespace

Series::Series(const Field* f, std::int64_t val, std::vector<Elem> c, std::int64_t prec)
    : f_(f), val_(val), c_(std::move(c)), prec_(prec) {
  normalize();
}

void Series::normalize() {
  if (!is_exact()) {
    std::int64_t keep = std::max<std::int64_t>(0, prec_ - val_);
    if (static_cast<std::int64_t>(c_.size()) > keep) c_.resize(keep);
  }
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = 0;
    return;
  }
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<std::int64_t>(lead);
  }
  if (is_exact()) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
}

std::int64_t Series::rel_prec() const {
  if (is_exact()) return kExact;
  if (c_.empty()) return 0;
  return prec_ - val_;
}

std::int64_t Series::ord() const {
  if (c_.empty()) {
    if (is_exact()) throw InputError("valuation of the zero series");
    throw PrecisionError("valuation not determined below t^" + std::to_string(prec_));
  }
  return val_;
}

Elem Series::lead() const {
  ord();
  return c_.front();
}

Elem Series::coeff(std::int64_t i) const {
  if (i >= prec_) throw PrecisionError("coefficient of t^" + std::to_string(i) + " beyond precision");
  if (i < val_ || i >= last()) return 0;
  return c_[static_cast<std::size_t>(i - val_)];
}

Series Series::operator+(const Series& o) const {
  const Field* f = f_ ? f_ : o.f_;
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::int64_t prec = std::min(prec_, o.prec_);
  std::int64_t lo = std::min(c_.empty() ? prec : val_, o.c_.empty() ? prec : o.val_);
  std::int64_t hi = std::min(prec, std::max(last(), o.last()));
  if (hi <= lo) return Series(f, 0, {}, prec);
  std::vector<Elem> c(static_cast<std::size_t>(hi - lo), 0);
  for (std::int64_t i = lo; i < hi; ++i) {
    Elem a = (i >= val_ && i < last()) ? c_[static_cast<std::size_t>(i - val_)] : 0;
    Elem b = (i >= o.val_ && i < o.last()) ? o.c_[static_cast<std::size_t>(i - o.val_)] : 0;
    c[static_cast<std::size_t>(i - lo)] = f->add(a, b);
  }
  return Series(f, lo, std::move(c), prec);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  const Field* f = f_ ? f_ : o.f_;
  if (is_zero() || o.is_zero()) return Series(f);
  std::int64_t lo_a = c_.empty() ? prec_ : val_;
  std::int64_t lo_b = o.c_.empty() ? o.prec_ : o.val_;
  std::int64_t prec = std::min(sat_add(lo_a, o.prec_), sat_add(lo_b, prec_));
  if (c_.empty() || o.c_.empty()) return Series(f, 0, {}, prec);
  std::int64_t v = val_ + o.val_;
  std::int64_t len = static_cast<std::int64_t>(c_.size() + o.c_.size()) - 1;
  if (prec < kExact) len = std::min(len, prec - v);
  if (len <= 0) return Series(f, 0, {}, prec);
  std::vector<Elem> c(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < c_.size() && static_cast<std::int64_t>(i) < len; ++i) {
    if (!c_[i]) continue;
    std::size_t jmax = std::min(o.c_.size(), static_cast<std::size_t>(len) - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (o.c_[j]) c[i + j] = f->add(c[i + j], f->mul(c_[i], o.c_[j]));
    }
  }
  return Series(f, v, std::move(c), prec);
}

Series Series::scaled(Elem c) const {
  if (c == 0) return is_exact() ? Series(f_) : Series(f_, 0, {}, prec_);
  Series r = *this;
  for (auto& x : r.c_) x = f_->mul(x, c);
  return r;
}

Series Series::shifted(std::int64_t k) const {
  Series r = *this;
  if (!r.c_.empty()) r.val_ += k;
  if (!is_exact()) r.prec_ += k;
  return r;
}

Series Series::truncated(std::int64_t rel) const {
  if (c_.empty()) return *this;
  if (is_exact() && static_cast<std::int64_t>(c_.size()) <= rel) return *this;
  return with_prec(std::min(prec_, val_ + rel));
}

Series Series::with_prec(std::int64_t prec) const {
  Series r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

Series Series::inverse(std::int64_t cap) const {
  if (is_zero()) throw InputError("division by the exact zero series");
  const std::int64_t v = ord();
  if (is_exact() && c_.size() == 1) return Series(f_, -v, {f_->inv(c_[0])});
  std::int64_t r = std::min(rel_prec(), cap);
  std::vector<Elem> b(static_cast<std::size_t>(r), 0);
  const Elem u0i = f_->inv(c_[0]);
  b[0] = u0i;
  for (std::int64_t n = 1; n < r; ++n) {
    Elem s = 0;
    std::int64_t kmax = std::min<std::int64_t>(n, static_cast<std::int64_t>(c_.size()) - 1);
    for (std::int64_t k = 1; k <= kmax; ++k) {
      if (c_[static_cast<std::size_t>(k)]) s = f_->add(s, f_->mul(c_[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(n - k)]));
    }
    b[static_cast<std::size_t>(n)] = f_->neg(f_->mul(s, u0i));
  }
  return Series(f_, -v, std::move(b), -v + r);
}

Series Series::pow(std::int64_t n, std::int64_t cap) const {
  if (n < 0) return inverse(cap).pow(-n, cap);
  Series result = Series::constant(f_ ? f_ : nullptr, 1);
  Series base = truncated(cap);
  while (n) {
    if (n & 1) result = (result * base).truncated(cap);
    n >>= 1;
    if (n) base = (base * base).truncated(cap);
  }
  return result;
}

Series Series::compose(const Series& g, std::int64_t cap) const {
  const std::int64_t vg = g.ord();
  if (vg <= 0) throw InputError("composition needs a substitution of positive valuation");
  if (is_zero()) return Series(f_);
  if (c_.empty()) return Series(f_, 0, {}, prec_ * vg);
  const std::int64_t L = static_cast<std::int64_t>(c_.size());
  Series acc = is_exact() ? Series(f_) : Series::big_oh(f_, (prec_ - val_ - L) * vg);
  Series gt = g.truncated(cap);
  for (std::int64_t i = L - 1; i >= 0; --i) {
    acc = (acc * gt + Series::constant(f_, c_[static_cast<std::size_t>(i)])).truncated(cap);
  }
  if (val_ != 0) acc = acc * gt.pow(val_, cap);
  return acc.truncated(cap);
}

Series Series::derivative() const {
  if (c_.empty()) return is_exact() ? *this : Series(f_, 0, {}, prec_ - 1);
  std::vector<Elem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t e = val_ + static_cast<std::int64_t>(i);
    c[i] = f_->mul(c_[i], f_->from_int(e));
  }
  return Series(f_, val_ - 1, std::move(c), is_exact() ? kExact : prec_ - 1);
}

Series Series::unit_root(std::int64_t m, std::int64_t cap) const {
  if (m == 0) throw InputError("zeroth root");
  if (ord() != 0 || lead() != 1) throw InputError("unit_root needs constant term 1");
  if (m % static_cast<std::int64_t>(f_->p()) == 0) throw InputError("root of order divisible by p");
  if (m < 0) return unit_root(-m, cap).inverse(cap);
  if (m == 1) return truncated(cap);
  const std::int64_t r = std::min(rel_prec(), cap);
  const Series a = truncated(r);
  Series y(f_, 0, {f_->one()}, r);
  const Elem minv = f_->inv(f_->from_int(m));
  for (int it = 0; it < 80; ++it) {
    Series ym1 = y.pow(m - 1, r);
    Series corr = (ym1 * y - a) * ym1.inverse(r);
    Series next = (y - corr.scaled(minv)).truncated(r);
    if (next.agrees(y) && next.prec() == y.prec()) return next;
    y = next;
  }
  throw PrecisionError("unit root iteration did not settle");
}

Series Series::mapped(const Embedding& e) const {
  Series r = *this;
  r.f_ = e.target();
  for (auto& x : r.c_) x = e(x);
  return r;
}

bool Series::agrees(const Series& o) const {
  Series d = *this - o;
  return d.c_.empty();
}

std::string Series::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
    if (!c_[i]) continue;
    if (shown) os << " + ";
    os << f_->to_string(c_[i]);
    std::int64_t e = val_ + static_cast<std::int64_t>(i);
    if (e != 0) os << "*t^" << e;
    ++shown;
  }
  if (!is_exact()) {
    if (shown) os << " + ";
    os << "O(t^" << prec_ << ")";
  } else if (!shown) {
    os << "0";
  }
  return os.str();
}

Series solve_series(const Series& phi, const Series& r, std::int64_t cap) {
  const Field* f = phi.field();
  if (phi.ord() != 1) throw InputError("solve_series needs phi of valuation 1");
  const std::int64_t v = r.ord();
  if (v <= 0) throw InputError("solve_series needs a right side of positive valuation");
  const Series dphi = phi.derivative();
  Series x = r.scaled(f->inv(phi.lead())).truncated(cap);
  for (int it = 0; it < 80; ++it) {
    Series err = phi.compose(x, cap) - r;
    Series next = (x - err * dphi.compose(x, cap).inverse(cap)).truncated(cap);
    if (next.agrees(x) && next.prec() == x.prec()) return next;
    x = next;
  }
  throw PrecisionError("series equation did not settle");
}

}  // namespace swancalc::exact
