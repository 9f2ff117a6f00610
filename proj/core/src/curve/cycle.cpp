#include "swancalc/curve/cycle.hpp"

#include "swancalc/error.hpp"

namespace swancalc::curve {

void ZeroCycle::add(PlaceKey k, Rational c, int residue_degree) {
  auto it = f_.find(k);
  if (it != f_.end() && it->second != residue_degree) throw IntegrityError("place used with two residue degrees");
  f_[k] = residue_degree;
  Rational v = coeff(k) + c;
  if (v == 0) {
    c_.erase(k);
  } else {
    c_[k] = v;
  }
}

Rational ZeroCycle::coeff(PlaceKey k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

int ZeroCycle::residue_degree(PlaceKey k) const {
  auto it = f_.find(k);
  return it == f_.end() ? 1 : it->second;
}

Rational ZeroCycle::degree() const {
  Rational d = 0;
  for (auto& [k, c] : c_) d += c * residue_degree(k);
  return d;
}

ZeroCycle ZeroCycle::operator+(const ZeroCycle& o) const {
  ZeroCycle r = *this;
  for (auto& [k, f] : o.f_) r.f_.emplace(k, f);
  for (auto& [k, c] : o.c_) r.add(k, c, o.residue_degree(k));
  return r;
}

ZeroCycle ZeroCycle::operator-(const ZeroCycle& o) const { return *this + o * Rational(-1); }

ZeroCycle ZeroCycle::operator*(const Rational& s) const {
  ZeroCycle r;
  r.f_ = f_;
  if (s == 0) return r;
  for (auto& [k, c] : c_) r.c_[k] = c * s;
  return r;
}

std::string ZeroCycle::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [k, c] : c_) {
    if (!s.empty()) s += " + ";
    s += swancalc::to_string(c) + "[" + std::to_string(k.point) + "." + std::to_string(k.place) + "]";
  }
  return s;
}

}  // namespace swancalc::curve
