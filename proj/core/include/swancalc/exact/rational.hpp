#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// boost 1.74 compares rational with an integer through a template that
// C++20 rewrites into itself; these exact overloads win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator<(const rational<std::int64_t>& a, std::int64_t b) { return a < rational<std::int64_t>(b); }
inline bool operator<(const rational<std::int64_t>& a, int b) { return a < rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, std::int64_t b) { return a > rational<std::int64_t>(b); }
inline bool operator>(const rational<std::int64_t>& a, int b) { return a > rational<std::int64_t>(b); }
}  // namespace boost

namespace swancalc {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace swancalc
