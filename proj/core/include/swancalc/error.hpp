#pragma once

#include <stdexcept>
#include <string>

namespace swancalc {

/// Malformed or out-of-range input (maps to CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A truncated computation could not determine a value, or two working
/// precisions disagreed.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity that must hold exactly was violated. Always a bug or an
/// input outside the supported range, never a rounding artefact.
class IntegrityError : public std::logic_error {
 public:
  explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

/// The requested computation is outside the supported catalog.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swancalc
