#pragma once

#include <stdexcept>
#include <string>

namespace beal {

/// Malformed input: bad files, unknown labels, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A theorem hypothesis that must hold before a checker may run
/// (e.g. transitivity of the algebra).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace beal
