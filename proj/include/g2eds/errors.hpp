#pragma once

#include <stdexcept>
#include <string>

namespace g2eds {

// Mixing exact and floating scalars (or floats of different precision) in one
// arithmetic expression. Promotion is always explicit via Scalar::to_floating.
struct ModeError : std::invalid_argument {
  explicit ModeError(const std::string& what) : std::invalid_argument(what) {}
};

// Exact-mode nth root requested of a rational that is not a perfect nth power.
struct NotRationalRoot : std::domain_error {
  explicit NotRationalRoot(const std::string& what) : std::domain_error(what) {}
};

// A 3-form that is not definite where a G2-structure is required.
struct NonDefiniteForm : std::domain_error {
  explicit NonDefiniteForm(const std::string& what) : std::domain_error(what) {}
};

// An affine system whose constant part lies outside the column space.
struct InconsistentSystem : std::domain_error {
  explicit InconsistentSystem(const std::string& what) : std::domain_error(what) {}
};

}  // namespace g2eds
