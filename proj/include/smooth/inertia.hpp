#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "smooth/brackets.hpp"
#include "smooth/manifold.hpp"

namespace smooth {

enum class Derivation { spin_trivial, eta_image, eta_tilde_image, lower_bound };
std::string to_string(Derivation d);

struct CrossCheck {
  FinAbGroup expected;
  bool match = false;
  std::string citation;
};

struct InertiaResult {
  GroupResult value;
  Derivation derivation;
  std::optional<CrossCheck> cross_check;
};

/// Raised when a precondition of an inertia computation fails (e.g. dim + k < 5).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the image-table route and the theorem tables disagree.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Theorem A expectation for I_c(M x S^k), when the theorem covers the case.
std::optional<CrossCheck> theorem_a_expectation(const ManifoldSpec& spec, int k);

InertiaResult concordance_inertia(const ManifoldSpec& spec, int k);

GroupResult concordance_set(const ManifoldSpec& spec, int k);

/// |Θ_{n+k}| / |I_c| divides |[Σ^k M, Top/O]|. Throws PreconditionError unless both are Known.
bool inertia_subgroup_check(const ManifoldSpec& spec, int k);

}  // namespace smooth
