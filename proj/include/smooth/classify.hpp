#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smooth/abgroup.hpp"

namespace smooth {

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Curated classification of smooth manifolds homeomorphic to CP2 x S^k.
struct ClassificationReport {
  int k = 0;
  int diffeo_class_count = 0;
  std::vector<std::string> representatives;
  FinAbGroup inertia_group;
  std::vector<std::string> notes;
};

/// Supported for k = 3..6; throws UnsupportedError otherwise.
ClassificationReport classify_cp2(int k);

}  // namespace smooth
