#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smooth/abgroup.hpp"

namespace smooth {

enum class Attaching { automatic, sphere_eta, moore_eta_tilde };

std::string to_string(Attaching a);
std::optional<Attaching> attaching_from_string(std::string_view s);

/// Homology profile of a closed oriented 4-manifold or simply connected closed 5-manifold.
struct ManifoldSpec {
  int dimension = 4;
  bool spin = true;
  int h1_free_rank = 0;
  int h2_free_rank = 0;
  std::vector<Int> h2_torsion;
  Attaching nonspin_attaching = Attaching::automatic;

  friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;
};

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string field;
  std::string message;
};

std::vector<Diagnostic> validate(const ManifoldSpec& spec);
bool has_errors(const std::vector<Diagnostic>& diags);

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

/// Throws ValidationError when validate reports an error.
void require_valid(const ManifoldSpec& spec);

struct Sphere {
  int n = 0;
  friend auto operator<=>(const Sphere&, const Sphere&) = default;
};
/// Σ^s M(Z/b)
struct SuspMoore {
  Int b = 2;
  int s = 0;
  friend auto operator<=>(const SuspMoore&, const SuspMoore&) = default;
};
/// Σ^s CP^2
struct SuspCP2 {
  int s = 0;
  friend auto operator<=>(const SuspCP2&, const SuspCP2&) = default;
};
/// Mapping cone of eta~ on the Moore spectrum M(Z/2^r)
struct ConeEtaTilde {
  int r = 1;
  friend auto operator<=>(const ConeEtaTilde&, const ConeEtaTilde&) = default;
};

using Summand = std::variant<Sphere, SuspMoore, SuspCP2, ConeEtaTilde>;

std::string describe(const Summand& s);

struct StableSplitting {
  std::vector<Summand> summands;  // sorted
  friend bool operator==(const StableSplitting&, const StableSplitting&) = default;
};

/// Effective attaching type of a non-spin 5-manifold, after resolving `auto`.
Attaching resolved_attaching(const ManifoldSpec& spec);
/// Smallest r with 2^r among the torsion entries.
std::optional<int> min_two_exponent(const ManifoldSpec& spec);

StableSplitting stable_splitting(const ManifoldSpec& spec);

/// Reduced integral homology by degree (trivial degrees omitted).
std::map<int, FinAbGroup> reduced_homology(const Summand& s);
std::map<int, FinAbGroup> reduced_homology(const StableSplitting& split);
std::map<int, FinAbGroup> homology_profile(const ManifoldSpec& spec);

/// Spec file errors carry the 1-based line (0 when unknown).
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

ManifoldSpec parse_spec(std::string_view text);
std::string spec_to_json(const ManifoldSpec& spec);

}  // namespace smooth
