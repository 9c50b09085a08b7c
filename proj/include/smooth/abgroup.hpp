#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smooth {

using Int = std::int64_t;

/// Thrown when an extension or subgroup search would exceed its order budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Finitely generated abelian group Z^free_rank ⊕ Z/d1 ⊕ ... ⊕ Z/dt stored in
 * invariant-factor form (d1 | d2 | ... | dt, every di >= 2).
 */
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup canonicalize(std::span<const Int> cyclic_orders, int free_rank = 0);
  static FinAbGroup canonicalize(std::initializer_list<Int> cyclic_orders, int free_rank = 0);
  /// Z/n for n >= 1; Z/1 is the trivial group.
  static FinAbGroup cyclic(Int n);
  static FinAbGroup free(int rank);
  /// (Z/n)^count
  static FinAbGroup elementary(Int n, int count);

  int free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_cyclic() const { return free_rank_ + static_cast<int>(torsion_.size()) <= 1; }

  /// Order, or nullopt when the group is infinite. Throws std::overflow_error past 2^63.
  std::optional<Int> order() const;
  /// Largest invariant factor (1 for the trivial group); requires a finite group.
  Int exponent() const;
  /// Number of elements of order dividing n, for finite groups.
  Int count_killed_by(Int n) const;

  /// "0", "Z", "Z/n", factors joined by " ⊕ ".
  std::string to_string() const;

  friend auto operator<=>(const FinAbGroup&, const FinAbGroup&) = default;
  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  int free_rank_ = 0;
  std::vector<Int> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup direct_sum(std::initializer_list<FinAbGroup> parts);
/// n-fold direct sum of g with itself.
FinAbGroup power(const FinAbGroup& g, int n);

/// Kernel of multiplication by n (n != 0). The free part contributes nothing.
FinAbGroup mult_kernel(const FinAbGroup& g, Int n);
/// g / n g (n != 0). Each free summand contributes Z/n.
FinAbGroup mult_cokernel(const FinAbGroup& g, Int n);

struct PrimePower {
  Int prime = 0;
  int exponent = 0;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Primary decomposition: free rank plus sorted multiset of prime powers.
struct PrimaryDecomposition {
  int free_rank = 0;
  std::vector<PrimePower> summands;

  static PrimaryDecomposition of(const FinAbGroup& g);
  FinAbGroup to_group() const;
  /// Display form such as "Z ⊕ (Z/2)^3 ⊕ Z/8 ⊕ Z/7".
  std::string to_string() const;

  friend bool operator==(const PrimaryDecomposition&, const PrimaryDecomposition&) = default;
};

bool is_prime(Int n);
/// Returns (p, e) when n = p^e with e >= 1, otherwise nullopt.
std::optional<PrimePower> as_prime_power(Int n);
std::vector<std::pair<Int, int>> factorize(Int n);

inline constexpr Int kDefaultBudget = 1'000'000;

/// All B (up to isomorphism, sorted) with a subgroup A ≅ sub and B/A ≅ quot.
std::vector<FinAbGroup> enumerate_extensions(const FinAbGroup& sub, const FinAbGroup& quot,
                                             Int budget = kDefaultBudget);
/// Isomorphism types of g/H over all subgroups H ≅ image.
std::vector<FinAbGroup> possible_quotients(const FinAbGroup& g, const FinAbGroup& image,
                                           Int budget = kDefaultBudget);
/// Isomorphism types of K over all subgroups K <= g with g/K ≅ quotient.
std::vector<FinAbGroup> possible_kernels(const FinAbGroup& g, const FinAbGroup& quotient,
                                         Int budget = kDefaultBudget);

/// Every abelian group of order n, sorted.
std::vector<FinAbGroup> abelian_groups_of_order(Int n);

}  // namespace smooth
