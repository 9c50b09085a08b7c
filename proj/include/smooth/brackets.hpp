#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "smooth/abgroup.hpp"
#include "smooth/manifold.hpp"

namespace smooth {

struct Known {
  FinAbGroup group;
  std::string citation;
  friend bool operator==(const Known&, const Known&) = default;
};

/// One unresolved extension 0 -> sub -> ? -> quot -> 0.
struct ExtensionFactor {
  FinAbGroup sub;
  FinAbGroup quot;
  friend bool operator==(const ExtensionFactor&, const ExtensionFactor&) = default;
};

/// The group is fixed ⊕ E1 ⊕ ... with each Ei an unknown extension from `factors`.
struct ExtensionAmbiguous {
  FinAbGroup fixed;
  std::vector<ExtensionFactor> factors;
  std::vector<FinAbGroup> candidates;  // sorted, complete
  std::string citation;

  FinAbGroup sub() const;   // fixed ⊕ every factor sub
  FinAbGroup quot() const;  // ⊕ every factor quot
  Int order() const;
  friend bool operator==(const ExtensionAmbiguous&, const ExtensionAmbiguous&) = default;
};

struct LowerBound {
  FinAbGroup group;
  std::string citation;
  friend bool operator==(const LowerBound&, const LowerBound&) = default;
};

struct OutOfRange {
  std::string reason;
  friend bool operator==(const OutOfRange&, const OutOfRange&) = default;
};

class GroupResult {
 public:
  using Variant = std::variant<Known, ExtensionAmbiguous, LowerBound, OutOfRange>;

  GroupResult(Known v) : v_(std::move(v)) {}
  GroupResult(ExtensionAmbiguous v) : v_(std::move(v)) {}
  GroupResult(LowerBound v) : v_(std::move(v)) {}
  GroupResult(OutOfRange v) : v_(std::move(v)) {}

  static GroupResult known(FinAbGroup g, std::string citation) { return Known{std::move(g), std::move(citation)}; }
  /// Single extension with trivial fixed part; collapses to Known when only one candidate exists.
  static GroupResult extension(const FinAbGroup& sub, const FinAbGroup& quot, std::string citation);
  static GroupResult out_of_range(std::string reason) { return OutOfRange{std::move(reason)}; }

  const Variant& variant() const { return v_; }
  bool is_known() const { return std::holds_alternative<Known>(v_); }
  bool is_ambiguous() const { return std::holds_alternative<ExtensionAmbiguous>(v_); }
  bool is_lower_bound() const { return std::holds_alternative<LowerBound>(v_); }
  bool is_out_of_range() const { return std::holds_alternative<OutOfRange>(v_); }

  const Known& as_known() const { return std::get<Known>(v_); }
  const ExtensionAmbiguous& as_ambiguous() const { return std::get<ExtensionAmbiguous>(v_); }
  const LowerBound& as_lower_bound() const { return std::get<LowerBound>(v_); }
  const OutOfRange& as_out_of_range() const { return std::get<OutOfRange>(v_); }

  /// Group when Known, otherwise nullopt.
  std::optional<FinAbGroup> group() const;
  /// Citation or, for OutOfRange, the reason.
  const std::string& citation() const;
  std::string tag() const;

  friend bool operator==(const GroupResult&, const GroupResult&) = default;

 private:
  Variant v_;
};

/// Direct sum of results. Labels name each part in OutOfRange reasons.
GroupResult sum_results(const std::vector<GroupResult>& parts, const std::vector<std::string>& labels = {},
                        const std::string& citation = "direct sum over summands");

GroupResult sphere_bracket(int n, int k);

/// Lemma-resolved value for [Σ^s M(Z/p^r), Top/O] or nullopt.
std::optional<Known> moore_bracket_resolved(Int p, int r, int s);
/// Generic exact-sequence route only.
GroupResult moore_bracket_les(Int p, int r, int s);
GroupResult moore_bracket(Int p, int r, int s);

/// Proposition values for 2 <= s <= 10; OutOfRange otherwise.
GroupResult susp_cp2_bracket(int s);
GroupResult susp_cp2_bracket_les(int s);
/// Proposition when available, generic route otherwise.
GroupResult cp2_component(int s);

GroupResult cone_eta_tilde_bracket(int r, int k);

GroupResult summand_bracket(const Summand& s, int k);
GroupResult splitting_bracket(const ManifoldSpec& spec, int k);

GroupResult closed_form_cM4(const ManifoldSpec& spec, int k);

}  // namespace smooth
