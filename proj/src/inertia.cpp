#include "smooth/inertia.hpp"

#include <map>

#include "smooth/tables.hpp"

namespace smooth {

std::string to_string(Derivation d) {
  switch (d) {
    case Derivation::spin_trivial:
      return "spin_trivial";
    case Derivation::eta_image:
      return "eta_image";
    case Derivation::eta_tilde_image:
      return "eta_tilde_image";
    default:
      return "lower_bound";
  }
}

namespace {

const char* kLowDimNote = "Theorem A note: Θ_{n+k} = 0 for n+k = 5, 6";

void check_preconditions(const ManifoldSpec& spec, int k) {
  require_valid(spec);
  if (k < 1) throw PreconditionError("k must be a positive integer");
  if (spec.dimension + k < 5) throw PreconditionError("dim(M) + k must be at least 5");
}

bool in_lower_bound_family(int k) { return k == 17 || k == 18 || (k >= 22 && (k + 2) % 8 == 0); }

Derivation route_for(const ManifoldSpec& spec) {
  if (spec.spin) return Derivation::spin_trivial;
  if (spec.dimension == 5 && resolved_attaching(spec) == Attaching::moore_eta_tilde) return Derivation::eta_tilde_image;
  return Derivation::eta_image;
}

}  // namespace

std::optional<CrossCheck> theorem_a_expectation(const ManifoldSpec& spec, int k) {
  if (k < 1) return std::nullopt;
  const FinAbGroup O, Z2 = FinAbGroup::cyclic(2), Z2Z2 = FinAbGroup::elementary(2, 2);
  if (spec.spin) return CrossCheck{O, false, "Theorem A(3)"};
  if (spec.dimension + k <= 6) return CrossCheck{O, false, kLowDimNote};

  if (spec.dimension == 4) {
    if (k > 16) return std::nullopt;
    if (k == 15) return CrossCheck{Z2, false, "non-spin 4-manifold inertia theorem (k = 15)"};
    if (k == 14) return CrossCheck{Z2Z2, false, "Theorem A(1)(a)"};
    bool nz = k == 5 || k == 6 || k == 7 || k == 11 || k == 13;
    return CrossCheck{nz ? Z2 : O, false, "Theorem A(1)(a)"};
  }

  if (k > 10) return std::nullopt;
  if (k != 4 && k != 5 && k != 6 && k != 10) return CrossCheck{O, false, "Theorem A(2)(a)"};
  auto r = min_two_exponent(spec);
  const Attaching type = resolved_attaching(spec);
  if (!r) {
    if (type != Attaching::sphere_eta) return std::nullopt;
    return CrossCheck{Z2, false, "Theorem A(2)(b)(ii)"};
  }
  if (type != Attaching::moore_eta_tilde) return std::nullopt;
  switch (k) {
    case 4:
      return CrossCheck{*r <= 2 ? Z2Z2 : Z2, false, "Theorem A(2)(b)(i)(1)"};
    case 6:
      return CrossCheck{*r == 1 ? FinAbGroup::cyclic(4) : Z2, false, "Theorem A(2)(b)(i)(3)"};
    default:
      return CrossCheck{Z2, false, "Theorem A(2)(b)(i)(2)"};
  }
}

InertiaResult concordance_inertia(const ManifoldSpec& spec, int k) {
  check_preconditions(spec, k);
  const Derivation route = route_for(spec);

  auto compute = [&]() -> InertiaResult {
    if (spec.dimension + k <= 6) return {Known{FinAbGroup{}, kLowDimNote}, route, std::nullopt};
    if (spec.spin) return {Known{FinAbGroup{}, "spin: trivial stable attaching map"}, route, std::nullopt};
    if (spec.dimension == 4) {
      if (k + 3 <= eta_star_table().hi())
        return {Known{eta_star_image(k + 3), "η* image at degree " + std::to_string(k + 3)}, route, std::nullopt};
      if (in_lower_bound_family(k))
        return {LowerBound{FinAbGroup::cyclic(2), "Z/2 lower-bound proposition for k = 17, 18, 8n-2"},
                Derivation::lower_bound, std::nullopt};
      return {OutOfRange{"η* image at degree " + std::to_string(k + 3) + " is beyond the lemma's table"}, route,
              std::nullopt};
    }
    if (route == Derivation::eta_image) {
      if (k + 4 <= eta_star_table().hi())
        return {Known{eta_star_image(k + 4), "η* image at degree " + std::to_string(k + 4)}, route, std::nullopt};
      return {OutOfRange{"η* image at degree " + std::to_string(k + 4) + " is beyond the lemma's table"}, route,
              std::nullopt};
    }
    const int r = *min_two_exponent(spec);
    const auto& t = eta_tilde_table();
    if (k >= t.lo() && k <= t.hi())
      return {Known{eta_tilde_image(k, r), t.at(k, r).citation}, route, std::nullopt};
    return {OutOfRange{"eta~_* image lemma covers k = 1..10"}, route, std::nullopt};
  };

  InertiaResult res = compute();
  if (auto cc = theorem_a_expectation(spec, k)) {
    if (res.value.is_known()) {
      cc->match = res.value.as_known().group == cc->expected;
      if (!cc->match)
        throw CrossCheckError("I_c cross-check failed at k = " + std::to_string(k) + ": computed " +
                              res.value.as_known().group.to_string() + ", " + cc->citation + " gives " +
                              cc->expected.to_string());
    }
    res.cross_check = cc;
  }
  return res;
}

GroupResult concordance_set(const ManifoldSpec& spec, int k) {
  check_preconditions(spec, k);
  GroupResult middle = top_o_table().contains(k)
                           ? GroupResult(Known{pi_top_o(k), "pi_" + std::to_string(k) + "(Top/O) table"})
                           : GroupResult(OutOfRange{"pi_" + std::to_string(k) + "(Top/O) is beyond the table"});
  return sum_results({splitting_bracket(spec, 0), middle, splitting_bracket(spec, k)},
                     {"[M, Top/O]", "pi_k(Top/O)", "[Σ^k M, Top/O]"}, "three-term decomposition of C(M x S^k)");
}

bool inertia_subgroup_check(const ManifoldSpec& spec, int k) {
  auto ic = concordance_inertia(spec, k);
  auto br = splitting_bracket(spec, k);
  if (!ic.value.is_known() || !br.is_known())
    throw PreconditionError("inertia_subgroup_check needs Known inertia and bracket values");
  const int n = spec.dimension + k;
  if (!top_o_table().contains(n)) throw PreconditionError("Θ_" + std::to_string(n) + " is beyond the table");
  // Compare p-adic valuations so that large bracket orders cannot overflow.
  const auto th = PrimaryDecomposition::of(theta(n));
  const auto ic_p = PrimaryDecomposition::of(ic.value.as_known().group);
  const auto br_p = PrimaryDecomposition::of(*br.group());
  std::map<Int, int> need;
  for (const auto& s : th.summands) need[s.prime] += s.exponent;
  for (const auto& s : ic_p.summands) need[s.prime] -= s.exponent;
  for (const auto& s : br_p.summands) need[s.prime] -= s.exponent;
  for (const auto& [p, v] : need)
    if (v > 0) return false;
  return true;
}

}  // namespace smooth
