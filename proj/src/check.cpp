#include "smooth/check.hpp"

#include <algorithm>
#include <functional>

#include "smooth/brackets.hpp"
#include "smooth/inertia.hpp"
#include "smooth/tables.hpp"

namespace smooth {

ManifoldSpec random_spec(std::mt19937_64& rng, std::optional<int> dimension, std::optional<bool> spin) {
  static const std::vector<Int> prime_powers = {2, 2, 4, 8, 16, 32, 64, 3, 9, 27, 5, 25, 7, 49, 11, 13, 31};
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    ManifoldSpec s;
    s.dimension = dimension.value_or(pick(4, 5));
    s.spin = spin.value_or(pick(0, 1) == 1);
    s.h1_free_rank = s.dimension == 4 ? pick(0, 3) : 0;
    s.h2_free_rank = pick(0, 4);
    const int n = pick(0, 4);
    for (int i = 0; i < n; ++i) s.h2_torsion.push_back(prime_powers[pick(0, static_cast<int>(prime_powers.size()) - 1)]);
    if (s.dimension == 5 && !s.spin) {
      int mode = pick(0, 3);
      if (mode == 1) s.nonspin_attaching = Attaching::sphere_eta;
      if (mode == 2) s.nonspin_attaching = Attaching::moore_eta_tilde;
    }
    if (!has_errors(validate(s))) return s;
  }
}

namespace {

using Check = std::function<std::string()>;  // empty string on success

CheckLine run(const std::string& name, const Check& body) {
  try {
    std::string failure = body();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

ManifoldSpec cp2_spec() {
  ManifoldSpec s;
  s.dimension = 4;
  s.spin = false;
  s.h2_free_rank = 1;
  return s;
}

std::string inertia_cells(const std::vector<std::pair<ManifoldSpec, int>>& cells) {
  for (const auto& [spec, k] : cells) {
    auto res = concordance_inertia(spec, k);
    if (!res.cross_check) return "no theorem entry at k = " + std::to_string(k);
    if (!res.value.is_known() || !res.cross_check->match) return "mismatch at k = " + std::to_string(k);
  }
  return {};
}

bool covers(const GroupResult& route, const GroupResult& resolved) {
  if (resolved.is_ambiguous())
    return route.is_ambiguous() && route.as_ambiguous().candidates == resolved.as_ambiguous().candidates;
  if (!resolved.is_known()) return false;
  const auto& g = resolved.as_known().group;
  if (route.is_known()) return route.as_known().group == g;
  if (route.is_ambiguous()) {
    const auto& c = route.as_ambiguous().candidates;
    return std::find(c.begin(), c.end(), g) != c.end();
  }
  return false;
}

}  // namespace

std::vector<CheckLine> run_golden_checks(std::uint64_t seed, int oracle_specs) {
  std::vector<CheckLine> out;
  std::mt19937_64 rng(seed);

  out.push_back(run("Theorem A(1): non-spin 4-manifold, k = 1..16", [] {
    std::vector<std::pair<ManifoldSpec, int>> cells;
    for (int k = 1; k <= 16; ++k) cells.emplace_back(cp2_spec(), k);
    return inertia_cells(cells);
  }));

  out.push_back(run("Theorem A(2): non-spin 5-manifolds, r = 1..6 and no 2-torsion, k = 1..10", [] {
    std::vector<std::pair<ManifoldSpec, int>> cells;
    for (int r = 0; r <= 6; ++r) {
      ManifoldSpec s;
      s.dimension = 5;
      s.spin = false;
      s.h2_free_rank = r == 0 ? 1 : 0;
      s.h2_torsion = r == 0 ? std::vector<Int>{3, 3} : std::vector<Int>{Int{1} << r, Int{1} << r};
      for (int k = 1; k <= 10; ++k) cells.emplace_back(s, k);
    }
    return inertia_cells(cells);
  }));

  out.push_back(run("Theorem A(3): spin manifolds, k = 1..40", [&rng] {
    std::vector<std::pair<ManifoldSpec, int>> cells;
    for (int i = 0; i < 20; ++i) {
      auto s = random_spec(rng, std::nullopt, true);
      for (int k = 1; k <= 40; ++k) cells.emplace_back(s, k);
    }
    return inertia_cells(cells);
  }));

  out.push_back(run("Z/2 lower-bound family k = 17, 18, 8n-2", [] {
    for (int k : {17, 18, 22, 30, 38, 78}) {
      auto res = concordance_inertia(cp2_spec(), k);
      if (!res.value.is_lower_bound() || res.value.as_lower_bound().group != FinAbGroup::cyclic(2))
        return "k = " + std::to_string(k) + " is not LowerBound(Z/2)";
    }
    return std::string{};
  }));

  out.push_back(run("CP2 bracket proposition (1)-(9) vs cofiber sequence", [] {
    for (int s = 2; s <= 10; ++s) {
      auto prop = susp_cp2_bracket(s);
      auto les = susp_cp2_bracket_les(s);
      if (!covers(les, prop)) return "disagreement at s = " + std::to_string(s);
    }
    if (!susp_cp2_bracket(7).is_ambiguous()) return std::string("statement (6) must stay ambiguous");
    return std::string{};
  }));

  out.push_back(run("Moore bracket lemmas vs Moore cofiber sequence", [] {
    int cells = 0;
    for (Int p : {2, 3, 7, 31})
      for (int r = 1; r <= 7; ++r)
        for (int s = 1; s <= 17; ++s) {
          auto resolved = moore_bracket_resolved(p, r, s);
          if (!resolved) continue;
          ++cells;
          if (!covers(moore_bracket_les(p, r, s), *resolved))
            return "p=" + std::to_string(p) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
        }
    return cells > 0 ? std::string{} : std::string("no cells");
  }));

  out.push_back(run("eta_* kernel and cokernel entries", [] {
    for (const auto& e : eta_star_table().rows()) {
      const auto target = pi_top_o(e.degree + 1);
      if (*target.order() % *e.image.order() != 0) return "image too large at " + std::to_string(e.degree);
      auto kers = possible_kernels(*e.source, e.image);
      auto cokers = possible_quotients(target, e.image);
      if (kers.empty() || cokers.empty()) return "image does not fit at " + std::to_string(e.degree);
      if (e.kernel ? std::find(kers.begin(), kers.end(), *e.kernel) == kers.end() : kers.size() == 1)
        return "kernel entry at " + std::to_string(e.degree);
      if (e.kernel && kers.size() > 1) return "kernel entry at " + std::to_string(e.degree) + " is a guess";
      if (e.cokernel ? std::find(cokers.begin(), cokers.end(), *e.cokernel) == cokers.end() : cokers.size() == 1)
        return "cokernel entry at " + std::to_string(e.degree);
      if (e.cokernel && cokers.size() > 1 && e.degree != 14)
        return "cokernel entry at " + std::to_string(e.degree) + " is a guess";
    }
    for (const auto& e : eta_sq_table().rows())
      if (e.degree + 1 <= eta_star_table().hi() &&
          *eta_star_image(e.degree + 1).order() % *e.image.order() != 0)
        return "(eta^2)_* image exceeds eta_* image at " + std::to_string(e.degree);
    return std::string{};
  }));

  out.push_back(run("closed form [Σ^k M] vs splitting, random 4-manifolds, k = 1..5", [&] {
    for (int i = 0; i < oracle_specs; ++i) {
      auto s = random_spec(rng, 4);
      for (int k = 1; k <= 5; ++k) {
        auto a = splitting_bracket(s, k);
        auto b = closed_form_cM4(s, k);
        if (!a.is_known() || a.as_known().group != b.as_known().group)
          return "spec " + spec_to_json(s) + " at k = " + std::to_string(k);
      }
    }
    return std::string{};
  }));

  out.push_back(run("inertia subgroup check on random specs", [&] {
    for (int i = 0; i < 60; ++i) {
      auto s = random_spec(rng);
      for (int k = 1; k + s.dimension <= 20; ++k) {
        auto ic = concordance_inertia(s, k);
        auto br = splitting_bracket(s, k);
        if (!ic.value.is_known() || !br.is_known()) continue;
        if (!inertia_subgroup_check(s, k)) return "spec " + spec_to_json(s) + " at k = " + std::to_string(k);
      }
    }
    return std::string{};
  }));

  return out;
}

}  // namespace smooth
