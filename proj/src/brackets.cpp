#include "smooth/brackets.hpp"

#include <algorithm>
#include <map>

#include "smooth/tables.hpp"

namespace smooth {

namespace {

FinAbGroup C(Int n) { return FinAbGroup::cyclic(n); }
FinAbGroup E2(int count) { return FinAbGroup::elementary(2, count); }

Int ipow(Int p, int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

std::string deg(int n) { return std::to_string(n); }

bool top_o_in_range(int n) { return top_o_table().contains(n); }

std::vector<FinAbGroup> sorted_unique(std::vector<FinAbGroup> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

FinAbGroup ExtensionAmbiguous::sub() const {
  FinAbGroup out = fixed;
  for (const auto& f : factors) out = direct_sum(out, f.sub);
  return out;
}

FinAbGroup ExtensionAmbiguous::quot() const {
  FinAbGroup out;
  for (const auto& f : factors) out = direct_sum(out, f.quot);
  return out;
}

Int ExtensionAmbiguous::order() const { return *sub().order() * *quot().order(); }

GroupResult GroupResult::extension(const FinAbGroup& sub, const FinAbGroup& quot, std::string citation) {
  auto cands = enumerate_extensions(sub, quot);
  if (cands.size() == 1) return Known{cands.front(), citation + "; extension forced"};
  return ExtensionAmbiguous{FinAbGroup{}, {ExtensionFactor{sub, quot}}, std::move(cands), std::move(citation)};
}

std::optional<FinAbGroup> GroupResult::group() const {
  if (auto* k = std::get_if<Known>(&v_)) return k->group;
  return std::nullopt;
}

const std::string& GroupResult::citation() const {
  return std::visit(
      [](const auto& x) -> const std::string& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OutOfRange>)
          return x.reason;
        else
          return x.citation;
      },
      v_);
}

std::string GroupResult::tag() const {
  switch (v_.index()) {
    case 0:
      return "known";
    case 1:
      return "extension_ambiguous";
    case 2:
      return "lower_bound";
    default:
      return "out_of_range";
  }
}

GroupResult sum_results(const std::vector<GroupResult>& parts, const std::vector<std::string>& labels,
                        const std::string& citation) {
  if (parts.size() == 1) return parts.front();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].is_out_of_range()) {
      std::string who = i < labels.size() ? labels[i] : "summand " + std::to_string(i);
      return OutOfRange{who + ": " + parts[i].as_out_of_range().reason};
    }

  FinAbGroup fixed;
  FinAbGroup bound_extra;
  bool bounded = false;
  std::vector<ExtensionFactor> factors;
  std::vector<FinAbGroup> candidates{FinAbGroup{}};
  std::string bound_cite;
  for (const auto& p : parts) {
    if (p.is_known()) {
      fixed = direct_sum(fixed, p.as_known().group);
    } else if (p.is_lower_bound()) {
      bounded = true;
      bound_extra = direct_sum(bound_extra, p.as_lower_bound().group);
      bound_cite = p.citation();
    } else {
      const auto& a = p.as_ambiguous();
      fixed = direct_sum(fixed, a.fixed);
      factors.insert(factors.end(), a.factors.begin(), a.factors.end());
      std::vector<FinAbGroup> next;
      for (const auto& c0 : candidates)
        for (const auto& c1 : a.candidates) next.push_back(direct_sum(c0, c1));
      candidates = sorted_unique(std::move(next));
    }
  }
  if (bounded) {
    FinAbGroup lb = direct_sum(fixed, bound_extra);
    for (const auto& f : factors) lb = direct_sum(lb, f.sub);
    return LowerBound{lb, citation + "; " + bound_cite};
  }
  if (factors.empty()) return Known{fixed, citation};

  // Ambiguous candidates already include their own fixed parts; add the Known ones.
  FinAbGroup known_part;
  for (const auto& p : parts)
    if (p.is_known()) known_part = direct_sum(known_part, p.as_known().group);
  for (auto& c : candidates) c = direct_sum(c, known_part);
  std::string cite = citation;
  for (const auto& p : parts)
    if (p.is_ambiguous()) cite += "; " + p.citation();
  return ExtensionAmbiguous{fixed, std::move(factors), sorted_unique(std::move(candidates)), cite};
}

GroupResult sphere_bracket(int n, int k) {
  const int d = n + k;
  if (!top_o_in_range(d)) return OutOfRange{"pi_" + deg(d) + "(Top/O) is beyond the table (1..20)"};
  return Known{pi_top_o(d), "pi_" + deg(d) + "(Top/O) table"};
}

std::optional<Known> moore_bracket_resolved(Int p, int r, int s) {
  if (p == 3 && s >= 1 && s <= 17) {
    bool nz = s == 9 || s == 10 || s == 12 || s == 13;
    return Known{nz ? C(3) : FinAbGroup{}, nz ? "odd Moore bracket lemma (b)" : "odd Moore bracket lemma (a)"};
  }
  if (p == 7 && s >= 1 && s <= 17) {
    bool nz = s == 6 || s == 7;
    return Known{nz ? C(7) : FinAbGroup{}, nz ? "odd Moore bracket lemma (d)" : "odd Moore bracket lemma (c)"};
  }
  if (p == 31 && s == 11) return Known{C(31), "odd Moore bracket lemma (e)"};
  if (p != 2) return std::nullopt;
  switch (s) {
    case 6:
      return Known{C(r == 1 ? 2 : 4), "2-primary Moore bracket lemma (a)"};
    case 7:
      return Known{r == 1 ? E2(2) : direct_sum(C(2), C(4)), "2-primary Moore bracket lemma (b)"};
    case 8:
      if (r == 1) return Known{FinAbGroup::canonicalize({4, 2, 2}), "2-primary Moore bracket lemma (c)"};
      return std::nullopt;
    case 9:
      return Known{r == 1 ? FinAbGroup::canonicalize({4, 2, 2}) : E2(4), "2-primary Moore bracket lemma (d)"};
    case 10:
      if (r == 1) return Known{E2(2), "2-primary Moore bracket lemma (e)"};
      return std::nullopt;
    case 11:
      return Known{C(ipow(2, std::min(r, 5))), "2-primary Moore bracket lemma (f)"};
    default:
      return std::nullopt;
  }
}

GroupResult moore_bracket_les(Int p, int r, int s) {
  if (!is_prime(p)) throw std::invalid_argument("moore_bracket: p must be prime");
  if (r < 1) throw std::invalid_argument("moore_bracket: r must be positive");
  if (s < 1 || !top_o_in_range(s) || !top_o_in_range(s + 1))
    return OutOfRange{"Moore sequence needs pi_" + deg(s) + " and pi_" + deg(s + 1) + " of Top/O"};
  const Int b = ipow(p, r);
  return GroupResult::extension(mult_cokernel(pi_top_o(s + 1), b), mult_kernel(pi_top_o(s), b),
                                "Moore cofiber sequence: coker(x" + std::to_string(b) + " on pi_" + deg(s + 1) +
                                    ") -> [] -> ker(x" + std::to_string(b) + " on pi_" + deg(s) + ")");
}

GroupResult moore_bracket(Int p, int r, int s) {
  if (!is_prime(p)) throw std::invalid_argument("moore_bracket: p must be prime");
  if (r < 1) throw std::invalid_argument("moore_bracket: r must be positive");
  if (auto k = moore_bracket_resolved(p, r, s)) return *k;
  return moore_bracket_les(p, r, s);
}

GroupResult susp_cp2_bracket(int s) {
  const std::string P = "CP2 bracket proposition ";
  switch (s) {
    case 2:
      return Known{FinAbGroup{}, P + "(1)"};
    case 3:
      return Known{theta(7), P + "(2)"};
    case 4:
      return Known{theta(8), P + "(3)"};
    case 5:
      return Known{direct_sum(C(2), C(56)), P + "(4), resolved non-split"};
    case 6:
      return Known{C(3), P + "(5)"};
    case 7: {
      auto r = GroupResult::extension(C(496), E2(2), P + "(6), extension unresolved");
      return r;
    }
    case 8:
      return Known{C(3), P + "(7)"};
    case 9:
      return Known{direct_sum(theta(13), theta(11)), P + "(8)"};
    case 10:
      return Known{theta(14), P + "(9)"};
    default:
      return OutOfRange{"CP2 bracket proposition covers suspensions 2..10, got " + deg(s)};
  }
}

GroupResult susp_cp2_bracket_les(int s) {
  const auto& eta = eta_star_table();
  const int a = s + 3, b = s + 2;
  if (b < eta.lo() || a > eta.hi())
    return OutOfRange{"CP2 cofiber sequence needs eta_* at degrees " + deg(b) + " and " + deg(a)};
  const auto& ra = eta.at(a);
  const auto& rb = eta.at(b);
  if (!ra.cokernel) return OutOfRange{"cokernel of eta_* at degree " + deg(a) + " is undetermined"};
  if (!rb.kernel) return OutOfRange{"kernel of eta_* at degree " + deg(b) + " is undetermined"};
  return GroupResult::extension(*ra.cokernel, *rb.kernel,
                                "CP2 cofiber sequence: coker(eta_* at " + deg(a) + ") -> [] -> ker(eta_* at " +
                                    deg(b) + ")");
}

GroupResult cp2_component(int s) {
  auto r = susp_cp2_bracket(s);
  if (!r.is_out_of_range()) return r;
  return susp_cp2_bracket_les(s);
}

namespace {

std::optional<FinAbGroup> eta_tilde_image_or_zero(int k, int r, const FinAbGroup& target) {
  if (target.is_trivial()) return FinAbGroup{};
  const auto& t = eta_tilde_table();
  if (k < t.lo() || k > t.hi()) return std::nullopt;
  return eta_tilde_image(k, r);
}

}  // namespace

GroupResult cone_eta_tilde_bracket(int r, int k) {
  if (r < 1) throw std::invalid_argument("cone_eta_tilde_bracket: r must be positive");
  if (k < 0) throw std::invalid_argument("cone_eta_tilde_bracket: suspension must be non-negative");
  const std::string where = "Cone(eta~_" + std::to_string(ipow(2, r)) + ") at suspension " + deg(k);
  if (!top_o_in_range(5 + k) || !top_o_in_range(4 + k))
    return OutOfRange{where + ": pi_" + deg(5 + k) + "(Top/O) is beyond the table"};

  // Left side: pi_{5+k} / image of eta~_* out of [Σ^{3+k} M].
  const FinAbGroup top = pi_top_o(5 + k);
  auto left_image = eta_tilde_image_or_zero(k, r, top);
  if (!left_image) return OutOfRange{where + ": eta~_* image at shift " + deg(k) + " is not tabulated"};
  auto cokers = possible_quotients(top, *left_image);
  if (cokers.size() != 1) return OutOfRange{where + ": cokernel of eta~_* is undetermined"};

  // Right side: kernel of eta~_* on [Σ^{2+k} M] into pi_{4+k}.
  auto source = moore_bracket(2, r, 2 + k);
  if (source.is_out_of_range()) return OutOfRange{where + ": " + source.citation()};
  if (!source.is_known()) return OutOfRange{where + ": [Σ^" + deg(2 + k) + " M(Z/2^r), Top/O] is undetermined"};
  const FinAbGroup mid = pi_top_o(4 + k);
  auto right_image = eta_tilde_image_or_zero(k - 1, r, mid);
  if (!right_image) return OutOfRange{where + ": eta~_* image at shift " + deg(k - 1) + " is not tabulated"};
  auto kers = possible_kernels(*source.group(), *right_image);
  if (kers.size() != 1) return OutOfRange{where + ": kernel of eta~_* is undetermined"};

  return GroupResult::extension(cokers.front(), kers.front(),
                                "cofiber sequence of " + where.substr(0, where.find(" at")) +
                                    " with eta~_* image lemma");
}

GroupResult summand_bracket(const Summand& s, int k) {
  return std::visit(
      [k](const auto& x) -> GroupResult {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          return sphere_bracket(x.n, k);
        } else if constexpr (std::is_same_v<T, SuspMoore>) {
          auto pp = as_prime_power(x.b);
          if (!pp) throw std::invalid_argument("Moore summand order must be a prime power");
          return moore_bracket(pp->prime, pp->exponent, x.s + k);
        } else if constexpr (std::is_same_v<T, SuspCP2>) {
          return cp2_component(x.s + k);
        } else {
          return cone_eta_tilde_bracket(x.r, k);
        }
      },
      s);
}

GroupResult splitting_bracket(const ManifoldSpec& spec, int k) {
  if (k < 0) throw std::invalid_argument("splitting_bracket: suspension must be non-negative");
  auto split = stable_splitting(spec);
  std::map<Summand, GroupResult> memo;
  std::vector<GroupResult> parts;
  std::vector<std::string> labels;
  for (const auto& s : split.summands) {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, summand_bracket(s, k)).first;
    parts.push_back(it->second);
    labels.push_back(describe(s));
  }
  return sum_results(parts, labels, "direct sum over the stable splitting");
}

GroupResult closed_form_cM4(const ManifoldSpec& spec, int k) {
  require_valid(spec);
  if (spec.dimension != 4) throw std::invalid_argument("closed_form_cM4 applies to 4-manifolds");
  if (k < 1 || k > 5) throw RangeError("closed_form_cM4: k must lie in 1..5");
  const int m = spec.h1_free_rank, d = spec.h2_free_rank;
  int l2 = 0, l21 = 0, l7 = 0;
  for (Int b : spec.h2_torsion) {
    auto pp = *as_prime_power(b);
    if (pp.prime == 2) {
      ++l2;
      if (pp.exponent == 1) ++l21;
    }
    if (pp.prime == 7) ++l7;
  }
  const FinAbGroup pi3 = pi_top_o(3);
  const std::string cite = "closed-form [Σ^k M, Top/O] proposition (" +
                           std::string(k == 1 ? "i" : k == 2 ? "ii" : k == 3 ? "iii" : k == 4 ? "iv" : "v") +
                           ")";
  auto two_power_part = [&] { return direct_sum(power(C(2), l21), power(C(4), l2 - l21)); };
  switch (k) {
    case 1:
      return Known{power(pi3, 2 * l2 + d), cite};
    case 2:
      return Known{power(pi3, m + l2), cite};
    case 3:
      return Known{theta(7), cite};
    case 4:
      return Known{direct_sum({theta(8), power(theta(7), m), two_power_part(), power(C(7), l7)}), cite};
    default: {
      FinAbGroup common = direct_sum({power(theta(8), m), two_power_part(), power(C(7), 2 * l7),
                                      power(E2(2), l21), power(direct_sum(C(2), C(4)), l2 - l21)});
      if (spec.spin) return Known{direct_sum({theta(9), common, power(theta(7), d)}), cite + "(a)"};
      return Known{direct_sum({C(56), C(2), common, power(theta(7), d - 1)}), cite + "(b)"};
    }
  }
}

}  // namespace smooth
