#include "smooth/manifold.hpp"

#include <algorithm>
#include <limits>
#include <json.hpp>

namespace smooth {

using nlohmann::json;

std::string to_string(Attaching a) {
  switch (a) {
    case Attaching::sphere_eta:
      return "sphere_eta";
    case Attaching::moore_eta_tilde:
      return "moore_eta_tilde";
    default:
      return "auto";
  }
}

std::optional<Attaching> attaching_from_string(std::string_view s) {
  if (s == "auto") return Attaching::automatic;
  if (s == "sphere_eta") return Attaching::sphere_eta;
  if (s == "moore_eta_tilde") return Attaching::moore_eta_tilde;
  return std::nullopt;
}

namespace {

Diagnostic error(std::string field, std::string msg) {
  return {Diagnostic::Severity::error, std::move(field), std::move(msg)};
}

Diagnostic warning(std::string field, std::string msg) {
  return {Diagnostic::Severity::warning, std::move(field), std::move(msg)};
}

bool has_two_torsion(const ManifoldSpec& spec) {
  return std::any_of(spec.h2_torsion.begin(), spec.h2_torsion.end(), [](Int b) { return b >= 2 && b % 2 == 0; });
}

std::string render_errors(const std::vector<Diagnostic>& diags) {
  std::string out = "invalid manifold spec";
  for (const auto& d : diags)
    if (d.severity == Diagnostic::Severity::error) out += "; " + d.field + ": " + d.message;
  return out;
}

// Barden-style profile: every torsion summand paired, up to one extra Z/2 when non-spin.
bool paired_torsion(const ManifoldSpec& spec) {
  std::map<Int, int> mult;
  for (Int b : spec.h2_torsion) ++mult[b];
  int unpaired_two = 0;
  for (auto [b, n] : mult) {
    if (n % 2 == 0) continue;
    if (b == 2 && !spec.spin) {
      ++unpaired_two;
      continue;
    }
    return false;
  }
  return unpaired_two <= 1;
}

}  // namespace

std::vector<Diagnostic> validate(const ManifoldSpec& spec) {
  std::vector<Diagnostic> out;
  if (spec.dimension != 4 && spec.dimension != 5) {
    out.push_back(error("dimension", "dimension must be 4 or 5, got " + std::to_string(spec.dimension)));
    return out;
  }
  if (spec.h1_free_rank < 0) out.push_back(error("h1_free_rank", "must be non-negative"));
  if (spec.h2_free_rank < 0) out.push_back(error("h2_free_rank", "must be non-negative"));
  for (Int b : spec.h2_torsion)
    if (!as_prime_power(b)) out.push_back(error("h2_torsion", std::to_string(b) + " is not a prime power"));

  if (spec.dimension == 4) {
    if (!spec.spin && spec.h2_free_rank == 0)
      out.push_back(error("h2_free_rank", "non-spin 4-manifold requires d >= 1"));
    if (spec.nonspin_attaching != Attaching::automatic)
      out.push_back(error("nonspin_attaching", "attaching type applies only to non-spin 5-manifolds"));
    return out;
  }

  if (spec.h1_free_rank != 0)
    out.push_back(error("h1_free_rank", "simply connected 5-manifold requires m = 0"));
  if (spec.spin && spec.nonspin_attaching != Attaching::automatic)
    out.push_back(error("nonspin_attaching", "attaching type applies only to non-spin 5-manifolds"));
  if (!spec.spin) {
    bool two = has_two_torsion(spec);
    if (spec.nonspin_attaching == Attaching::moore_eta_tilde && !two)
      out.push_back(error("nonspin_attaching", "moore_eta_tilde requires a 2-power torsion entry"));
    bool sphere = spec.nonspin_attaching == Attaching::sphere_eta ||
                  (spec.nonspin_attaching == Attaching::automatic && !two);
    if (sphere && spec.h2_free_rank == 0)
      out.push_back(error("h2_free_rank", "sphere_eta splitting requires d >= 1"));
  }
  if (!paired_torsion(spec))
    out.push_back(warning("h2_torsion", "torsion is not of the paired form T ⊕ T (⊕ Z/2); realizability unchecked"));
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::error; });
}

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::invalid_argument(render_errors(diags)), diags_(std::move(diags)) {}

void require_valid(const ManifoldSpec& spec) {
  auto diags = validate(spec);
  if (has_errors(diags)) throw ValidationError(std::move(diags));
}

std::string describe(const Summand& s) {
  struct V {
    std::string operator()(const Sphere& x) const { return "S^" + std::to_string(x.n); }
    std::string operator()(const SuspMoore& x) const {
      return "Σ^" + std::to_string(x.s) + " M(Z/" + std::to_string(x.b) + ")";
    }
    std::string operator()(const SuspCP2& x) const { return "Σ^" + std::to_string(x.s) + " CP2"; }
    std::string operator()(const ConeEtaTilde& x) const {
      return "Cone(η̃_" + std::to_string(Int{1} << x.r) + ")";
    }
  };
  return std::visit(V{}, s);
}

std::optional<int> min_two_exponent(const ManifoldSpec& spec) {
  std::optional<int> best;
  for (Int b : spec.h2_torsion) {
    auto pp = as_prime_power(b);
    if (pp && pp->prime == 2 && (!best || pp->exponent < *best)) best = pp->exponent;
  }
  return best;
}

Attaching resolved_attaching(const ManifoldSpec& spec) {
  if (spec.nonspin_attaching != Attaching::automatic) return spec.nonspin_attaching;
  return has_two_torsion(spec) ? Attaching::moore_eta_tilde : Attaching::sphere_eta;
}

StableSplitting stable_splitting(const ManifoldSpec& spec) {
  require_valid(spec);
  std::vector<Summand> out;
  const int m = spec.h1_free_rank, d = spec.h2_free_rank;

  if (spec.dimension == 4) {
    out.push_back(spec.spin ? Summand{Sphere{4}} : Summand{SuspCP2{0}});
    for (int i = 0; i < m; ++i) {
      out.push_back(Sphere{1});
      out.push_back(Sphere{3});
    }
    for (Int b : spec.h2_torsion) {
      out.push_back(SuspMoore{b, 1});
      out.push_back(SuspMoore{b, 2});
    }
    for (int i = 0; i < (spec.spin ? d : d - 1); ++i) out.push_back(Sphere{2});
  } else if (spec.spin) {
    out.push_back(Sphere{5});
    for (int i = 0; i < d; ++i) {
      out.push_back(Sphere{2});
      out.push_back(Sphere{3});
    }
    for (Int b : spec.h2_torsion) out.push_back(SuspMoore{b, 2});
  } else if (resolved_attaching(spec) == Attaching::sphere_eta) {
    out.push_back(SuspCP2{1});
    for (int i = 0; i < d - 1; ++i) {
      out.push_back(Sphere{2});
      out.push_back(Sphere{3});
    }
    out.push_back(Sphere{2});
    for (Int b : spec.h2_torsion) out.push_back(SuspMoore{b, 2});
  } else {
    const int r = *min_two_exponent(spec);
    out.push_back(ConeEtaTilde{r});
    for (int i = 0; i < d; ++i) {
      out.push_back(Sphere{2});
      out.push_back(Sphere{3});
    }
    bool consumed = false;
    for (Int b : spec.h2_torsion) {
      if (!consumed && b == (Int{1} << r)) {
        consumed = true;
        continue;
      }
      out.push_back(SuspMoore{b, 2});
    }
  }
  std::sort(out.begin(), out.end());
  return StableSplitting{std::move(out)};
}

namespace {

void accumulate(std::map<int, FinAbGroup>& into, int degree, const FinAbGroup& g) {
  if (g.is_trivial()) return;
  into[degree] = direct_sum(into[degree], g);
}

}  // namespace

std::map<int, FinAbGroup> reduced_homology(const Summand& s) {
  std::map<int, FinAbGroup> out;
  const auto Z = FinAbGroup::free(1);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Sphere>) {
          accumulate(out, x.n, Z);
        } else if constexpr (std::is_same_v<T, SuspMoore>) {
          accumulate(out, x.s, FinAbGroup::cyclic(x.b));
        } else if constexpr (std::is_same_v<T, SuspCP2>) {
          accumulate(out, x.s + 2, Z);
          accumulate(out, x.s + 4, Z);
        } else {
          accumulate(out, 2, FinAbGroup::cyclic(Int{1} << x.r));
          accumulate(out, 5, Z);
        }
      },
      s);
  return out;
}

std::map<int, FinAbGroup> reduced_homology(const StableSplitting& split) {
  std::map<int, FinAbGroup> out;
  for (const auto& s : split.summands)
    for (const auto& [deg, g] : reduced_homology(s)) accumulate(out, deg, g);
  return out;
}

std::map<int, FinAbGroup> homology_profile(const ManifoldSpec& spec) {
  std::map<int, FinAbGroup> out;
  const FinAbGroup T = FinAbGroup::canonicalize(spec.h2_torsion);
  if (spec.dimension == 4) {
    accumulate(out, 1, direct_sum(FinAbGroup::free(spec.h1_free_rank), T));
    accumulate(out, 2, direct_sum(FinAbGroup::free(spec.h2_free_rank), T));
    accumulate(out, 3, FinAbGroup::free(spec.h1_free_rank));
    accumulate(out, 4, FinAbGroup::free(1));
  } else {
    accumulate(out, 2, direct_sum(FinAbGroup::free(spec.h2_free_rank), T));
    accumulate(out, 3, FinAbGroup::free(spec.h2_free_rank));
    accumulate(out, 5, FinAbGroup::free(1));
  }
  return out;
}

SpecParseError::SpecParseError(int line, int column, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message
                                  : message),
      line_(line),
      column_(column) {}

namespace {

std::pair<int, int> line_col(std::string_view text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at_key(std::string_view text, const std::string& key, const std::string& msg) {
  auto pos = text.find("\"" + key + "\"");
  if (pos == std::string_view::npos) throw SpecParseError(0, 0, key + ": " + msg);
  auto [line, col] = line_col(text, pos);
  throw SpecParseError(line, col, key + ": " + msg);
}

int read_int(std::string_view text, const json& j, const std::string& key) {
  if (!j.is_number_integer()) fail_at_key(text, key, "expected an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail_at_key(text, key, "integer out of range");
  return static_cast<int>(v);
}

}  // namespace

ManifoldSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    auto cut = what.find("syntax error");
    throw SpecParseError(line, col, cut == std::string::npos ? what : what.substr(cut));
  }
  if (!doc.is_object()) throw SpecParseError(1, 1, "spec must be a JSON object");

  ManifoldSpec spec;
  bool saw_dimension = false, saw_spin = false;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "dimension") {
      spec.dimension = read_int(text, v, key);
      saw_dimension = true;
    } else if (key == "spin") {
      if (!v.is_boolean()) fail_at_key(text, key, "expected true or false");
      spec.spin = v.get<bool>();
      saw_spin = true;
    } else if (key == "h1_free_rank") {
      spec.h1_free_rank = read_int(text, v, key);
    } else if (key == "h2_free_rank") {
      spec.h2_free_rank = read_int(text, v, key);
    } else if (key == "h2_torsion") {
      if (!v.is_array()) fail_at_key(text, key, "expected an array of prime powers");
      for (const auto& b : v) {
        if (!b.is_number_integer()) fail_at_key(text, key, "entries must be integers");
        spec.h2_torsion.push_back(b.get<Int>());
      }
    } else if (key == "nonspin_attaching") {
      if (!v.is_string()) fail_at_key(text, key, "expected a string");
      auto a = attaching_from_string(v.get<std::string>());
      if (!a) fail_at_key(text, key, "expected one of auto, sphere_eta, moore_eta_tilde");
      spec.nonspin_attaching = *a;
    } else {
      fail_at_key(text, key, "unknown field");
    }
  }
  if (!saw_dimension) throw SpecParseError(0, 0, "missing required field \"dimension\"");
  if (!saw_spin) throw SpecParseError(0, 0, "missing required field \"spin\"");
  return spec;
}

std::string spec_to_json(const ManifoldSpec& spec) {
  json j = {{"dimension", spec.dimension},
            {"spin", spec.spin},
            {"h1_free_rank", spec.h1_free_rank},
            {"h2_free_rank", spec.h2_free_rank},
            {"h2_torsion", spec.h2_torsion},
            {"nonspin_attaching", to_string(spec.nonspin_attaching)}};
  return j.dump();
}

}  // namespace smooth
