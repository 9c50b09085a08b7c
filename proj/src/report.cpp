#include "smooth/report.hpp"

#include <iomanip>
#include <sstream>

namespace smooth {

json to_json(const FinAbGroup& g) { return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}; }

FinAbGroup group_from_json(const json& j) {
  return FinAbGroup::canonicalize(j.at("torsion").get<std::vector<Int>>(), j.at("free_rank").get<int>());
}

namespace {

json groups_json(const std::vector<FinAbGroup>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(to_json(g));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string show(const std::optional<FinAbGroup>& g) { return g ? g->to_string() : "unknown"; }

}  // namespace

json to_json(const GroupResult& r) {
  json out = {{"tag", r.tag()}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Known>) {
          out["group"] = to_json(x.group);
          out["text"] = x.group.to_string();
          out["citation"] = x.citation;
        } else if constexpr (std::is_same_v<T, ExtensionAmbiguous>) {
          out["fixed"] = to_json(x.fixed);
          json fs = json::array();
          for (const auto& f : x.factors) fs.push_back({{"sub", to_json(f.sub)}, {"quot", to_json(f.quot)}});
          out["factors"] = fs;
          out["sub"] = to_json(x.sub());
          out["quot"] = to_json(x.quot());
          out["candidates"] = groups_json(x.candidates);
          out["citation"] = x.citation;
        } else if constexpr (std::is_same_v<T, LowerBound>) {
          out["group"] = to_json(x.group);
          out["text"] = x.group.to_string();
          out["citation"] = x.citation;
        } else {
          out["reason"] = x.reason;
        }
      },
      r.variant());
  return out;
}

GroupResult result_from_json(const json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "known") return Known{group_from_json(j.at("group")), j.at("citation").get<std::string>()};
  if (tag == "lower_bound") return LowerBound{group_from_json(j.at("group")), j.at("citation").get<std::string>()};
  if (tag == "out_of_range") return OutOfRange{j.at("reason").get<std::string>()};
  if (tag != "extension_ambiguous") throw std::invalid_argument("unknown result tag " + tag);
  ExtensionAmbiguous a;
  a.fixed = group_from_json(j.at("fixed"));
  for (const auto& f : j.at("factors")) a.factors.push_back({group_from_json(f.at("sub")), group_from_json(f.at("quot"))});
  for (const auto& c : j.at("candidates")) a.candidates.push_back(group_from_json(c));
  a.citation = j.at("citation").get<std::string>();
  return a;
}

json to_json(const StableSplitting& s) {
  json items = json::array();
  for (const auto& x : s.summands) {
    json e = {{"text", describe(x)}};
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Sphere>) {
            e["kind"] = "sphere";
            e["n"] = v.n;
          } else if constexpr (std::is_same_v<T, SuspMoore>) {
            e["kind"] = "susp_moore";
            e["b"] = v.b;
            e["s"] = v.s;
          } else if constexpr (std::is_same_v<T, SuspCP2>) {
            e["kind"] = "susp_cp2";
            e["s"] = v.s;
          } else {
            e["kind"] = "cone_eta_tilde";
            e["r"] = v.r;
          }
        },
        x);
    items.push_back(e);
  }
  return {{"summands", items}};
}

json to_json(const InertiaResult& r) {
  json out = {{"value", to_json(r.value)}, {"derivation", to_string(r.derivation)}};
  if (r.cross_check)
    out["cross_check"] = {{"expected", to_json(r.cross_check->expected)},
                          {"match", r.cross_check->match},
                          {"citation", r.cross_check->citation}};
  else
    out["cross_check"] = nullptr;
  return out;
}

json to_json(const ClassificationReport& r) {
  return {{"k", r.k},
          {"diffeo_class_count", r.diffeo_class_count},
          {"representatives", r.representatives},
          {"inertia_group", to_json(r.inertia_group)},
          {"notes", r.notes}};
}

json to_json(const std::vector<Diagnostic>& diags) {
  json out = json::array();
  for (const auto& d : diags)
    out.push_back({{"severity", d.severity == Diagnostic::Severity::error ? "error" : "warning"},
                   {"field", d.field},
                   {"message", d.message}});
  return out;
}

json to_json(const GradedTable& t) {
  json rows = json::array();
  for (const auto& [deg, e] : t.entries())
    rows.push_back({{"degree", deg}, {"group", to_json(e.group)}, {"text", e.group.to_string()}, {"citation", e.citation}});
  return {{"name", t.name()}, {"range", {t.lo(), t.hi()}}, {"entries", rows}};
}

json to_json(const MapImageTable& t) {
  json rows = json::array();
  for (const auto& e : t.rows()) {
    json row = {{"key", e.key_label()},
                {"degree", e.degree},
                {"image", to_json(e.image)},
                {"text", e.image.to_string()},
                {"citation", e.citation}};
    if (e.r_lo) row["r_range"] = {e.r_lo, e.r_hi};
    row["source"] = e.source ? to_json(*e.source) : json(nullptr);
    row["kernel"] = e.kernel ? to_json(*e.kernel) : json(nullptr);
    row["cokernel"] = e.cokernel ? to_json(*e.cokernel) : json(nullptr);
    rows.push_back(row);
  }
  return {{"name", t.name()}, {"description", t.description()}, {"range", {t.lo(), t.hi()}}, {"entries", rows}};
}

std::string render(const GroupResult& r) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Known>) {
          return x.group.to_string() + " [" + x.citation + "]";
        } else if constexpr (std::is_same_v<T, ExtensionAmbiguous>) {
          std::vector<std::string> cs;
          for (const auto& c : x.candidates) cs.push_back(c.to_string());
          std::string head = x.fixed.is_trivial() ? "" : x.fixed.to_string() + " ⊕ ";
          std::vector<std::string> ext;
          for (const auto& f : x.factors) ext.push_back("ext(" + f.quot.to_string() + " by " + f.sub.to_string() + ")");
          return head + join(ext, " ⊕ ") + ", one of {" + join(cs, "; ") + "} [" + x.citation + "]";
        } else if constexpr (std::is_same_v<T, LowerBound>) {
          return "contains " + x.group.to_string() + " [" + x.citation + "]";
        } else {
          return "out of range: " + x.reason;
        }
      },
      r.variant());
}

std::string render(const StableSplitting& s) {
  std::vector<std::string> parts;
  for (const auto& x : s.summands) parts.push_back(describe(x));
  return join(parts, " ∨ ");
}

std::string render(const InertiaResult& r) {
  std::string out;
  if (r.value.is_known() && r.cross_check)
    out = "I_c = " + r.value.as_known().group.to_string() + " [" + r.cross_check->citation + "; via " +
          r.value.citation() + "]";
  else
    out = "I_c = " + render(r.value);
  out += "\nderivation: " + to_string(r.derivation);
  if (r.cross_check)
    out += "\ncross-check: " + r.cross_check->expected.to_string() + " per " + r.cross_check->citation +
           (r.cross_check->match ? " (match)" : " (not compared)");
  else
    out += "\ncross-check: none (outside the theorem's stated cases)";
  return out;
}

std::string render(const ClassificationReport& r) {
  std::ostringstream os;
  os << "CP2 x S^" << r.k << ": " << r.diffeo_class_count << " oriented diffeomorphism class"
     << (r.diffeo_class_count == 1 ? "" : "es") << "\n";
  for (const auto& rep : r.representatives) os << "  " << rep << "\n";
  os << "inertia group: " << r.inertia_group.to_string() << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render(const GradedTable& t) {
  std::ostringstream os;
  os << "# " << t.name() << " (degrees " << t.lo() << ".." << t.hi() << ")\n";
  for (const auto& [deg, e] : t.entries())
    os << std::setw(4) << deg << "  " << std::left << std::setw(24) << e.group.to_string() << std::right << "  "
       << e.citation << "\n";
  return os.str();
}

std::string render(const MapImageTable& t) {
  std::ostringstream os;
  os << "# " << t.name() << ": " << t.description() << "\n";
  for (const auto& e : t.rows()) {
    os << std::left << std::setw(12) << e.key_label() << " image " << std::setw(14) << e.image.to_string();
    if (e.source) os << " kernel " << std::setw(16) << show(e.kernel) << " cokernel " << std::setw(14) << show(e.cokernel);
    os << std::right << "  " << e.citation << "\n";
  }
  return os.str();
}

std::string render(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags)
    out += std::string(d.severity == Diagnostic::Severity::error ? "error" : "warning") + ": " + d.field + ": " +
           d.message + "\n";
  return out;
}

}  // namespace smooth
