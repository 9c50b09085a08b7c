// Command-line front end for the smooth-structure calculator.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "smooth/check.hpp"
#include "smooth/report.hpp"

namespace fs = std::filesystem;
using namespace smooth;

namespace {

enum Exit { kOk = 0, kValidation = 1, kRange = 2, kMismatch = 3 };

struct Options {
  std::string format = "text";
  std::string spec_path;
  int k = 0;
  std::string table = "all";
  Int moore_b = 2;
  std::uint64_t seed = 20240101;
  std::string dump_dir;
  bool machine() const { return format == "machine"; }
};

ManifoldSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError(0, 0, "cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_spec(ss.str());
  } catch (const SpecParseError& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

ManifoldSpec load_valid_spec(const Options& o) {
  auto spec = load_spec(o.spec_path);
  auto diags = validate(spec);
  for (const auto& d : diags)
    if (d.severity == Diagnostic::Severity::warning) std::cerr << "warning: " << d.field << ": " << d.message << "\n";
  if (has_errors(diags)) throw ValidationError(diags);
  return spec;
}

void emit(const Options& o, const json& machine, const std::string& text) {
  std::cout << (o.machine() ? machine.dump(2) : text) << "\n";
}

int result_status(const GroupResult& r) { return r.is_out_of_range() ? kRange : kOk; }

std::vector<json> all_tables_json() {
  std::vector<json> out = {to_json(stable_stems_table()), to_json(top_o_table()), to_json(g_o_table()),
                           to_json(g_top_table()),         to_json(eta_star_table()), to_json(eta_sq_table()),
                           to_json(i_eta_table()),         to_json(eta_tilde_table())};
  for (Int b : {2, 3, 4, 7, 8, 9, 24}) out.push_back(to_json(moore_table(b)));
  std::map<int, TableEntry> th;
  for (int n = 5; n <= 20; ++n) th.emplace(n, TableEntry{theta(n), "Θ_n identified with pi_n(Top/O)"});
  out.push_back(to_json(GradedTable("theta", 5, 20, th)));
  return out;
}

int cmd_tables(const Options& o) {
  const std::string& name = o.table;
  std::vector<json> js;
  std::string text;
  auto graded = [&](const GradedTable& t) {
    js.push_back(to_json(t));
    text += render(t);
  };
  auto mapped = [&](const MapImageTable& t) {
    js.push_back(to_json(t));
    text += render(t);
  };
  bool all = name == "all";
  if (all || name == "stable_stems") graded(stable_stems_table());
  if (all || name == "moore") graded(moore_table(o.moore_b));
  if (all || name == "top_o") graded(top_o_table());
  if (all || name == "g_o") graded(g_o_table());
  if (all || name == "g_top") graded(g_top_table());
  if (all || name == "theta") {
    std::map<int, TableEntry> th;
    for (int n = 5; n <= 20; ++n) th.emplace(n, TableEntry{theta(n), "Θ_n identified with pi_n(Top/O)"});
    graded(GradedTable("theta", 5, 20, th));
  }
  if (all || name == "eta_star") mapped(eta_star_table());
  if (all || name == "eta_sq") mapped(eta_sq_table());
  if (all || name == "i_eta") mapped(i_eta_table());
  if (all || name == "eta_tilde") mapped(eta_tilde_table());
  if (js.empty()) throw std::invalid_argument("unknown table " + name);
  emit(o, json(js), text);
  return kOk;
}

int dump_tables(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& t : all_tables_json()) {
    std::ofstream out(fs::path(dir) / (t.at("name").get<std::string>() + ".json"));
    out << t.dump(2) << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o) {
  auto lines = run_golden_checks(o.seed);
  bool ok = true;
  json js = json::array();
  std::string text;
  for (const auto& l : lines) {
    ok = ok && l.pass;
    js.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    text += std::string(l.pass ? "PASS " : "FAIL ") + l.name + (l.pass ? "" : ": " + l.detail) + "\n";
  }
  text += ok ? "all checks passed" : "check failures found";
  emit(o, js, text);
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concordance smooth structures on M x S^k for 4- and 5-manifolds"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--tables-dump", o.dump_dir, "Write every table as JSON records into DIR");

  auto with_spec = [&](CLI::App* sub, bool needs_k) {
    sub->add_option("--spec", o.spec_path, "Manifold spec file (JSON)")->required()->check(CLI::ExistingFile);
    if (needs_k) sub->add_option("-k", o.k, "Suspension / sphere dimension k")->required();
  };
  auto* splitting = app.add_subcommand("splitting", "Stable wedge decomposition of M");
  with_spec(splitting, false);
  auto* bracket = app.add_subcommand("bracket", "[Σ^k M, Top/O]");
  with_spec(bracket, true);
  auto* concordance = app.add_subcommand("concordance", "Concordance structure set C(M x S^k)");
  with_spec(concordance, true);
  auto* inertia = app.add_subcommand("inertia", "Concordance inertia group I_c(M x S^k)");
  with_spec(inertia, true);
  auto* tables = app.add_subcommand("tables", "Print a group table");
  tables->add_option("name", o.table, "Table name or 'all'");
  tables->add_option("--b", o.moore_b, "Order b for the Moore spectrum table")->check(CLI::Range(Int{2}, Int{1} << 40));
  auto* classify = app.add_subcommand("classify-cp2", "Smooth structures on CP2 x S^k, k = 3..6");
  classify->add_option("-k", o.k, "Sphere dimension")->required();
  auto* check = app.add_subcommand("check", "Run golden tables and oracle sweeps");
  check->add_option("--seed", o.seed, "Seed for randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (!o.dump_dir.empty()) dump_tables(o.dump_dir);
    if (*splitting) {
      auto s = stable_splitting(load_valid_spec(o));
      emit(o, to_json(s), render(s));
      return kOk;
    }
    if (*bracket) {
      auto r = splitting_bracket(load_valid_spec(o), o.k);
      emit(o, to_json(r), render(r));
      return result_status(r);
    }
    if (*concordance) {
      auto r = concordance_set(load_valid_spec(o), o.k);
      emit(o, to_json(r), "C(M x S^" + std::to_string(o.k) + ") = " + render(r));
      return result_status(r);
    }
    if (*inertia) {
      auto r = concordance_inertia(load_valid_spec(o), o.k);
      emit(o, to_json(r), render(r));
      return result_status(r.value);
    }
    if (*tables) return cmd_tables(o);
    if (*classify) {
      auto r = classify_cp2(o.k);
      emit(o, to_json(r), render(r));
      return kOk;
    }
    if (*check) return cmd_check(o);
    if (o.dump_dir.empty()) std::cout << app.help();
    return kOk;
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    std::cerr << render(e.diagnostics());
    return kValidation;
  } catch (const CrossCheckError& e) {
    std::cerr << "internal cross-check mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const RangeError& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kRange;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
