#include <catch_amalgamated.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "smooth/report.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, bool with_stderr = true) {
  const std::string cmd = std::string(SMOOTHSTRUCT_BIN) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("inertia subcommand") {
  auto r = run("inertia --spec " + data("cp2.spec") + " -k 14");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("I_c = Z/2 ⊕ Z/2 [Theorem A(1)(a); via η* image at degree 17]\n", 0) == 0);

  auto m = run("--format machine inertia --spec " + data("five_eta_tilde.spec") + " -k 6", false);
  CHECK(m.status == 0);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j["derivation"] == "eta_tilde_image");
  CHECK(smooth::result_from_json(j["value"]).group() == smooth::FinAbGroup::cyclic(4));
}

TEST_CASE("classify-cp2 subcommand") {
  auto r = run("classify-cp2 -k 6 --format machine", false);
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["diffeo_class_count"] == 3);
  CHECK(j["representatives"].size() == 3);
  CHECK(run("classify-cp2 -k 7").status == 1);
}

TEST_CASE("bracket, splitting and concordance subcommands") {
  auto b = run("bracket --spec " + data("cp2.spec") + " -k 6");
  CHECK(b.status == 0);
  CHECK(b.out.rfind("Z/3 [", 0) == 0);

  auto m = run("bracket --spec " + data("cp2.spec") + " -k 7 --format machine", false);
  CHECK(m.status == 0);
  auto res = smooth::result_from_json(nlohmann::json::parse(m.out));
  REQUIRE(res.is_ambiguous());
  CHECK(res.as_ambiguous().candidates.size() == 2);

  auto s = run("splitting --spec " + data("five_eta_tilde.spec"));
  CHECK(s.status == 0);
  CHECK(s.out.find("Cone(η̃_2)") != std::string::npos);

  auto c = run("concordance --spec " + data("cp2.spec") + " -k 4");
  CHECK(c.status == 0);
  CHECK(c.out.rfind("C(M x S^4) = Z/2 [", 0) == 0);
}

TEST_CASE("exit codes for bad input") {
  auto field = run("splitting --spec " + data("bad_field.spec"));
  CHECK(field.status == 1);
  CHECK(field.out.find("line 4") != std::string::npos);
  CHECK(field.out.find("colour") != std::string::npos);

  auto syntax = run("splitting --spec " + data("bad_syntax.spec"));
  CHECK(syntax.status == 1);
  CHECK(syntax.out.find("line 4") != std::string::npos);

  auto invalid = run("bracket --spec " + data("nonspin_d0.spec") + " -k 2");
  CHECK(invalid.status == 1);
  CHECK(invalid.out.find("h2_free_rank") != std::string::npos);

  CHECK(run("inertia --spec " + data("cp2.spec") + " -k 0").status == 1);
  CHECK(run("bracket --spec " + data("missing.spec") + " -k 1").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("--format yaml check").status == 1);
}

TEST_CASE("exit code for out-of-range queries") {
  CHECK(run("bracket --spec " + data("cp2.spec") + " -k 40").status == 2);
  CHECK(run("inertia --spec " + data("cp2.spec") + " -k 19").status == 2);
  CHECK(run("tables top_o_99").status == 1);
  CHECK(run("inertia --spec " + data("cp2.spec") + " -k 17").status == 0);
}

TEST_CASE("tables subcommand and dumps") {
  auto t = run("tables top_o");
  CHECK(t.status == 0);
  CHECK(t.out.find("Z/8128") != std::string::npos);
  CHECK(run("tables moore --b 12").status == 0);

  const auto dir = std::filesystem::temp_directory_path() / "smoothstruct_dump_test";
  std::filesystem::remove_all(dir);
  auto d = run("--tables-dump " + dir.string());
  REQUIRE(d.status == 0);
  for (const char* name : {"top_o", "g_o", "eta_star", "eta_sq", "i_eta", "eta_tilde", "stable_stems"}) {
    const auto file = dir / (std::string(name) + ".json");
    INFO(file.string());
    REQUIRE(std::filesystem::exists(file));
    std::ifstream in(file);
    auto j = nlohmann::json::parse(in);
    REQUIRE_FALSE(j["entries"].empty());
    for (const auto& e : j["entries"]) CHECK(e.contains("citation"));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("check subcommand") {
  auto r = run("check");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
