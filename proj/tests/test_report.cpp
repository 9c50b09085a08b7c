#include <catch_amalgamated.hpp>
#include <random>

#include "smooth/check.hpp"
#include "smooth/report.hpp"

using namespace smooth;

namespace {

GroupResult round_trip(const GroupResult& r) { return result_from_json(json::parse(to_json(r).dump())); }

ManifoldSpec cp2() {
  ManifoldSpec s;
  s.spin = false;
  s.h2_free_rank = 1;
  return s;
}

}  // namespace

TEST_CASE("group json round trip") {
  for (const auto& g : {FinAbGroup{}, FinAbGroup::canonicalize({2, 56}), FinAbGroup::canonicalize({6}, 3)})
    CHECK(group_from_json(json::parse(to_json(g).dump())) == g);
}

TEST_CASE("result json round trip for every variant") {
  CHECK(round_trip(susp_cp2_bracket(5)) == susp_cp2_bracket(5));
  CHECK(round_trip(susp_cp2_bracket(7)) == susp_cp2_bracket(7));
  CHECK(round_trip(LowerBound{FinAbGroup::cyclic(2), "lower"}) == GroupResult(LowerBound{FinAbGroup::cyclic(2), "lower"}));
  CHECK(round_trip(sphere_bracket(4, 40)) == sphere_bracket(4, 40));
  CHECK_THROWS(result_from_json(json{{"tag", "bogus"}}));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    auto s = random_spec(rng);
    for (int k = 0; k <= 14; k += 2) {
      auto r = splitting_bracket(s, k);
      CHECK(round_trip(r) == r);
    }
  }
}

TEST_CASE("machine output of ambiguous results lists candidates") {
  auto j = to_json(susp_cp2_bracket(7));
  CHECK(j["tag"] == "extension_ambiguous");
  CHECK(j["candidates"].size() == 2);
  CHECK(group_from_json(j["sub"]) == FinAbGroup::cyclic(496));
}

TEST_CASE("inertia rendering") {
  auto text = render(concordance_inertia(cp2(), 14));
  CHECK(text.substr(0, text.find('\n')) == "I_c = Z/2 ⊕ Z/2 [Theorem A(1)(a); via η* image at degree 17]");
  auto j = to_json(concordance_inertia(cp2(), 14));
  CHECK(j["derivation"] == "eta_image");
  CHECK(j["cross_check"]["match"] == true);
  CHECK(render(concordance_inertia(cp2(), 17)).rfind("I_c = contains Z/2", 0) == 0);
}

TEST_CASE("classification reports") {
  auto r6 = classify_cp2(6);
  CHECK(r6.diffeo_class_count == 3);
  CHECK(r6.representatives.size() == 3);
  CHECK(r6.inertia_group == FinAbGroup::cyclic(2));
  auto r4 = classify_cp2(4);
  CHECK(r4.diffeo_class_count == 1);
  CHECK(r4.inertia_group == theta(8));
  auto r5 = classify_cp2(5);
  CHECK(r5.diffeo_class_count == 1);
  CHECK(r5.inertia_group == theta(9));
  CHECK(classify_cp2(3).inertia_group == theta(7));
  CHECK_THROWS_AS(classify_cp2(7), UnsupportedError);
  CHECK_THROWS_AS(classify_cp2(2), UnsupportedError);

  auto j = to_json(r6);
  CHECK(j["representatives"].size() == 3);
  CHECK(j["diffeo_class_count"] == 3);
  CHECK(render(r6).find("3 oriented diffeomorphism classes") != std::string::npos);
}

TEST_CASE("table dumps carry citations") {
  auto j = to_json(eta_star_table());
  CHECK(j["entries"].size() == 19);
  for (const auto& e : j["entries"]) CHECK_FALSE(e["citation"].get<std::string>().empty());
  CHECK(j["entries"][17]["kernel"].is_null());
  auto t = to_json(top_o_table());
  CHECK(t["entries"][6]["text"] == "Z/28");
  CHECK(render(top_o_table()).find("Z/992") != std::string::npos);
}

TEST_CASE("splitting and diagnostics rendering") {
  ManifoldSpec s;
  s.dimension = 5;
  s.spin = false;
  s.h2_torsion = {2, 9};
  CHECK(render(stable_splitting(s)) == "Σ^2 M(Z/9) ∨ Cone(η̃_2)");
  CHECK(to_json(stable_splitting(s))["summands"].size() == 2);
  ManifoldSpec bad;
  bad.spin = false;
  auto diags = validate(bad);
  CHECK(render(diags).rfind("error: h2_free_rank", 0) == 0);
  CHECK(to_json(diags)[0]["severity"] == "error");
}
