#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "smooth/tables.hpp"

using namespace smooth;

namespace {
FinAbGroup G(std::initializer_list<Int> orders, int free_rank = 0) {
  return FinAbGroup::canonicalize(orders, free_rank);
}

FinAbGroup two_part(const FinAbGroup& g) {
  std::vector<Int> t;
  for (Int d : g.torsion()) t.push_back(d & -d);
  return FinAbGroup::canonicalize(t);
}

FinAbGroup odd_part(const FinAbGroup& g) {
  std::vector<Int> t;
  for (Int d : g.torsion()) t.push_back(d / (d & -d));
  return FinAbGroup::canonicalize(t);
}
}  // namespace

TEST_CASE("stable stems") {
  CHECK(pi_stable(0) == FinAbGroup::free(1));
  CHECK(pi_stable(1) == G({2}));
  CHECK(pi_stable(3) == G({24}));
  CHECK(pi_stable(4).is_trivial());
  CHECK(pi_stable(5).is_trivial());
  CHECK_THROWS_AS(pi_stable(6), RangeError);
  CHECK_THROWS_AS(pi_stable(-1), RangeError);
}

TEST_CASE("Moore spectrum homotopy") {
  CHECK(pi_moore(2, 2) == G({4}));
  CHECK(pi_moore(4, 2) == G({2, 2}));
  CHECK(pi_moore(3, 4) == G({3}));
  CHECK(pi_moore(9, 0) == G({9}));
  CHECK(pi_moore(3, 1).is_trivial());
  CHECK(pi_moore(8, 3) == G({8, 2}));
  CHECK(pi_moore(48, 3) == G({24, 2}));
  CHECK(pi_moore(5, 3).is_trivial());
  CHECK(pi_moore(7, 5).is_trivial());
  CHECK_THROWS_AS(pi_moore(2, 6), RangeError);
}

TEST_CASE("Top/O table") {
  CHECK(pi_top_o(7) == G({28}));
  CHECK(pi_top_o(11) == G({992}));
  CHECK(pi_top_o(15) == G({2, 8128}));
  CHECK(pi_top_o(9) == G({2, 2, 2}));
  CHECK(pi_top_o(19) == G({2, 130816}));
  CHECK(pi_top_o(3) == G({2}));
  CHECK_THROWS_AS(pi_top_o(0), RangeError);
  CHECK_THROWS_AS(pi_top_o(21), RangeError);
  CHECK(theta(10) == G({6}));
  CHECK_THROWS_AS(theta(3), RangeError);
}

TEST_CASE("G/O and G/Top") {
  CHECK(pi_g_o(8) == G({2}, 1));
  CHECK(pi_g_o(10) == G({6}));
  CHECK(pi_g_o(1).is_trivial());
  CHECK(pi_g_o(17) == G({2, 2, 2}));
  CHECK(pi_g_o(20) == G({24}, 1));
  CHECK(pi_g_top(8) == FinAbGroup::free(1));
  CHECK(pi_g_top(6) == G({2}));
  CHECK(pi_g_top(13).is_trivial());
  for (int k = 1; k <= 400; ++k) {
    const FinAbGroup expect = k % 4 == 0 ? FinAbGroup::free(1) : k % 4 == 2 ? G({2}) : FinAbGroup{};
    CHECK(pi_g_top(k) == expect);
  }
}

TEST_CASE("eta_* images") {
  CHECK(eta_star_image(8) == G({2}));
  CHECK(eta_star_image(17) == G({2, 2}));
  CHECK(eta_star_image(12).is_trivial());
  CHECK_THROWS_AS(eta_star_image(20), RangeError);
  for (int k = 1; k <= 19; ++k) {
    INFO("k = " << k);
    CHECK(*pi_top_o(k + 1).order() % *eta_star_image(k).order() == 0);
  }
}

TEST_CASE("eta_* kernels and cokernels match brute-force subgroup data") {
  // Every image is a 2-group, so odd parts pass through and the oracle runs on 2-primary parts.
  for (const auto& e : eta_star_table().rows()) {
    INFO("degree " << e.degree);
    const FinAbGroup tgt = pi_top_o(e.degree + 1);
    REQUIRE(two_part(e.image) == e.image);
    auto kers = oracle::kernel_types(two_part(*e.source).torsion(), e.image.torsion());
    auto cokers = oracle::quotient_types(two_part(tgt).torsion(), e.image.torsion());
    REQUIRE_FALSE(kers.empty());
    REQUIRE_FALSE(cokers.empty());
    if (e.kernel) {
      CHECK(kers.size() == 1);
      CHECK(kers.count(oracle::order_stats(two_part(*e.kernel).torsion())) == 1);
      CHECK(odd_part(*e.kernel) == odd_part(*e.source));
    } else {
      CHECK(kers.size() > 1);
    }
    if (e.cokernel) {
      CHECK(cokers.count(oracle::order_stats(two_part(*e.cokernel).torsion())) == 1);
      CHECK(odd_part(*e.cokernel) == odd_part(tgt));
      if (e.degree != 14) CHECK(cokers.size() == 1);
    } else {
      CHECK(cokers.size() > 1);
    }
  }
  // degree 14: the two quotients of Z/2 ⊕ Z/64 by an order-2 subgroup
  CHECK(oracle::quotient_types({2, 64}, {2}).size() == 2);
  CHECK(*eta_star_table().at(14).cokernel == G({8128}));
}

TEST_CASE("(eta^2)_* images") {
  CHECK(eta_sq_image(9) == G({2}));
  CHECK(eta_sq_image(10).is_trivial());
  CHECK(eta_sq_image(16) == G({2}));
  CHECK(eta_sq_image(17) == G({2}));
  CHECK_THROWS_AS(eta_sq_image(6), RangeError);
  for (int k = 7; k <= 18; ++k) CHECK(*eta_star_image(k + 1).order() >= *eta_sq_image(k).order());
}

TEST_CASE("(i o eta)_* images") {
  CHECK(i_eta_image(14) == G({2, 2}));
  CHECK(i_eta_image(5) == G({2}));
  CHECK(i_eta_image(4).is_trivial());
  CHECK_THROWS_AS(i_eta_image(17), RangeError);
  for (int k = 1; k <= 16; ++k) CHECK(i_eta_image(k) == eta_star_image(k + 3));
}

TEST_CASE("eta~_* images") {
  CHECK(eta_tilde_image(4, 2) == G({2, 2}));
  CHECK(eta_tilde_image(4, 1) == G({2, 2}));
  CHECK(eta_tilde_image(4, 3) == G({2}));
  CHECK(eta_tilde_image(6, 1) == G({4}));
  CHECK(eta_tilde_image(6, 3) == G({2}));
  CHECK(eta_tilde_image(5, 9) == G({2}));
  CHECK(eta_tilde_image(9, 1).is_trivial());
  CHECK_THROWS_AS(eta_tilde_image(11, 1), RangeError);
  CHECK_THROWS_AS(eta_tilde_image(0, 1), RangeError);
  CHECK_THROWS_AS(eta_tilde_image(4, 0), std::invalid_argument);
}

TEST_CASE("every table entry carries a citation") {
  for (const GradedTable* t : {&stable_stems_table(), &top_o_table(), &g_o_table()})
    for (const auto& [d, e] : t->entries()) CHECK_FALSE(e.citation.empty());
  for (const MapImageTable* t : {&eta_star_table(), &eta_sq_table(), &i_eta_table(), &eta_tilde_table()})
    for (const auto& e : t->rows()) CHECK_FALSE(e.citation.empty());
  for (const GradedTable& t : {g_top_table(), moore_table(12)})
    for (const auto& [d, e] : t.entries()) CHECK_FALSE(e.citation.empty());
}
