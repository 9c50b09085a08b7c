#include <catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "smooth/abgroup.hpp"

using namespace smooth;

namespace {

FinAbGroup G(std::initializer_list<Int> orders, int free_rank = 0) {
  return FinAbGroup::canonicalize(orders, free_rank);
}

std::vector<Int> chain(const FinAbGroup& g) { return g.torsion(); }

std::vector<FinAbGroup> from_chains(const std::vector<oracle::Mods>& chains) {
  std::vector<FinAbGroup> out;
  for (const auto& c : chains) out.push_back(FinAbGroup::canonicalize(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonicalize produces invariant factors") {
  CHECK(chain(G({2, 56})) == std::vector<Int>{2, 56});
  CHECK(chain(G({4, 6})) == std::vector<Int>{2, 12});
  CHECK(G({}).is_trivial());
  CHECK(G({1, 1}).is_trivial());
  CHECK(oracle::isomorphic({4, 6}, {2, 12}));
  CHECK_THROWS_AS(G({0}), std::invalid_argument);
}

TEST_CASE("direct sums") {
  CHECK(chain(direct_sum(G({2}), G({2}))) == std::vector<Int>{2, 2});
  CHECK(direct_sum(G({2}), G({56})) == G({2, 56}));
  CHECK(chain(direct_sum(G({4}), G({14}))) == std::vector<Int>{2, 28});
  CHECK(oracle::isomorphic({4, 14}, {2, 28}));
  CHECK(direct_sum(G({}, 1), G({2})).to_string() == "Z ⊕ Z/2");
}

TEST_CASE("kernels and cokernels of multiplication") {
  CHECK(mult_kernel(G({992}), 2) == G({2}));
  CHECK(mult_kernel(G({992}), 64) == G({32}));
  CHECK(mult_kernel(G({3}), 2).is_trivial());
  CHECK(mult_cokernel(G({28}), 2) == G({2}));
  CHECK(mult_cokernel(G({28}), 4) == G({4}));
  CHECK(mult_cokernel(G({7}), 7) == G({7}));
  CHECK(mult_cokernel(G({}, 1), 5) == G({5}));
  CHECK(mult_kernel(G({}, 2), 5).is_trivial());
  CHECK_THROWS(mult_kernel(G({2}), 0));
  CHECK_THROWS(mult_cokernel(G({2}), 0));
}

TEST_CASE("order and rendering") {
  CHECK(G({2, 56}).order() == 112);
  CHECK(FinAbGroup{}.order() == 1);
  CHECK_FALSE(G({2}, 1).order().has_value());
  CHECK(FinAbGroup{}.to_string() == "0");
  CHECK(G({2, 56}).to_string() == "Z/2 ⊕ Z/56");
  CHECK(FinAbGroup::free(1).to_string() == "Z");
}

TEST_CASE("primary decomposition") {
  auto g = G({2, 2, 2, 8, 7});
  auto p = PrimaryDecomposition::of(g);
  CHECK(p.to_group() == g);
  CHECK(p.to_string() == "(Z/2)^3 ⊕ Z/8 ⊕ Z/7");
  CHECK(PrimaryDecomposition::of(G({6}, 2)).to_string() == "Z^2 ⊕ Z/2 ⊕ Z/3");
}

TEST_CASE("extension enumeration: spec examples") {
  CHECK(enumerate_extensions(G({2}), G({2})) == std::vector<FinAbGroup>{G({2, 2}), G({4})});
  auto e = enumerate_extensions(G({2, 2}), G({28}));
  CHECK(e == std::vector<FinAbGroup>{G({2, 2, 28}), G({2, 56})});
  CHECK(e == from_chains(oracle::extensions({2, 2}, {28})));
  CHECK(enumerate_extensions(FinAbGroup{}, G({6, 2})) == std::vector<FinAbGroup>{G({6, 2})});
}

TEST_CASE("extension enumeration respects the budget") {
  CHECK_THROWS_AS(enumerate_extensions(G({1000}), G({1001})), BudgetError);
  CHECK_THROWS_AS(enumerate_extensions(G({4}), G({4}), 8), BudgetError);
  CHECK_THROWS_AS(enumerate_extensions(G({4}, 1), G({4})), std::invalid_argument);
}

TEST_CASE("extension enumeration agrees with the element-level oracle") {
  std::mt19937_64 rng(7);
  const std::vector<Int> small = {1, 2, 3, 4, 2, 6, 8, 9};
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> a{small[pick(rng)], small[pick(rng)]};
    std::vector<Int> c{small[pick(rng)]};
    auto A = FinAbGroup::canonicalize(a), Cq = FinAbGroup::canonicalize(c);
    if (*A.order() * *Cq.order() > 96) continue;
    INFO(A.to_string() << " by " << Cq.to_string());
    CHECK(enumerate_extensions(A, Cq) == from_chains(oracle::extensions(A.torsion(), Cq.torsion())));
  }
}

TEST_CASE("possible quotients and kernels agree with the oracle") {
  const std::vector<std::pair<FinAbGroup, FinAbGroup>> cases = {
      {G({2, 8}), G({2})},    {G({2, 8}), G({4})},   {G({2, 2, 2, 2}), G({2, 2})},
      {G({2, 4}), G({2, 2})}, {G({4, 2, 2}), G({2})}, {G({6, 2}), G({2})},
  };
  for (const auto& [g, h] : cases) {
    INFO(g.to_string() << " with " << h.to_string());
    std::set<oracle::OrderStats> q, k;
    for (const auto& x : possible_quotients(g, h)) q.insert(oracle::order_stats(x.torsion()));
    for (const auto& x : possible_kernels(g, h)) k.insert(oracle::order_stats(x.torsion()));
    CHECK(q == oracle::quotient_types(g.torsion(), h.torsion()));
    CHECK(k == oracle::kernel_types(g.torsion(), h.torsion()));
  }
  // the two possibilities for a kernel of index 2 in Z/2 ⊕ Z/8
  CHECK(possible_kernels(G({2, 8}), G({2})) == std::vector<FinAbGroup>{G({2, 4}), G({8})});
}

TEST_CASE("groups of a given order") {
  CHECK(abelian_groups_of_order(16).size() == 5);
  CHECK(abelian_groups_of_order(1984).size() == 11);
  CHECK(abelian_groups_of_order(1) == std::vector<FinAbGroup>{FinAbGroup{}});
  CHECK(abelian_groups_of_order(112) == from_chains(oracle::groups_of_order(112)));
}

TEST_CASE("prime powers") {
  CHECK(as_prime_power(49)->prime == 7);
  CHECK(as_prime_power(49)->exponent == 2);
  CHECK_FALSE(as_prime_power(6));
  CHECK_FALSE(as_prime_power(1));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
}
