#include "pierichain/verify.hpp"

#include <doctest.h>

#include <map>

using namespace pierichain;

namespace {

ChainElement multiset_sum(const TupleMultiset& ms, bool leveled) {
  REQUIRE(!ms.empty());
  auto sum = chain_of_tuple(ms.front(), leveled);
  for (std::size_t i = 1; i < ms.size(); ++i)
    sum = add(sum, chain_of_tuple(ms[i], leveled));
  return sum;
}

}  // namespace

TEST_CASE("strip oracle on pinned decisions") {
  CHECK(lr_strip_oracle(SlWeight(3, {1, 0}), 1, SlWeight(3, {1, 0})) == 1);
  CHECK(lr_strip_oracle(SlWeight(3, {1, 0}), 1, SlWeight(3, {2, 2})) == 1);
  CHECK(lr_strip_oracle(SlWeight(3, {1, 0}), 1, SlWeight(3, {1, 1})) == 0);
  CHECK(lr_strip_oracle(SlWeight(2, {3}), 0, SlWeight(2, {3})) == 1);
  CHECK_THROWS_AS((void)lr_strip_oracle(SlWeight(2, {1}), -1, SlWeight(2, {1})),
                  std::invalid_argument);
}

TEST_CASE("strip oracle agrees with the interlacing decision") {
  for (int m = 2; m <= 4; ++m)
    for (const auto& lambda : all_weights_up_to(m, 3))
      for (const auto& eta : all_weights_up_to(m, 3))
        for (Int r = 0; r <= 4; ++r)
          CHECK(lr_strip_oracle(lambda, r, eta) == pieri_dim(lambda, r, eta));
}

TEST_CASE("rank-two fusion oracle") {
  CHECK(sl2_fusion_oracle({1, 1, 1, 1}, 1) == 1);
  CHECK(sl2_fusion_oracle({1, 1, 1, 1}, 2) == 2);
  CHECK(sl2_fusion_oracle({3, 1}, 2) == 0);
  CHECK(sl2_fusion_oracle({2, 2}, 2) == 1);
  CHECK(sl2_fusion_oracle({1, 1, 1}, 1) == 0);
  CHECK(sl2_fusion_oracle({2, 1, 1}, 2) == 1);
  CHECK_THROWS_AS((void)sl2_fusion_oracle({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)sl2_fusion_oracle({1, -1}, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)sl2_fusion_oracle({1, 1}, -1), std::invalid_argument);
  // Reversal symmetry of the chain.
  const std::vector<Int> weights{2, 1, 3, 2, 0, 2};
  std::vector<Int> reversed(weights.rbegin(), weights.rend());
  for (Int K = 0; K <= 4; ++K)
    CHECK(sl2_fusion_oracle(weights, K) == sl2_fusion_oracle(reversed, K));
}

TEST_CASE("swap fibers at rank two are connected with valid paths") {
  const auto reports = markov_check(2, 2, 2, true, 2);
  CHECK(reports.size() == 42);
  Int nontrivial = 0;
  for (const auto& rep : reports) {
    CHECK(rep.connected);
    if (rep.fiber_size < 2) continue;
    ++nontrivial;
    REQUIRE(!rep.witness_path.empty());
    // Every multiset on the path shares the fiber's chain-element sum.
    const auto key = multiset_sum(rep.witness_path.front(), true);
    for (const auto& ms : rep.witness_path) {
      CHECK(static_cast<int>(ms.size()) == rep.degree);
      CHECK(multiset_sum(ms, true) == key);
    }
    CHECK(key.weight_data() == rep.multidegree);
  }
  CHECK(nontrivial == 2);
}

TEST_CASE("swap fibers connect across small shapes in both gradings") {
  for (const bool leveled : {true, false}) {
    for (const auto& rep : markov_check(3, 2, 2, leveled, 3)) CHECK(rep.connected);
    for (const auto& rep : markov_check(2, 3, 2, leveled, 3)) CHECK(rep.connected);
  }
}

TEST_CASE("fiber reports are ordered and stratified by degree") {
  const auto reports = markov_check(2, 2, 2, true, 3);
  CHECK(!reports.empty());
  int previous = 0;
  for (const auto& rep : reports) {
    CHECK(rep.degree >= previous);
    previous = rep.degree;
    CHECK(rep.fiber_size >= 1);
  }
}

TEST_CASE("duality witness report for rank two") {
  const auto rep = gorenstein_check(2, 2, 2, true, 4, 32, 42);
  CHECK(rep.condition_holds);
  REQUIRE(rep.junctions.size() == 1);
  CHECK(rep.junctions.front().matches);
  REQUIRE(rep.witness_found);
  CHECK(rep.witness_degree == 4);
  REQUIRE(rep.witness.has_value());
  REQUIRE(rep.witness->factors().size() == 2);
  CHECK(to_string(rep.witness->factors()[0]) == "top=3,1;bottom=2");
  CHECK(to_string(rep.witness->factors()[1]) == "top=2;bottom=3,1");
  CHECK(rep.sampled_interior_ok);
  const auto unleveled = gorenstein_check(2, 2, 2, false, 4, 32, 42);
  CHECK(unleveled.condition_holds);
  CHECK(unleveled.witness_found);
  CHECK(unleveled.sampled_interior_ok);
}

TEST_CASE("duality witness condition fails for longer higher-rank chains") {
  const auto rep = gorenstein_check(3, 3, 2, true, 3, 8, 42);
  CHECK(!rep.condition_holds);
  REQUIRE(rep.junctions.size() == 2);
  CHECK(!rep.junctions[0].matches);
  CHECK(to_string(rep.junctions[0].left) == "3,2");
  CHECK(to_string(rep.junctions[0].right) == "4,2");
  CHECK(!rep.junctions[1].matches);
  CHECK(to_string(rep.junctions[1].left) == "4,2");
  CHECK(to_string(rep.junctions[1].right) == "3,2");
}

TEST_CASE("duality witness condition holds for the short higher-rank chain") {
  const auto rep = gorenstein_check(3, 2, 2, true, 4, 8, 42);
  CHECK(rep.condition_holds);
  CHECK(rep.witness_found);
  CHECK(rep.witness_degree == 4);
}

TEST_CASE("witness search is deterministic in the seed") {
  const auto first = gorenstein_check(2, 2, 2, true, 4, 16, 7);
  const auto second = gorenstein_check(2, 2, 2, true, 4, 16, 7);
  CHECK(first.condition_holds == second.condition_holds);
  CHECK(first.witness_degree == second.witness_degree);
  CHECK(first.interior_sampled == second.interior_sampled);
  CHECK(first.witness == second.witness);
}
