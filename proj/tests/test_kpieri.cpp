#include "pierichain/kpieri.hpp"

#include <doctest.h>

#include <random>

using namespace pierichain;

TEST_CASE("level reads the long row and adds") {
  CHECK(level(parse_pattern("top=3,3,1;bottom=3,2")) == 3);
  CHECK(level(InterlacingPattern::zero(3, Orientation::dual)) == 0);
  const auto p = parse_pattern("top=2,1,0;bottom=1,1");
  const auto q = parse_pattern("top=1,1,1;bottom=1,1");
  CHECK(level(add(p, q)) == level(p) + level(q));
}

TEST_CASE("leveled pattern validation") {
  const auto p = parse_pattern("top=2,1,0;bottom=1,1");
  CHECK(LeveledPattern(p, 2).bound() == 2);
  CHECK(LeveledPattern(p, 5).pattern() == p);
  CHECK_THROWS_AS(LeveledPattern(p, 1), std::invalid_argument);
  CHECK_THROWS_AS(LeveledPattern(p, -1), std::invalid_argument);
}

TEST_CASE("pinned truncated decisions") {
  CHECK(kpieri_dim(SlWeight(3, {1, 0}), 1, SlWeight(3, {2, 2}), 1) == 0);
  CHECK(kpieri_dim(SlWeight(3, {1, 0}), 1, SlWeight(3, {2, 2}), 2) == 1);
  CHECK(kpieri_dual_dim(SlWeight(3, {1, 0}), 1, SlWeight(3, {0, 0}), 1) == 1);
  CHECK(kpieri_dual_dim(SlWeight(3, {1, 1}), 1, SlWeight(3, {2, 0}), 1) == 0);
  CHECK(kpieri_dual_dim(SlWeight(3, {1, 1}), 1, SlWeight(3, {2, 0}), 2) == 1);
}

TEST_CASE("truncation is monotone and stabilizes to the classical decision") {
  for (int m = 2; m <= 4; ++m)
    for (const auto& lambda : all_weights_up_to(m, 2))
      for (const auto& eta : all_weights_up_to(m, 2))
        for (Int r = 0; r <= 3; ++r) {
          const Int saturation = r + lambda.sum() + eta.sum();
          int previous = 0;
          for (Int K = 0; K <= saturation; ++K) {
            const int now = kpieri_dim(lambda, r, eta, K);
            CHECK(now >= previous);
            previous = now;
            CHECK(kpieri_dual_dim(lambda, r, eta, K) ==
                  kpieri_dim(dual(lambda), r, dual(eta), K));
          }
          CHECK(previous == pieri_dim(lambda, r, eta));
          CHECK(kpieri_dim(lambda, r, eta, saturation + 5) == previous);
        }
}

TEST_CASE("truncation bounds the witness level") {
  for (int m = 2; m <= 3; ++m)
    for (const auto& lambda : all_weights_up_to(m, 2))
      for (const auto& eta : all_weights_up_to(m, 2))
        for (Int r = 0; r <= 3; ++r)
          for (Int K = 0; K <= 4; ++K) {
            const auto p = build_pattern(lambda, r, eta);
            const int expected = p && r <= K && level(*p) <= K ? 1 : 0;
            CHECK(kpieri_dim(lambda, r, eta, K) == expected);
          }
}

TEST_CASE("slot kinds and their inventories") {
  CHECK(orientation_of(FactorKind::end_normal) == Orientation::normal);
  CHECK(orientation_of(FactorKind::middle_normal) == Orientation::normal);
  CHECK(orientation_of(FactorKind::middle_dual) == Orientation::dual);
  CHECK(orientation_of(FactorKind::end_dual) == Orientation::dual);
  for (int m = 2; m <= 6; ++m) {
    for (const auto kind : {FactorKind::end_normal, FactorKind::end_dual})
      CHECK(k_generators(m, kind).size() == 4);
    for (const auto kind : {FactorKind::middle_normal, FactorKind::middle_dual})
      CHECK(k_generators(m, kind).size() == static_cast<std::size_t>(2 * m));
  }
}

TEST_CASE("inventories are exact for small rank") {
  const auto end3 = k_generators(3, FactorKind::end_normal);
  REQUIRE(end3.size() == 4);
  CHECK(end3[0] == PieriGenerator::identity(3, Orientation::normal));
  CHECK(end3[1] == PieriGenerator(3, 2, 1, Orientation::normal));
  CHECK(end3[2] == PieriGenerator(3, 2, 2, Orientation::normal));
  CHECK(end3[3] == PieriGenerator(3, 3, 2, Orientation::normal));
  const auto middle2 = k_generators(2, FactorKind::middle_dual);
  REQUIRE(middle2.size() == 4);
  CHECK(middle2[0] == PieriGenerator::identity(2, Orientation::dual));
  CHECK(middle2[1] == PieriGenerator(2, 1, 0, Orientation::dual));
  CHECK(middle2[2] == PieriGenerator(2, 1, 1, Orientation::dual));
  CHECK(middle2[3] == PieriGenerator(2, 2, 1, Orientation::dual));
}

TEST_CASE("every inventoried generator fits its slot at level one") {
  for (int m = 2; m <= 5; ++m)
    for (const auto kind : {FactorKind::end_normal, FactorKind::middle_normal,
                            FactorKind::middle_dual, FactorKind::end_dual})
      for (const auto& g : k_generators(m, kind)) {
        const auto p = generator_pattern(g);
        CHECK(level(p) <= 1);
        CHECK(fits_kind(p, kind));
      }
}

TEST_CASE("end slots reject interior-only generators") {
  // [1,0] at rank 3 starts its long row 1,0 which is not constant, so it can
  // sit in a middle slot but not at the end of an arm.
  const auto p = generator_pattern(PieriGenerator(3, 1, 0, Orientation::normal));
  CHECK(fits_kind(p, FactorKind::middle_normal));
  CHECK(!fits_kind(p, FactorKind::end_normal));
  CHECK(!fits_kind(p, FactorKind::middle_dual));
  const auto q = generator_pattern(PieriGenerator(2, 1, 0, Orientation::normal));
  CHECK(fits_kind(q, FactorKind::end_normal));
}
