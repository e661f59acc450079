#include <doctest.h>

#include <stdexcept>

#include "glm1/partition.hpp"
#include "test_support.hpp"

using namespace glm1;

TEST_CASE("partition normalization and accessors") {
  CHECK(Partition({2, 1}).length() == 2);
  CHECK(Partition{}.length() == 0);
  CHECK(Partition({3, 3, 1}).length() == 3);
  CHECK(Partition({2, 1}).contents() == 3);
  CHECK(Partition{}.contents() == 0);
  CHECK(Partition({1, 0}) == Partition({1}));
  CHECK(Partition({2, 0, 0}).length() == 1);
  CHECK(Partition({2, 1}).part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("dominant weight") {
  CHECK(DominantWeight({1, 0, -3}).contents() == -2);
  CHECK_THROWS_AS(DominantWeight({0, 1}), std::invalid_argument);
  CHECK(add_weights(DominantWeight({1, 0}), DominantWeight({1, 1})) ==
        DominantWeight({2, 1}));
  CHECK(add_weights(DominantWeight({0, 0}), DominantWeight({0, 0})) ==
        DominantWeight({0, 0}));
  CHECK(add_weights(DominantWeight({2, 1}), DominantWeight({-1, -1})) ==
        DominantWeight({1, 0}));
  CHECK_THROWS_AS(add_weights(DominantWeight({1}), DominantWeight({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("opposite") {
  CHECK(opposite(Partition({2, 1}), 3) == DominantWeight({0, -1, -2}));
  CHECK(opposite(Partition{}, 2) == DominantWeight({0, 0}));
  CHECK(opposite(Partition({1}), 1) == DominantWeight({-1}));
  CHECK_THROWS_AS(opposite(Partition({1, 1}), 1), std::invalid_argument);
}

TEST_CASE("m-standardness") {
  CHECK(is_m_standard({Partition({1}), Partition({1})}, 2));
  CHECK_FALSE(is_m_standard({Partition({1, 1}), Partition({1, 1})}, 3));
  CHECK(is_m_standard({Partition{}, Partition{}}, 1));
}

TEST_CASE("m-composition") {
  CHECK(cup_m(Partition({2}), Partition({1}), 3) == DominantWeight({2, 0, -1}));
  CHECK(cup_m(Partition{}, Partition{}, 2) == DominantWeight({0, 0}));
  CHECK(cup_m(Partition({1, 1}), Partition({3}), 3) == DominantWeight({1, 1, -3}));
  CHECK_THROWS_AS(cup_m(Partition({1, 1}), Partition({1, 1}), 3),
                  std::invalid_argument);
}

TEST_CASE("m-composition round trip and monotonicity") {
  const auto ps = glm1::testing::partitions_up_to(3, 3);
  for (int m = 1; m <= 4; ++m) {
    for (const Partition& mu : ps) {
      for (const Partition& nu : ps) {
        if (mu.length() + nu.length() > m) continue;
        const DominantWeight w = cup_m(mu, nu, m);
        REQUIRE(w.size() == m);
        for (int i = 1; i <= mu.length(); ++i) CHECK(w.entry(i) == mu.part(i));
        for (int i = 1; i <= nu.length(); ++i)
          CHECK(w.entry(m - i + 1) == -nu.part(i));
        // DominantWeight construction already enforces weak decrease; the
        // opposite identity closes the loop.
        CHECK(opposite(nu, m) == cup_m(Partition{}, nu, m));
      }
    }
  }
}

TEST_CASE("partition text grammar") {
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition(" 3 , 1 ") == Partition({3, 1}));
  CHECK(format_partition(Partition({3, 1})) == "3,1");
  CHECK(format_partition(Partition{}) == "");
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,,2"), std::invalid_argument);
}
