#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "ntnsim/rng.hpp"

using namespace ntnsim;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are pure functions of seed, label, trial and entity") {
  const StreamFamily a(42, "tier.sat", 9);
  const StreamFamily b(42, "tier.sat", 9);
  CounterRng x = a.at(3), y = b.at(3);
  for (int i = 0; i < 100; ++i) REQUIRE(x() == y());

  std::set<std::uint64_t> firsts;
  firsts.insert(StreamFamily(42, "tier.sat", 9).at(3)());
  firsts.insert(StreamFamily(43, "tier.sat", 9).at(3)());
  firsts.insert(StreamFamily(42, "tier.hap", 9).at(3)());
  firsts.insert(StreamFamily(42, "tier.sat", 10).at(3)());
  firsts.insert(StreamFamily(42, "tier.sat", 9).at(4)());
  firsts.insert(StreamFamily(42, "tier.sat", 9).counts()());
  firsts.insert(StreamFamily(42, "tier.sat", 9).derive(1).at(3)());
  CHECK(firsts.size() == 7);
}

TEST_CASE("uniform draws stay in range and have the right mean") {
  CounterRng rng = StreamFamily(1, "u").at(0);
  double sum = 0.0;
  constexpr int n = 200'000;
  for (int i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double v = uniform01_open_low(rng);
    REQUIRE(v > 0.0);
    REQUIRE(v <= 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
}

TEST_CASE("normal, gamma and poisson moments") {
  CounterRng rng = StreamFamily(5, "moments").at(0);
  constexpr int n = 200'000;
  double s1 = 0.0, s2 = 0.0, g1 = 0.0, p1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = standard_normal(rng);
    s1 += z;
    s2 += z * z;
    g1 += gamma_variate(rng, 2.5, 0.4);
    p1 += static_cast<double>(poisson_variate(rng, 3.2));
  }
  CHECK(std::abs(s1 / n) < 0.01);
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(g1 / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(p1 / n == doctest::Approx(3.2).epsilon(0.01));
  CHECK(poisson_variate(rng, 0.0) == 0);
}

TEST_CASE("label hashing and mixing are stable") {
  CHECK(hash_label("") == 0xcbf29ce484222325ULL);
  CHECK(hash_label("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(mix64(0) != mix64(1));
}
