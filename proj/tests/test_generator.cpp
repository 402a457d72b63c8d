#include <chrono>
#include <numeric>
#include <set>

#include "doctest.h"
#include "stargray/generator.hpp"

using namespace stargray;

namespace {

struct Run {
  std::vector<int> flips;
  std::vector<Bitstring> combos;
};

Run run(int n, long s, std::optional<Bitstring> start = std::nullopt) {
  Generator g(n, s, start);
  Run r;
  while (auto step = g.next()) {
    r.flips.push_back(step->flip);
    r.combos.push_back(step->combination);
  }
  return r;
}

}  // namespace

TEST_CASE("Catalan numbers mod m") {
  CHECK(catalan_mod(4, 1000) == 14);
  CHECK(catalan_mod(0, 7) == 1);
  CHECK(catalan_mod(4, 9) == 5);
  CHECK(catalan_mod(10, 1000000) == 16796);
  CHECK(base_shift(4) == 5);
  CHECK(base_shift(5) == 9);
  for (int n = 4; n <= 30; ++n) {
    // binomial form C(2n, n) / (n+1), kept exact with long double free arithmetic
    unsigned long long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    CHECK(catalan_mod(n, 2 * n + 1) == static_cast<long>(c % (2 * n + 1)));
  }
}

TEST_CASE("combination counts") {
  CHECK(combination_count(1) == 6u);
  CHECK(combination_count(4) == 252u);
  CHECK(combination_count(5) == 924u);
  CHECK(combination_count(6) == 3432u);
  CHECK(combination_count(31).has_value());
  CHECK_FALSE(combination_count(40).has_value());
}

TEST_CASE("fixed blocks for small n") {
  CHECK(base_block(1).start.str() == "010");
  CHECK(base_block(2).start.str() == "00011");
  CHECK(base_block(3).start.str() == "0000111");
  CHECK(base_block(1).flips == std::vector<int>{3, 2});
  CHECK(base_block(2).flips == std::vector<int>{1, 5, 3, 1});
  CHECK(base_block(3).flips == std::vector<int>{2, 6, 3, 5, 4, 2, 6, 7, 5, 3});
  const auto r1 = run(1, 2);
  CHECK(std::vector<int>(r1.flips.begin(), r1.flips.begin() + 2) ==
        std::vector<int>{3, 2});
  const auto r2 = run(2, 1);
  CHECK(std::vector<int>(r2.flips.begin(), r2.flips.begin() + 4) ==
        std::vector<int>{1, 5, 3, 1});
}

TEST_CASE("full run at n = 4") {
  const auto r = run(4, 1);
  REQUIRE(r.flips.size() == 252);
  std::set<Bitstring> seen(r.combos.begin(), r.combos.end());
  CHECK(seen.size() == 252);
  for (std::size_t i = 0; i < r.combos.size(); ++i) {
    Bitstring c = r.combos[i];
    CHECK(c.weight() == 5);
    CHECK(c[0] != c[r.flips[i]]);
    c.flip(0);
    c.flip(r.flips[i]);
    CHECK(c == r.combos[(i + 1) % r.combos.size()]);
  }
  // blocks of 2 C_4 = 28 entries; each block steps by -1 mod 9
  for (std::size_t i = 28; i < 252; ++i)
    CHECK(r.flips[i] == ((r.flips[i - 28] - 1) + 8) % 9 + 1);
}

TEST_CASE("every coprime target at n = 4") {
  for (int s = 1; s < 9; ++s) {
    if (std::gcd(s, 9) != 1) {
      CHECK_THROWS_AS(Generator(4, s), std::invalid_argument);
      continue;
    }
    const auto r = run(4, s);
    CHECK(r.flips.size() == 252);
    for (std::size_t i = 28; i < 252; ++i)
      CHECK(r.flips[i] == ((r.flips[i - 28] - 1 - s) % 9 + 9) % 9 + 1);
  }
}

TEST_CASE("negative shifts are normalized") {
  CHECK(run(4, -1).flips == run(4, 8).flips);
  CHECK(Generator(4, -1).shift() == 8);
}

TEST_CASE("start combination") {
  const Bitstring start("1100110010");
  Generator g(4, 2, start);
  auto first = g.next();
  REQUIRE(first);
  CHECK(first->combination == start);
  std::size_t count = 1;
  while (g.next()) ++count;
  CHECK(count == 252);
  CHECK_THROWS(Generator(4, 2, Bitstring("1111110000")));
  CHECK_THROWS(Generator(4, 2, Bitstring("110011001")));
  CHECK_THROWS(Generator(4, 2, Bitstring("1100110011")));
}

TEST_CASE("streams are deterministic") {
  CHECK(run(5, 3).flips == run(5, 3).flips);
  Generator a(60, 7), b(60, 7);
  for (int i = 0; i < 5000; ++i) CHECK(a.next()->flip == b.next()->flip);
}

TEST_CASE("scaling") {
  FlipSequence a;
  a.modulus = 9;
  a.shift = 5;
  a.entries = {1, 4, 9, 2};
  CHECK(scale_sequence(a, 5, 5).entries == a.entries);
  CHECK(inverse_mod(5, 9) == 2);
  auto b = scale_sequence(a, 5, 2);
  CHECK(b.shift == 2);
  CHECK(b.entries == std::vector<int>{4, 7, 9, 8});
  CHECK_THROWS(scale_sequence(a, 3, 2));
}

TEST_CASE("large n stream starts quickly and stays on a star transposition") {
  Generator g(200, 1);
  auto prev = g.next();
  for (int i = 0; i < 2000; ++i) {
    auto cur = g.next();
    REQUIRE(cur);
    Bitstring c = prev->combination;
    c.flip(0);
    c.flip(prev->flip);
    CHECK(c == cur->combination);
    prev = cur;
  }
}
