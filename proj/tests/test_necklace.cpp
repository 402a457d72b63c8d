#include <set>
#include <stdexcept>

#include "doctest.h"
#include "stargray/necklace.hpp"
#include "stargray/tree.hpp"

using namespace stargray;

namespace {

std::vector<Bitstring> middle_vertices(int n) {
  const int m = 2 * n + 1;
  std::vector<Bitstring> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::string s;
    for (int i = 0; i < m; ++i) s += (mask >> i) & 1 ? '1' : '0';
    const int w = __builtin_popcount(mask);
    if (w == n || w == n + 1) out.emplace_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("flip map examples") {
  CHECK(f(Bitstring("00011")).str() == "01011");
  CHECK(f(Bitstring("01011")).str() == "01010");
}

TEST_CASE("f is a bijection flipping one bit") {
  for (int n = 1; n <= 4; ++n) {
    std::set<Bitstring> images;
    for (const auto& x : middle_vertices(n)) {
      Bitstring y = f(x);
      CHECK(x.single_difference(y) >= 0);
      CHECK(f_inv(y) == x);
      images.insert(y);
    }
    CHECK(images.size() == middle_vertices(n).size());
  }
}

TEST_CASE("periodic paths") {
  CHECK(kappa(Bitstring("00011")) == 4);
  auto p = periodic_path(Bitstring("00011"));
  CHECK(p.flips.shift == 2);
  auto replayed = replay(Bitstring("00011"), p.flips.entries);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) CHECK(replayed[i] == p.vertices[i]);
  CHECK(measure_shift(Bitstring("00011"), p.flips.entries) == 2);
}

TEST_CASE("kappa is constant on necklaces and along f") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& x : middle_vertices(n)) {
      const int k = kappa(x);
      CHECK(kappa(rotate(x, 1)) == k);
      CHECK(kappa(f(x)) == k);
      CHECK(k == 2 * lambda_of(dyck_align(x).dyck));
    }
  }
}

TEST_CASE("flip sequence of a rotated start") {
  for (const auto& x : middle_vertices(4)) {
    FlipSequence a = flip_seq(x), b = flip_seq(rotate(x, 1));
    CHECK(b.shift == a.shift);
    CHECK(b.entries == add(a, 1).entries);
  }
}

TEST_CASE("sequence operations") {
  const Bitstring x("0001011");
  FlipSequence a = flip_seq(x);
  CHECK(add(a, 0).entries == a.entries);
  FlipSequence r = rev(rev(a));
  CHECK(r.entries == a.entries);
  CHECK(r.shift == a.shift);
  FlipSequence mv = a;
  for (std::size_t k = 0; k < a.entries.size(); ++k) mv = mov(mv);
  CHECK(mv.shift == a.shift);
  CHECK(mv.entries == add(a, -a.shift).entries);
  // rev walks the same edges backwards from x
  auto fwd = replay(x, a.entries);
  auto back = replay(x, rev(a).entries);
  CHECK(back.size() == fwd.size());
  CHECK(same_necklace(back[1], fwd[fwd.size() - 2]));
}

TEST_CASE("cycle factor") {
  CHECK(cycle_factor(2).size() == 1);
  for (int n = 2; n <= 6; ++n) {
    auto cf = cycle_factor(n);
    std::set<std::string> orbits;
    for (const auto& w : dyck_words(n)) {
      std::string least = w;
      std::string cur = w;
      for (int i = 0; i < 2 * n; ++i) {
        cur = rho(cur);
        least = std::min(least, cur);
      }
      orbits.insert(least);
    }
    CHECK(cf.size() == orbits.size());
    std::set<Bitstring> necklaces;
    std::size_t total = 0;
    for (const auto& [t, c] : cf) {
      total += c.vertices.size();
      for (const auto& v : c.vertices) necklaces.insert(necklace_representative(v));
    }
    CHECK(necklaces.size() == total);
  }
}

TEST_CASE("measure shift rejects bad input") {
  CHECK_THROWS_AS(measure_shift(Bitstring("00011"), {0}), std::out_of_range);
  CHECK_FALSE(measure_shift(Bitstring("00011"), {1}).has_value());
}
