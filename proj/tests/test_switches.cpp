#include <numeric>
#include <random>

#include "doctest.h"
#include "stargray/generator.hpp"
#include "stargray/spanning_tree.hpp"
#include "stargray/switches.hpp"

using namespace stargray;

namespace {

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

// Switch axioms checked without the library validator.
bool is_switch(const Bitstring& x, const Bitstring& y, const Bitstring& yp) {
  const std::size_t m = x.size();
  if (y.size() != m || yp.size() != m || m % 2 == 0) return false;
  const std::size_t n = m / 2;
  auto dist = [&](const Bitstring& a, const Bitstring& b) {
    int d = 0;
    for (std::size_t i = 0; i < m; ++i) d += a[i] != b[i];
    return d;
  };
  if (dist(x, y) != 1 || dist(x, yp) != 1 || y == yp) return false;
  if (x.weight() != n && x.weight() != n + 1) return false;
  for (std::size_t r = 0; r < m; ++r)
    if (rotate(yp, static_cast<long>(r)) == y) return true;
  return false;
}

}  // namespace

TEST_CASE("orbits") {
  CHECK(orbit(1, 6, 10) == std::vector<int>{1, 7, 13, 19, 4, 10, 16});
  CHECK(orbit(2, 6, 10) == std::vector<int>{2, 8, 14, 20, 5, 11, 17});
  std::vector<int> all(9);
  std::iota(all.begin(), all.end(), 1);
  CHECK(orbit(1, 1, 4) == all);
  for (int n = 1; n <= 20; ++n) {
    const int m = 2 * n + 1;
    for (int d = 1; d <= n; ++d)
      CHECK(orbit(1, d, n).size() == static_cast<std::size_t>(m / std::gcd(m, d)));
  }
}

TEST_CASE("the first switch at n = 3") {
  Switch t = tau_1(3);
  CHECK(t.x.str() == "0000111");
  CHECK(t.y.str() == "1000111");
  CHECK(t.y_prime.str() == "0001111");
  CHECK(t.shift == 1);
  CHECK(rotate_switch(t, 1).shift == 1);
  CHECK(reverse_switch(t).shift == 6);
  CHECK_THROWS_AS(validate_switch(t.x, t.y, t.y), SwitchError);
}

TEST_CASE("switch shifts") {
  for (int n = 4; n <= 10; ++n) {
    CHECK(tau_1(n).shift == 1);
    CHECK(tau_2(n).shift == 2);
    CHECK(tau_1(n).finv_conformal);
    CHECK(tau_2(n).f_conformal);
  }
  Switch t = tau_dz(52, 3, std::string("01"));
  CHECK(t.shift == 3);
  CHECK(is_switch(t.x, t.y, t.y_prime));
  for (int n = 4; n <= 40; ++n)
    for (int d = 3; d <= n; d += 2)
      if ((2 * n + 1) % d == 0) {
        Switch s = tau_dz(n, d);
        CHECK(s.shift == d);
        CHECK(is_switch(s.x, s.y, s.y_prime));
      }
  CHECK_THROWS(tau_2(3));
  CHECK_THROWS(tau_dz(52, 4));
}

TEST_CASE("usable and reversed against the spanning tree") {
  for (int n = 4; n <= 6; ++n) {
    SpanningRules rules(n);
    auto a = usable_and_reversed(tau_1(n), rules);
    CHECK(a.usable);
    CHECK(a.reversed);
    auto b = usable_and_reversed(tau_2(n), rules);
    CHECK(b.usable);
    CHECK_FALSE(b.reversed);
    CHECK(effective_sign(tau_1(n), rules) == 1);
    CHECK(effective_sign(tau_2(n), rules) == 1);
  }
}

TEST_CASE("usability is decided by the f-edges of rotated hexagons") {
  auto same_edge = [](const Bitstring& t, const Bitstring& h, const Bitstring& a,
                      const Bitstring& b) {
    for (long r = 0; r < static_cast<long>(t.size()); ++r)
      if (rotate(a, r) == t && rotate(b, r) == h) return true;
    return false;
  };
  auto hits = [&](const Switch& t, const Hexagon& h) {
    return same_edge(t.tail, t.head, h.x[0], h.x[1]) ||
           same_edge(t.tail, t.head, h.x[5], h.x[6]) ||
           same_edge(t.tail, t.head, h.y0, h.y1);
  };
  int blocked = 0;
  for (int n = 4; n <= 5; ++n) {
    for (const auto& p : gluing_pairs(n)) {
      const Hexagon h = hexagon(p);
      const ExplicitGluingSet g({p});
      for (const Switch& t : {tau_1(n), tau_2(n)}) {
        CHECK_FALSE(hits(t, h));
        CHECK(usable_and_reversed(t, g).usable);
      }
      // switches built around an f-edge of the hexagon itself
      const std::pair<Bitstring, Bitstring> edges[] = {
          {h.x[0], h.x[1]}, {h.x[1], h.x[0]}, {h.x[5], h.x[6]},
          {h.x[6], h.x[5]}, {h.y0, h.y1},     {h.y1, h.y0}};
      for (const auto& [a, b] : edges) {
        const long pos = a.single_difference(b);
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (static_cast<long>(j) == pos || a[j] != a[pos]) continue;
          const Bitstring other = a.flipped(j);
          for (int order = 0; order < 2; ++order) {
            const Bitstring& y = order ? b : other;
            const Bitstring& yp = order ? other : b;
            if (!is_switch(a, y, yp)) continue;
            const Switch t = validate_switch(a, y, yp);
            if (!t.f_conformal && !t.finv_conformal) continue;
            CHECK(usable_and_reversed(t, g).usable == !hits(t, h));
            blocked += hits(t, h);
          }
        }
      }
    }
  }
  CHECK(blocked > 0);
}

TEST_CASE("applying a switch changes the shift and keeps the itinerary") {
  for (int n = 3; n <= 6; ++n) {
    const int m = 2 * n + 1;
    Switch t = tau_1(n);
    const Bitstring start = t.tail;
    FlipSequence a = flip_seq(start);
    FlipSequence b = apply_switch(a, start, t);
    CHECK(measure_shift(start, b.entries) == b.shift);
    CHECK(mod(b.shift - a.shift, m) == mod(-t.shift, m));
    auto va = replay(start, a.entries), vb = replay(start, b.entries);
    REQUIRE(va.size() == vb.size());
    for (std::size_t i = 0; i < va.size(); ++i) CHECK(same_necklace(va[i], vb[i]));
    FlipSequence c = apply_switch(b, start, reverse_switch(t));
    CHECK(c.shift == a.shift);
  }
  CHECK_THROWS(apply_switch(flip_seq(Bitstring("0001011")), Bitstring("0001011"),
                            tau_2(5)));
}

TEST_CASE("validator agrees with the switch axioms on perturbed triples") {
  std::mt19937 rng(20240601);
  std::vector<Switch> pool;
  for (int n = 4; n <= 12; ++n) {
    pool.push_back(tau_1(n));
    pool.push_back(tau_2(n));
  }
  pool.push_back(tau_dz(52, 3));
  pool.push_back(tau_dz(13, 3));
  int rejected = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Switch& s = pool[rng() % pool.size()];
    std::array<Bitstring, 3> w = {s.x, s.y, s.y_prime};
    const std::size_t m = s.x.size();
    const int which = static_cast<int>(rng() % 3);
    switch (rng() % 3) {
      case 0:
        w[which].flip(rng() % m);
        break;
      case 1: {
        std::size_t i = rng() % m, j = rng() % m;
        if (i == j) j = (i + 1) % m;
        w[which].flip(i);
        w[which].flip(j);
        break;
      }
      default:
        w[which] = rotate(w[which], 1 + static_cast<long>(rng() % (m - 1)));
    }
    const bool valid = is_switch(w[0], w[1], w[2]);
    bool accepted = true;
    try {
      validate_switch(w[0], w[1], w[2]);
    } catch (const SwitchError&) {
      accepted = false;
    }
    CHECK(accepted == valid);
    rejected += !accepted;
  }
  CHECK(rejected >= 990);
}

TEST_CASE("prime sets") {
  CHECK(prime_set(105) == std::vector<int>{3, 5, 7});
  CHECK(relative_prime_set(105, 5) == std::vector<int>{3, 7});
  CHECK(relative_prime_set(105, 0).empty());
  CHECK(prime_set(1).empty());
}

TEST_CASE("shift planner") {
  CHECK(plan_shift_fix(10, 1).entries.empty());
  auto p52 = plan_shift_fix(52, 5);
  bool uses_dz = false;
  for (const auto& e : p52.entries) uses_dz = uses_dz || e.kind == SwitchKind::tau_dz;
  CHECK(uses_dz);
  CHECK(std::gcd(p52.result, 105) == 1);
  auto p11 = plan_shift_fix(11, 0);
  CHECK((p11.result == 1 || p11.result == 22));
  for (int n = 4; n <= 60; ++n) {
    const int m = 2 * n + 1;
    for (int s = 0; s < m; ++s) {
      auto p = plan_shift_fix(n, s);
      long sum = s;
      for (const auto& e : p.entries) {
        sum += e.sign * e.d;
        CHECK(make_switch(n, e).shift == e.d);
      }
      CHECK(mod(sum, m) == p.result);
      CHECK(std::gcd(p.result, m) == 1);
      if (std::gcd(s, m) == 1) CHECK(p.entries.empty());
    }
  }
  CHECK_FALSE(explain(p52).empty());
}
