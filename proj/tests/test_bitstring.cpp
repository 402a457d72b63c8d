#include <set>

#include "doctest.h"
#include "stargray/bitstring.hpp"

using stargray::Bitstring;
using stargray::Side;

TEST_CASE("rotation moves bits to the right") {
  CHECK(rotate(Bitstring("11000"), 1).str() == "01100");
  CHECK(rotate(Bitstring("11000"), 0).str() == "11000");
  CHECK(rotate(Bitstring("11000"), 5).str() == "11000");
  CHECK(rotate(Bitstring("11000"), -1).str() == "10001");
}

TEST_CASE("rotation works across word boundaries") {
  std::string s(150, '0');
  s[0] = '1';
  s[70] = '1';
  Bitstring r = rotate(Bitstring(s), 100);
  std::string expect(150, '0');
  expect[100] = '1';
  expect[20] = '1';
  CHECK(r.str() == expect);
  CHECK(rotate(r, -100).str() == s);
}

TEST_CASE("necklace lists every rotation once") {
  std::set<std::string> got;
  for (const auto& b : necklace(Bitstring("11000"))) got.insert(b.str());
  CHECK(got == std::set<std::string>{"11000", "01100", "00110", "00011", "10001"});
  CHECK(necklace(Bitstring("01100")) == necklace(Bitstring("11000")));
  CHECK(necklace(Bitstring("00000")).size() == 1);
  CHECK(necklace_representative(Bitstring("10001")).str() == "00011");
}

TEST_CASE("deficiency and Dyck words") {
  CHECK(stargray::deficiency("01") == 0);
  CHECK(stargray::deficiency("0") == 1);
  CHECK(stargray::deficiency("111") == -3);
  CHECK(stargray::is_dyck("01"));
  CHECK(stargray::is_dyck("001011"));
  CHECK_FALSE(stargray::is_dyck("10"));
  CHECK_FALSE(stargray::is_dyck("0"));
}

TEST_CASE("dyck alignment") {
  auto a = stargray::dyck_align(Bitstring("00011"));
  CHECK(a.side == Side::A);
  CHECK(a.ell == 0);
  CHECK(a.dyck == "0011");
  auto b = stargray::dyck_align(Bitstring("11000"));
  CHECK(b.side == Side::A);
  CHECK(b.ell == 3);
  CHECK(b.dyck == "0011");
  auto c = stargray::dyck_align(Bitstring("01011"));
  CHECK(c.side == Side::B);
  CHECK(c.ell == 0);
  CHECK(c.dyck == "0101");
  CHECK(stargray::from_alignment(b.side, b.ell, b.dyck).str() == "11000");
  CHECK_THROWS(stargray::dyck_align(Bitstring("00001")));
}

TEST_CASE("alignment is unique on every middle-levels vertex") {
  for (int n = 1; n <= 5; ++n) {
    const int m = 2 * n + 1;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::string s;
      for (int i = 0; i < m; ++i) s += (mask >> i) & 1 ? '1' : '0';
      const auto w = Bitstring(s).weight();
      if (w != static_cast<std::size_t>(n) && w != static_cast<std::size_t>(n + 1)) continue;
      int hits = 0;
      for (int r = 0; r < m; ++r) {
        std::string t = rotate(Bitstring(s), r).str();
        if (w == static_cast<std::size_t>(n) && t[0] == '0' && stargray::is_dyck(t.substr(1)))
          ++hits;
        if (w == static_cast<std::size_t>(n + 1) && t.back() == '1' &&
            stargray::is_dyck(t.substr(0, m - 1)))
          ++hits;
      }
      CHECK(hits == 1);
      auto v = stargray::dyck_align(Bitstring(s));
      CHECK(stargray::from_alignment(v.side, v.ell, v.dyck).str() == s);
    }
  }
}

TEST_CASE("u0v1 decomposition") {
  using P = std::pair<std::string, std::string>;
  CHECK(stargray::decompose_u0v1("01") == P{"", ""});
  CHECK(stargray::decompose_u0v1("0011") == P{"", "01"});
  CHECK(stargray::decompose_u0v1("0101") == P{"01", ""});
  CHECK_THROWS(stargray::decompose_u0v1(""));
}

TEST_CASE("single difference") {
  CHECK(Bitstring("0110").single_difference(Bitstring("0100")) == 2);
  CHECK(Bitstring("0110").single_difference(Bitstring("0110")) == -1);
  CHECK(Bitstring("0110").single_difference(Bitstring("1111")) == -1);
}
