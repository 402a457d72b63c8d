#include <set>

#include "doctest.h"
#include "stargray/tree.hpp"

using namespace stargray;

TEST_CASE("rho and its orbit") {
  CHECK(rho("0011") == "0101");
  CHECK(rho("01") == "01");
  CHECK(rho_inv("0101") == "0011");
  CHECK(lambda_of("01") == 1);
  CHECK(lambda_of("0011") == 2);
  CHECK(lambda_of("001011") == 2);
  CHECK(rho_pow("001011", 3) == rho("001011"));
  for (const auto& w : dyck_words(5)) CHECK(rho_inv(rho(w)) == w);
}

TEST_CASE("canonical plane trees") {
  CHECK(canonical_plane("0101").canonical == "0011");
  CHECK(canonical_plane("01").canonical == "01");
  CHECK(canonical_plane(rho_pow("001011", 3)).canonical ==
        canonical_plane("001011").canonical);
  // Plane trees with n edges: 1, 1, 2, 3, 6, 14, 34, 95
  const int counts[] = {1, 1, 2, 3, 6, 14, 34, 95};
  for (int n = 1; n <= 8; ++n) CHECK(plane_trees(n).size() == counts[n - 1]);
}

TEST_CASE("centroids and potential") {
  auto p = centroid_and_potential("0011");
  CHECK(p.centroids.size() == 1);
  CHECK(p.potential == 2);
  auto e = centroid_and_potential("01");
  CHECK(e.centroids.size() == 2);
  CHECK(e.potential == 1);
  auto s = centroid_and_potential("00101011");
  CHECK(s.centroids.size() == 1);
  CHECK(s.potential == 4);
}

TEST_CASE("subtrees around a centroid") {
  Tree s3("001011");
  auto c = s3.centroids().centroids;
  REQUIRE(c.size() == 1);
  CHECK(subtrees_at(s3, c[0]) == std::vector<std::string>{"01", "01", "01"});
  Tree d5(dumbbell(5));
  auto dc = d5.centroids().centroids;
  REQUIRE(dc.size() == 2);
  auto sub = subtrees_at(d5, dc[0]);
  std::multiset<std::string> got(sub.begin(), sub.end());
  CHECK(got == std::multiset<std::string>{"01", "01", star(3)});
}

TEST_CASE("pull and push") {
  CHECK(pull("001011") == "001101");
  CHECK(pull("010011") == "010101");
  CHECK_FALSE(is_pullable("01"));
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : dyck_words(n))
      if (is_pullable(w)) CHECK(push(pull(w)) == w);
}

TEST_CASE("named trees") {
  CHECK(q_word(4) == "00101011");
  CHECK(star(4) == "00101011");
  CHECK(dumbbell(5) == "0101001011");
  CHECK(q_word(9) == "0010101011");
  CHECK(q_word(0) == "01");
  CHECK(q_word(2) == "001011");
}

TEST_CASE("leaf flags") {
  Tree t("00101011");
  const int c = t.centroids().centroids[0];
  for (int a = 0; a < t.vertex_count(); ++a) {
    if (!t.is_leaf(a) || a == c) continue;
    auto lf = leaf_flags(t, c, a);
    CHECK(lf.path.size() == 2);
    CHECK_FALSE(lf.thin);
  }
}

TEST_CASE("Booth least rotation") {
  CHECK(least_rotation({2, 1, 0, 1}) == 2);
  CHECK(least_rotation({1, 1, 1}) == 0);
  CHECK(least_rotation({0, 1, 0, 0}) == 2);
}
