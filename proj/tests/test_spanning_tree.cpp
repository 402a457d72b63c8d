#include <set>

#include "doctest.h"
#include "stargray/spanning_tree.hpp"
#include "stargray/tree.hpp"

using namespace stargray;

TEST_CASE("selections at n = 5") {
  auto t = build_spanning_tree(5);
  struct Row {
    const char *tree, *x, *y, *rule;
  };
  const Row rows[] = {
      {"0000011111", "0001110011", "0001110101", "q137"},
      {"0000101111", "0010110011", "0010110101", "q137"},
      {"0000110111", "0100110011", "0100110101", "q137"},
      {"0001010111", "0101010011", "0101010101", "q137"},
      {"0001011011", "0100101011", "0100101101", "D"},
  };
  CHECK(t.selection.size() == 5);
  for (const auto& r : rows) {
    REQUIRE(t.selection.count(r.tree) == 1);
    const Selection& s = t.selection.at(r.tree);
    CHECK(s.x == r.x);
    CHECK(s.y == r.y);
    CHECK(rule_name(s.rule) == r.rule);
  }
  CHECK(canonical_word(dumbbell(5)) == "0001011011");
  CHECK(t.selection.at("0001011011").y == dumbbell_prime(5));
}

TEST_CASE("selections at n = 4") {
  auto t = build_spanning_tree(4);
  CHECK(t.selection.size() == 2);
  CHECK(t.selection.at("00001111").x == "00110011");
  CHECK(t.selection.at("00010111").x == "01010011");
}

TEST_CASE("the star has no selection") {
  SpanningRules rules(6);
  CHECK_THROWS(rules.select(star(6)));
  CHECK_FALSE(rules.in_x(star(6)));
}

TEST_CASE("spanning tree of the gluing graph") {
  for (int n = 4; n <= 7; ++n) {
    auto t = build_spanning_tree(n);
    auto rep = check_tree(t);
    CHECK(rep.ok());
    CHECK(rep.nodes == plane_trees(n).size());
    CHECK(rep.arcs + 1 == rep.nodes);
    auto cond = check_subtree_conditions(t);
    CHECK(cond.violations.empty());
    for (const auto& a : t.arcs()) {
      CHECK(a.from == canonical_word(a.label.x));
      CHECK(a.to == canonical_word(a.label.y));
    }
    // the selecting tree sits one potential step above its partner
    for (const auto& [w, s] : t.selection) {
      const std::string other = canonical_word(is_pull_rule(s.rule) ? s.y : s.x);
      CHECK(canonical_word(is_pull_rule(s.rule) ? s.x : s.y) == w);
      CHECK(centroid_and_potential(other).potential ==
            centroid_and_potential(w).potential - 1);
    }
  }
}

TEST_CASE("gluing graph on eight-bit words") {
  auto g = build_gluing_graph(4);
  CHECK(g.nodes.size() == plane_trees(4).size());
  CHECK(canonical_word("00101101") == canonical_word("01001101"));
  bool loop = false, forward = false, backward = false, star_arc = false;
  for (const auto& a : g.arcs) {
    if (a.label.x == "01001011" && a.label.y == "01001101") loop = a.from == a.to;
    if (a.from == "00001111" && a.to == "00010111") forward = true;
    if (a.from == "00010111" && a.to == "00001111") backward = true;
    if (a.from == canonical_word(star(4))) star_arc = true;
  }
  CHECK(loop);
  CHECK(forward);
  CHECK(backward);
  CHECK_FALSE(star_arc);
}

TEST_CASE("subtree condition detector") {
  auto t = build_spanning_tree(6);
  bool flipped = false;
  for (auto& [w, s] : t.selection) {
    if (s.unique_centroid && s.condition == 1 && s.subtrees.size() > 1) {
      CHECK(subtree_conditions_hold(s));
      // pretend the preceding subtree was not q0
      s.subtrees[(s.subtree_index + s.subtrees.size() - 1) % s.subtrees.size()] = "0011";
      bool all_q1 = true;
      for (const auto& st : s.subtrees) all_q1 = all_q1 && st == q_word(1);
      if (!all_q1) {
        CHECK_FALSE(subtree_conditions_hold(s));
        flipped = true;
        break;
      }
    }
  }
  if (flipped) CHECK_FALSE(check_subtree_conditions(t).violations.empty());
}

TEST_CASE("exports") {
  auto t = build_spanning_tree(5);
  std::string dot = to_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(to_csv(t) == to_csv(build_spanning_tree(5)));
}
