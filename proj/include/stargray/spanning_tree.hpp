#ifndef STARGRAY_SPANNING_TREE_HPP
#define STARGRAY_SPANNING_TREE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stargray/gluing.hpp"

namespace stargray {

enum class Rule { D, q137, q24, q5, q8, e, o1, o2 };

std::string_view rule_name(Rule r);
bool is_pull_rule(Rule r);

struct Selection {
  std::string tree;  // the rooted word the rules were evaluated on
  std::string x, y;  // chosen gluing pair, y = pull(x)
  Rule rule = Rule::e;
  int centroid = -1;       // vertex of Tree(tree)
  int leaf = -1;           // vertex of Tree(tree)
  int subtree_index = -1;  // position of the chosen subtree in `subtrees`
  std::vector<std::string> subtrees;  // ordered active subtrees at centroid
  bool unique_centroid = true;
  int condition = 0;  // which of the ordered subtree conditions fired (1..4)
};

// Local evaluation of the spanning-tree rules on a single plane tree. All
// queries cost linear time in n.
class SpanningRules : public GluingMembership {
 public:
  explicit SpanningRules(int n);
  int n() const { return n_; }

  // Throws for the star, which has no selection.
  Selection select(std::string_view w) const;

  bool in_x(std::string_view w) const override;
  bool in_y(std::string_view w) const override;

 private:
  int n_;
  std::string star_;
};

struct GluingArc {
  std::string from, to;  // canonical words
  GluingPair label;
};

struct GluingGraph {
  int n = 0;
  std::vector<std::string> nodes;
  std::vector<GluingArc> arcs;
};

GluingGraph build_gluing_graph(int n);

struct SpanningTree {
  int n = 0;
  std::vector<std::string> nodes;
  std::map<std::string, Selection> selection;  // keyed by canonical word
  std::vector<GluingArc> arcs() const;
  std::vector<GluingPair> pairs() const;
};

SpanningTree build_spanning_tree(int n);

struct TreeReport {
  std::size_t nodes = 0;
  std::size_t arcs = 0;
  bool connected = false;
  bool acyclic = false;
  bool potential_steps = false;  // every arc changes the potential by one
  bool unique_descent = false;   // one lower-potential neighbour per node
  bool ok() const {
    return connected && acyclic && potential_steps && unique_descent &&
           arcs + 1 == nodes;
  }
};

TreeReport check_tree(const SpanningTree& t);

// Conditions on the selected subtree when the centroid is unique: a
// selected q1 follows a q0 unless all subtrees are q1, and a selected q2 or
// q4 precedes q0, q1 or q2 unless all subtrees are q4.
bool subtree_conditions_hold(const Selection& s);

struct ConditionReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
};

ConditionReport check_subtree_conditions(const SpanningTree& t);

std::string to_dot(const GluingGraph& g);
std::string to_dot(const SpanningTree& t);
std::string to_csv(const GluingGraph& g);
std::string to_csv(const SpanningTree& t);

}  // namespace stargray

#endif
