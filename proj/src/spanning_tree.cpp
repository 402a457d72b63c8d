#include "stargray/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "stargray/fault.hpp"
#include "stargray/tree.hpp"

namespace stargray {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::D:
      return "D";
    case Rule::q137:
      return "q137";
    case Rule::q24:
      return "q24";
    case Rule::q5:
      return "q5";
    case Rule::q8:
      return "q8";
    case Rule::e:
      return "e";
    case Rule::o1:
      return "o1";
    case Rule::o2:
      return "o2";
  }
  return "?";
}

bool is_pull_rule(Rule r) {
  return r == Rule::q137 || r == Rule::q8 || r == Rule::e || r == Rule::o1;
}

namespace {

int first_child(const Tree& t, int v, int from) {
  return t.neighbors(v)[(t.index_of(v, from) + 1) % t.degree(v)];
}

int last_child(const Tree& t, int v, int from) {
  const int d = t.degree(v);
  return t.neighbors(v)[(t.index_of(v, from) + d - 1) % d];
}

int rightmost_leaf(const Tree& t, int c, int b) {
  int from = c, v = b;
  while (!t.is_leaf(v)) {
    int next = last_child(t, v, from);
    from = v;
    v = next;
  }
  return v;
}

int leftmost_leaf(const Tree& t, int c, int b) {
  int from = c, v = b;
  while (!t.is_leaf(v)) {
    int next = first_child(t, v, from);
    from = v;
    v = next;
  }
  return v;
}

std::vector<int> leaves_in(const Tree& t, int c, int b) {
  std::vector<int> out;
  struct Frame {
    int v, from, idx, left;
  };
  std::vector<Frame> stack;
  auto enter = [&](int v, int from) {
    if (t.is_leaf(v)) {
      out.push_back(v);
      return;
    }
    int d = t.degree(v);
    stack.push_back({v, from, (t.index_of(v, from) + 1) % d, d - 1});
  };
  enter(b, c);
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.left == 0) {
      stack.pop_back();
      continue;
    }
    int u = t.neighbors(fr.v)[fr.idx];
    fr.idx = (fr.idx + 1) % t.degree(fr.v);
    --fr.left;
    enter(u, fr.v);
  }
  return out;
}

// t = 0^l q_j 1^l for j in {1,2,3,4,5,7,8}; returns j or -1.
int match_q(std::string_view t) {
  for (int j : {1, 2, 3, 4, 5, 7, 8}) {
    const std::string& q = q_word(j);
    if (t.size() < q.size() || (t.size() - q.size()) % 2 != 0) continue;
    const std::size_t l = (t.size() - q.size()) / 2;
    bool ok = true;
    for (std::size_t i = 0; i < l && ok; ++i)
      ok = t[i] == '0' && t[t.size() - 1 - i] == '1';
    if (ok && t.substr(l, q.size()) == q) return j;
  }
  return -1;
}

std::vector<int> separator_key(const std::vector<std::string>& words) {
  std::vector<int> key;
  for (const auto& w : words) {
    key.push_back(-1);
    for (char ch : w) key.push_back(ch - '0');
  }
  return key;
}

bool is_star_tree(const Tree& t) {
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.degree(v) == t.edge_count()) return true;
  return false;
}

bool is_dumbbell_tree(const Tree& t) {
  const int n = t.edge_count();
  if (n < 5 || n % 2 == 0) return false;
  int inner = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) continue;
    if (t.degree(v) != (n + 1) / 2) return false;
    ++inner;
  }
  return inner == 2;
}

Selection finish_pull(Selection s, const Tree& t, Rule rule) {
  s.rule = rule;
  s.x = root_for_pull(t, s.centroid, s.leaf);
  s.y = pull(s.x);
  return s;
}

Selection finish_push(Selection s, const Tree& t, Rule rule) {
  s.rule = rule;
  s.y = root_for_push(t, s.centroid, s.leaf);
  s.x = push(s.y);
  return s;
}

std::optional<Selection> select_in(const Tree& t, std::string_view w) {
  if (is_star_tree(t)) return std::nullopt;
  Selection s;
  s.tree = std::string(w);

  if (is_dumbbell_tree(t)) {
    const CentroidInfo ci = t.centroids();
    for (int c : ci.centroids) {
      int inner = -1, count = 0;
      for (int b : t.neighbors(c)) {
        if (!t.is_leaf(b)) {
          inner = b;
          ++count;
        }
      }
      if (count != 1) continue;
      s.centroid = c;
      s.unique_centroid = false;
      s.subtrees = {t.subtree(c, inner)};
      s.subtree_index = 0;
      s.leaf = leftmost_leaf(t, c, inner);
      return finish_push(std::move(s), t, Rule::D);
    }
    throw std::logic_error("dumbbell without a suitable centroid");
  }

  const CentroidInfo ci = t.centroids();
  std::vector<int> order;  // clockwise neighbours of the chosen centroid
  if (ci.centroids.size() == 2) {
    s.unique_centroid = false;
    std::vector<int> best_key;
    bool found = false;
    for (std::size_t k = 0; k < 2; ++k) {
      const int c = ci.centroids[k], other = ci.centroids[1 - k];
      const auto& nb = t.neighbors(c);
      std::vector<int> cw(nb.rbegin(), nb.rend());
      auto pos = std::find(cw.begin(), cw.end(), other) - cw.begin();
      std::vector<int> seq(cw.begin() + pos + 1, cw.end());
      seq.insert(seq.end(), cw.begin(), cw.begin() + pos);
      std::vector<std::string> subs;
      for (int b : seq) subs.push_back(t.subtree(c, b));
      if (std::all_of(subs.begin(), subs.end(),
                      [](const std::string& x) { return x == "01"; }))
        continue;
      std::vector<int> key = separator_key(subs);
      if (!found || key < best_key) {
        found = true;
        best_key = std::move(key);
        s.centroid = c;
        order = std::move(seq);
        s.subtrees = std::move(subs);
      }
    }
    if (!found) throw std::logic_error("no centroid with a large subtree");
    for (std::size_t i = 0; i < s.subtrees.size(); ++i) {
      if (s.subtrees[i] != "01") {
        s.subtree_index = static_cast<int>(i);
        break;
      }
    }
  } else {
    const int c = ci.centroids[0];
    s.centroid = c;
    const auto& nb = t.neighbors(c);
    std::vector<int> cw(nb.rbegin(), nb.rend());
    std::vector<std::string> subs;
    for (int b : cw) subs.push_back(t.subtree(c, b));
    std::vector<int> key = separator_key(subs);
    const std::size_t r = least_rotation(key);
    int first = 0;
    for (std::size_t i = 0, at = 0; i < subs.size(); ++i) {
      if (at == r) first = static_cast<int>(i);
      at += subs[i].size() + 1;
    }
    std::rotate(cw.begin(), cw.begin() + first, cw.end());
    std::rotate(subs.begin(), subs.begin() + first, subs.end());
    order = std::move(cw);
    s.subtrees = std::move(subs);

    const auto& q = s.subtrees;
    const int k = static_cast<int>(q.size());
    const std::string &q0 = q_word(0), &q1 = q_word(1), &q2 = q_word(2),
                      &q4 = q_word(4);
    auto cond = [&](int which, int i) {
      const std::string& ti = q[i];
      switch (which) {
        case 1: {
          // The fault mirrors the neighbour that condition (i) inspects.
          const int nb = fault::active() == fault::Kind::subtree_rule
                             ? (i + 1) % k
                             : (i + k - 1) % k;
          return ti == q1 && q[nb] == q0;
        }
        case 2: {
          const std::string& nx = q[(i + 1) % k];
          return (ti == q2 || ti == q4) && (nx == q0 || nx == q1 || nx == q2);
        }
        case 3:
          return ti != q0 && ti != q1 && ti != q2 && ti != q4;
        default:
          return ti != q0;
      }
    };
    for (int which = 1; which <= 4 && s.subtree_index < 0; ++which) {
      for (int i = 0; i < k; ++i) {
        if (cond(which, i)) {
          s.subtree_index = i;
          s.condition = which;
          break;
        }
      }
    }
    if (s.subtree_index < 0) throw std::logic_error("no subtree selected");
  }

  const int c = s.centroid;
  const int b = order[s.subtree_index];
  const std::string& chosen = s.subtrees[s.subtree_index];
  switch (match_q(chosen)) {
    case 1:
    case 3:
    case 7:
      s.leaf = rightmost_leaf(t, c, b);
      return finish_pull(std::move(s), t, Rule::q137);
    case 2:
    case 4:
      s.leaf = leftmost_leaf(t, c, b);
      return finish_push(std::move(s), t, Rule::q24);
    case 5:
      s.leaf = leaves_in(t, c, b).at(1);
      return finish_push(std::move(s), t, Rule::q5);
    case 8:
      s.leaf = leftmost_leaf(t, c, b);
      return finish_pull(std::move(s), t, Rule::q8);
    default:
      break;
  }
  if (ci.potential % 2 == 0) {
    s.leaf = rightmost_leaf(t, c, b);
    return finish_pull(std::move(s), t, Rule::e);
  }
  s.leaf = leftmost_leaf(t, c, b);
  const bool thin = t.degree(t.neighbors(s.leaf)[0]) <= 2;
  if (thin) return finish_pull(std::move(s), t, Rule::o1);
  return finish_push(std::move(s), t, Rule::o2);
}

}  // namespace

SpanningRules::SpanningRules(int n) : n_(n) {
  if (n < 4) throw std::out_of_range("spanning-tree rules need n >= 4");
  star_ = star(n);
}

Selection SpanningRules::select(std::string_view w) const {
  if (w.size() != static_cast<std::size_t>(2 * n_))
    throw std::invalid_argument("tree has the wrong number of edges");
  Tree t(w);
  auto s = select_in(t, w);
  if (!s) throw std::invalid_argument("the star has no selected gluing pair");
  return *std::move(s);
}

bool SpanningRules::in_x(std::string_view w) const {
  if (!is_pullable(w)) return false;
  std::string y = pull(w);
  if (w == star_) return false;
  for (std::string_view word : {w, std::string_view(y)}) {
    Tree t(word);
    auto s = select_in(t, word);
    if (s && s->x == w) return true;
  }
  return false;
}

bool SpanningRules::in_y(std::string_view w) const {
  if (!is_pushable(w)) return false;
  return in_x(push(w));
}

GluingGraph build_gluing_graph(int n) {
  if (n < 4) throw std::out_of_range("gluing graph needs n >= 4");
  GluingGraph g;
  g.n = n;
  g.nodes = plane_trees(n);
  for (auto& p : gluing_pairs(n)) {
    GluingArc a;
    a.from = canonical_word(p.x);
    a.to = canonical_word(p.y);
    a.label = std::move(p);
    g.arcs.push_back(std::move(a));
  }
  return g;
}

std::vector<GluingArc> SpanningTree::arcs() const {
  std::vector<GluingArc> out;
  for (const auto& [node, s] : selection) {
    GluingArc a;
    a.label = make_gluing_pair(s.x);
    a.from = canonical_word(s.x);
    a.to = canonical_word(s.y);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<GluingPair> SpanningTree::pairs() const {
  std::vector<GluingPair> out;
  for (const auto& [node, s] : selection) out.push_back(make_gluing_pair(s.x));
  return out;
}

SpanningTree build_spanning_tree(int n) {
  SpanningRules rules(n);
  SpanningTree t;
  t.n = n;
  t.nodes = plane_trees(n);
  const std::string star_class = canonical_word(star(n));
  for (const auto& node : t.nodes) {
    if (node == star_class) continue;
    t.selection.emplace(node, rules.select(node));
  }
  return t;
}

TreeReport check_tree(const SpanningTree& t) {
  TreeReport r;
  r.nodes = t.nodes.size();
  std::map<std::string, int> id;
  for (const auto& v : t.nodes) id.emplace(v, static_cast<int>(id.size()));
  std::vector<int> parent(r.nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<long> phi(r.nodes);
  for (const auto& [v, i] : id) phi[i] = Tree(v).centroids().potential;
  std::vector<int> lower(r.nodes, 0);
  r.acyclic = true;
  r.potential_steps = true;
  std::size_t components = r.nodes;
  for (const auto& a : t.arcs()) {
    ++r.arcs;
    auto fi = id.find(a.from), ti = id.find(a.to);
    if (fi == id.end() || ti == id.end()) {
      r.acyclic = false;
      continue;
    }
    const int u = fi->second, v = ti->second;
    if (std::labs(phi[u] - phi[v]) != 1) r.potential_steps = false;
    if (phi[v] < phi[u]) ++lower[u];
    if (phi[u] < phi[v]) ++lower[v];
    int ru = find(u), rv = find(v);
    if (ru == rv) {
      r.acyclic = false;
    } else {
      parent[ru] = rv;
      --components;
    }
  }
  r.connected = components == 1;
  const std::string star_class = canonical_word(star(t.n));
  r.unique_descent = true;
  for (const auto& [v, i] : id) {
    const int expected = v == star_class ? 0 : 1;
    if (lower[i] != expected) r.unique_descent = false;
  }
  return r;
}

bool subtree_conditions_hold(const Selection& s) {
  if (!s.unique_centroid || s.subtree_index < 0) return true;
  const auto& q = s.subtrees;
  const std::size_t k = q.size();
  const std::string& t = q[s.subtree_index];
  auto all_equal = [&](const std::string& w) {
    return std::all_of(q.begin(), q.end(),
                       [&](const std::string& x) { return x == w; });
  };
  if (t == q_word(1)) {
    return q[(s.subtree_index + k - 1) % k] == q_word(0) || all_equal(q_word(1));
  }
  if (t == q_word(2) || t == q_word(4)) {
    const std::string& nx = q[(s.subtree_index + 1) % k];
    return nx == q_word(0) || nx == q_word(1) || nx == q_word(2) ||
           all_equal(q_word(4));
  }
  return true;
}

ConditionReport check_subtree_conditions(const SpanningTree& t) {
  ConditionReport r;
  for (const auto& [node, s] : t.selection) {
    if (!s.unique_centroid) continue;
    const std::string& chosen = s.subtrees[s.subtree_index];
    if (chosen != q_word(1) && chosen != q_word(2) && chosen != q_word(4))
      continue;
    ++r.checked;
    if (!subtree_conditions_hold(s)) r.violations.push_back(node);
  }
  return r;
}

std::string to_dot(const GluingGraph& g) {
  std::ostringstream out;
  out << "digraph gluing_" << g.n << " {\n";
  for (const auto& v : g.nodes) out << "  \"" << v << "\";\n";
  for (const auto& a : g.arcs)
    out << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\""
        << a.label.x << "/" << a.label.y << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const SpanningTree& t) {
  std::ostringstream out;
  out << "digraph spanning_" << t.n << " {\n";
  for (const auto& v : t.nodes) out << "  \"" << v << "\";\n";
  for (const auto& [node, s] : t.selection)
    out << "  \"" << canonical_word(s.x) << "\" -> \"" << canonical_word(s.y)
        << "\" [label=\"" << s.x << "/" << s.y << " " << rule_name(s.rule)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_csv(const GluingGraph& g) {
  std::ostringstream out;
  out << "from,to,x,y\n";
  for (const auto& a : g.arcs)
    out << a.from << ',' << a.to << ',' << a.label.x << ',' << a.label.y
        << '\n';
  return out.str();
}

std::string to_csv(const SpanningTree& t) {
  std::ostringstream out;
  out << "node,from,to,x,y,rule\n";
  for (const auto& [node, s] : t.selection)
    out << node << ',' << canonical_word(s.x) << ',' << canonical_word(s.y)
        << ',' << s.x << ',' << s.y << ',' << rule_name(s.rule) << '\n';
  return out.str();
}

}  // namespace stargray
