#include "stargray/verifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "stargray/generator.hpp"
#include "stargray/gluing.hpp"
#include "stargray/necklace.hpp"
#include "stargray/spanning_tree.hpp"
#include "stargray/switches.hpp"
#include "stargray/tree.hpp"

namespace stargray::verify {

namespace {

// Independent reference helpers. These deliberately avoid the tree and
// necklace modules so that agreement is evidence.

std::vector<std::string> ref_dyck(int n) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, int)> go = [&](int open, int close) {
    if (open == n && close == n) {
      out.push_back(cur);
      return;
    }
    if (open < n) {
      cur.push_back('0');
      go(open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back('1');
      go(open, close + 1);
      cur.pop_back();
    }
  };
  go(0, 0);
  return out;
}

std::string ref_rho(const std::string& w) {
  int depth = 0;
  std::size_t j = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    depth += w[i] == '1' ? 1 : -1;
    if (depth == 0) {
      j = i;
      break;
    }
  }
  const std::string u = w.substr(0, j);
  const std::string v = w.substr(j + 1, w.size() - j - 2);
  return "0" + u + "1" + v;
}

std::vector<std::string> ref_orbit(const std::string& w) {
  std::vector<std::string> out{w};
  for (std::string r = ref_rho(w); r != w; r = ref_rho(r)) out.push_back(r);
  return out;
}

std::string ref_canonical(const std::string& w) {
  auto o = ref_orbit(w);
  return *std::min_element(o.begin(), o.end());
}

std::vector<std::string> ref_plane_trees(int n) {
  std::set<std::string> reps;
  for (const auto& w : ref_dyck(n)) reps.insert(ref_canonical(w));
  return {reps.begin(), reps.end()};
}

std::vector<std::vector<int>> ref_adjacency(const std::string& w) {
  std::vector<std::vector<int>> adj(1);
  std::vector<int> stack{0};
  for (char ch : w) {
    if (ch == '0') {
      const int v = static_cast<int>(adj.size());
      adj.emplace_back();
      adj[stack.back()].push_back(v);
      adj[v].push_back(stack.back());
      stack.push_back(v);
    } else {
      stack.pop_back();
    }
  }
  return adj;
}

struct RefCentroids {
  std::vector<int> centroids;
  long potential = 0;
};

RefCentroids ref_centroids(const std::string& w) {
  auto adj = ref_adjacency(w);
  const int nv = static_cast<int>(adj.size());
  RefCentroids r;
  r.potential = -1;
  for (int s = 0; s < nv; ++s) {
    std::vector<int> dist(nv, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    long total = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      total += dist[v];
      for (int u : adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
    }
    if (r.potential < 0 || total < r.potential) {
      r.potential = total;
      r.centroids = {s};
    } else if (total == r.potential) {
      r.centroids.push_back(s);
    }
  }
  return r;
}

Bitstring combination_word(std::size_t length, std::uint64_t mask) {
  Bitstring b(length);
  for (std::size_t i = 0; i < length; ++i)
    if ((mask >> i) & 1u) b.set(i, true);
  return b;
}

std::vector<Bitstring> middle_vertices(int n) {
  const int m = 2 * n + 1;
  std::vector<Bitstring> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int w = __builtin_popcountll(mask);
    if (w == n || w == n + 1) out.push_back(combination_word(m, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Certificate make(std::string claim, int n) {
  Certificate c;
  c.claim = std::move(claim);
  c.n = n;
  c.pass = true;
  return c;
}

void fail(Certificate& c, const std::string& why) {
  if (c.pass) {
    c.pass = false;
    c.counterexample = why;
  }
}

template <class F>
Certificate guarded(std::string claim, int n, F body) {
  Certificate c = make(std::move(claim), n);
  try {
    body(c);
  } catch (const std::exception& e) {
    fail(c, std::string("exception: ") + e.what());
  }
  return c;
}

long binomial(int a, int b) {
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

std::size_t GraphSnapshot::index(const Bitstring& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return vertices.size();
  return static_cast<std::size_t>(it - vertices.begin());
}

GraphSnapshot build_M(int n) {
  if (n < 1 || n > 7) throw std::out_of_range("build_M supports 1 <= n <= 7");
  GraphSnapshot g;
  g.n = n;
  g.vertices = middle_vertices(n);
  g.adjacency.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t p = 0; p < g.vertices[i].size(); ++p) {
      std::size_t j = g.index(g.vertices[i].flipped(p));
      if (j < g.vertices.size()) g.adjacency[i].push_back(static_cast<int>(j));
    }
  }
  return g;
}

GraphSnapshot build_N(int n) {
  if (n < 1 || n > 9) throw std::out_of_range("build_N supports 1 <= n <= 9");
  std::set<Bitstring> reps;
  std::vector<std::pair<Bitstring, Bitstring>> edges;
  std::unordered_map<Bitstring, Bitstring, BitstringHash> rep_of;
  auto rep = [&](const Bitstring& b) {
    auto it = rep_of.find(b);
    if (it != rep_of.end()) return it->second;
    Bitstring r = necklace_representative(b);
    for (const auto& rot : necklace(b)) rep_of.emplace(rot, r);
    return r;
  };
  for (const auto& v : middle_vertices(n)) {
    Bitstring rv = rep(v);
    if (!(rv == v)) continue;
    reps.insert(rv);
    for (std::size_t p = 0; p < v.size(); ++p) {
      Bitstring u = v.flipped(p);
      if (u.weight() != static_cast<std::size_t>(n) &&
          u.weight() != static_cast<std::size_t>(n + 1))
        continue;
      edges.emplace_back(rv, rep(u));
    }
  }
  GraphSnapshot g;
  g.n = n;
  g.vertices.assign(reps.begin(), reps.end());
  std::vector<std::set<int>> adj(g.vertices.size());
  for (const auto& [a, b] : edges) {
    const int i = static_cast<int>(g.index(a)), j = static_cast<int>(g.index(b));
    if (i == j) continue;
    adj[i].insert(j);
    adj[j].insert(i);
  }
  for (const auto& s : adj) g.adjacency.emplace_back(s.begin(), s.end());
  return g;
}

Certificate certify_hamilton(const std::vector<Bitstring>& stream, int n) {
  Certificate c = make("hamilton", n);
  const long expected = binomial(2 * n + 2, n + 1);
  if (static_cast<long>(stream.size()) != expected) {
    fail(c, "stream has " + std::to_string(stream.size()) +
                " combinations, expected " + std::to_string(expected));
    return c;
  }
  std::unordered_map<Bitstring, std::size_t, BitstringHash> seen;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const Bitstring& w = stream[i];
    if (w.size() != static_cast<std::size_t>(2 * n + 2) ||
        w.weight() != static_cast<std::size_t>(n + 1)) {
      fail(c, "index " + std::to_string(i) + ": " + w.str() +
                  " is not an (n+1,n+1)-combination");
      return c;
    }
    auto [it, fresh] = seen.emplace(w, i);
    if (!fresh) {
      fail(c, "duplicate at index " + std::to_string(i) + " (first at " +
                  std::to_string(it->second) + "): " + w.str());
      return c;
    }
    const Bitstring& next = stream[(i + 1) % stream.size()];
    std::size_t diff = 0;
    for (std::size_t p = 0; p < w.size(); ++p) diff += w.test(p) != next.test(p);
    if (diff != 2 || w.test(0) == next.test(0)) {
      fail(c, "step " + std::to_string(i) + ": " + w.str() + " -> " +
                  next.str() + " is not a star transposition");
      return c;
    }
  }
  return c;
}

Certificate certify_walk(const std::vector<Bitstring>& stream,
                         const GraphSnapshot& g) {
  Certificate c = make("middle-levels-walk", g.n);
  if (stream.size() != g.vertices.size()) {
    fail(c, "walk length differs from the vertex count");
    return c;
  }
  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<std::size_t> idx;
  for (const auto& w : stream) {
    Bitstring v(w.size() - 1);
    for (std::size_t p = 1; p < w.size(); ++p) v.set(p - 1, w.test(p));
    std::size_t i = g.index(v);
    if (i == g.vertices.size() || seen[i]) {
      fail(c, "vertex " + v.str() + " missing or repeated");
      return c;
    }
    seen[i] = 1;
    idx.push_back(i);
  }
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& nb = g.adjacency[idx[k]];
    const int j = static_cast<int>(idx[(k + 1) % idx.size()]);
    if (std::find(nb.begin(), nb.end(), j) == nb.end()) {
      fail(c, "step " + std::to_string(k) + " is not an edge");
      return c;
    }
  }
  return c;
}

Certificate certify_blocks(const std::vector<int>& flips, int n, long s) {
  Certificate c = make("blocks", n);
  const int m = 2 * n + 1;
  const std::size_t len = static_cast<std::size_t>(2 * binomial(2 * n, n) / (n + 1));
  if (flips.size() != len * m) {
    fail(c, "flip sequence has length " + std::to_string(flips.size()) +
                ", expected " + std::to_string(len * m));
    return c;
  }
  for (int i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      const int want = wrap_position(flips[j] + static_cast<long>(i) * s, m);
      if (flips[i * len + j] != want) {
        fail(c, "block " + std::to_string(i) + " entry " + std::to_string(j) +
                    ": " + std::to_string(flips[i * len + j]) + " != " +
                    std::to_string(want));
        return c;
      }
    }
  }
  return c;
}

std::vector<Certificate> lemma_suite(int n) {
  std::vector<Certificate> out;
  const int m = 2 * n + 1;

  if (n <= 6) {
    out.push_back(guarded("period-equals-twice-lambda", n, [&](Certificate& c) {
      for (const auto& x : middle_vertices(n)) {
        const int want = 2 * static_cast<int>(ref_orbit(dyck_align(x).dyck).size());
        const int got = kappa(x);
        if (got != want) {
          fail(c, x.str() + ": period " + std::to_string(got) + ", expected " +
                      std::to_string(want));
          return;
        }
      }
    }));
    out.push_back(guarded("flip-map-bijection", n, [&](Certificate& c) {
      std::unordered_set<Bitstring, BitstringHash> images;
      for (const auto& x : middle_vertices(n)) {
        Bitstring y = f(x);
        if (x.single_difference(y) < 0 || x.weight() == y.weight()) {
          fail(c, x.str() + " -> " + y.str() + " is not an edge");
          return;
        }
        if (!images.insert(y).second) {
          fail(c, "two preimages of " + y.str());
          return;
        }
        if (!(f_inv(y) == x)) {
          fail(c, "inverse fails at " + x.str());
          return;
        }
      }
    }));
    out.push_back(guarded("two-steps-rotate-tree", n, [&](Certificate& c) {
      for (const auto& x : middle_vertices(n)) {
        std::string t = dyck_align(x).dyck;
        const std::size_t lam = ref_orbit(t).size();
        Bitstring y = x;
        for (std::size_t i = 1; i <= lam; ++i) {
          y = f(f(y));
          t = ref_rho(t);
          if (dyck_align(y).dyck != t) {
            fail(c, x.str() + " after " + std::to_string(2 * i) + " steps");
            return;
          }
        }
      }
    }));
    if (n >= 2) {
      out.push_back(guarded("cycle-factor-partition", n, [&](Certificate& c) {
        GraphSnapshot g = build_N(n);
        std::map<Bitstring, int> hits;
        for (const auto& [tree, cyc] : cycle_factor(n))
          for (const auto& v : cyc.vertices) ++hits[necklace_representative(v)];
        if (hits.size() != g.vertices.size()) {
          fail(c, std::to_string(hits.size()) + " necklaces covered, " +
                      std::to_string(g.vertices.size()) + " exist");
          return;
        }
        for (const auto& [v, k] : hits)
          if (k != 1) {
            fail(c, "necklace " + v.str() + " covered " + std::to_string(k) + " times");
            return;
          }
      }));
    }
  }

  if (n <= 8) {
    out.push_back(guarded("lambda-divides-2n", n, [&](Certificate& c) {
      for (const auto& t : ref_plane_trees(n)) {
        const int lam = static_cast<int>(ref_orbit(t).size());
        const auto cen = ref_centroids(t);
        if ((2 * n) % lam != 0) {
          fail(c, t + ": lambda " + std::to_string(lam) + " does not divide 2n");
          return;
        }
        const bool ok = cen.centroids.size() == 1
                            ? lam % 2 == 0
                            : n % 2 == 1 && (lam == n || lam == 2 * n);
        if (!ok) {
          fail(c, t + ": lambda " + std::to_string(lam) + " with " +
                      std::to_string(cen.centroids.size()) + " centroids");
          return;
        }
        if (lambda_of(t) != lam) {
          fail(c, t + ": library lambda " + std::to_string(lambda_of(t)));
          return;
        }
      }
    }));
    if (n >= 2) {
      out.push_back(guarded("cycle-count", n, [&](Certificate& c) {
        const auto trees = ref_plane_trees(n);
        const auto cf = cycle_factor(n);
        if (cf.size() != trees.size()) {
          fail(c, std::to_string(cf.size()) + " cycles, " +
                      std::to_string(trees.size()) + " rotation classes");
          return;
        }
        std::size_t total = 0;
        for (const auto& [t, cyc] : cf) total += cyc.vertices.size();
        const std::size_t words = ref_dyck(n).size();
        if (total != 2 * words)
          fail(c, "cycle lengths sum to " + std::to_string(total) +
                      ", expected " + std::to_string(2 * words));
      }));
    }
    out.push_back(guarded("catalan-residue", n, [&](Certificate& c) {
      const long want = static_cast<long>(ref_dyck(n).size()) % m;
      if (catalan_mod(n, m) != want)
        fail(c, "C_n mod 2n+1 = " + std::to_string(catalan_mod(n, m)) +
                    ", expected " + std::to_string(want));
    }));
  }

  if (n >= 4 && n <= 7) {
    out.push_back(guarded("gluing-periods", n, [&](Certificate& c) {
      for (const auto& p : gluing_pairs(n)) {
        const int kx = kappa(Bitstring("0" + p.x)), ky = kappa(Bitstring("0" + p.y));
        if (kx < 8 || ky < 4) {
          fail(c, p.x + "/" + p.y + ": periods " + std::to_string(kx) + ", " +
                      std::to_string(ky));
          return;
        }
      }
    }));
  }

  if (n >= 4 && n <= 7) {
    out.push_back(guarded("spanning-tree", n, [&](Certificate& c) {
      const SpanningTree t = build_spanning_tree(n);
      const auto trees = ref_plane_trees(n);
      std::map<std::string, int> id;
      for (const auto& w : trees) id.emplace(w, static_cast<int>(id.size()));
      std::vector<int> parent(trees.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
      };
      std::size_t arcs = 0;
      for (const auto& [node, s] : t.selection) {
        ++arcs;
        const std::string& x = s.x;
        if (x.size() < 3 || x.substr(x.size() - 3) != "011") {
          fail(c, x + " is not of the form u0v011");
          return;
        }
        if (s.y != x.substr(0, x.size() - 3) + "101") {
          fail(c, s.y + " is not the pull of " + x);
          return;
        }
        const std::string cx = ref_canonical(x), cy = ref_canonical(s.y);
        if (node != cx && node != cy) {
          fail(c, "selection of " + node + " does not touch it");
          return;
        }
        if (std::labs(ref_centroids(x).potential - ref_centroids(s.y).potential) != 1) {
          fail(c, x + " -> " + s.y + " does not change the potential by one");
          return;
        }
        const int a = find(id.at(cx)), b = find(id.at(cy));
        if (a == b) {
          fail(c, "arc " + x + " closes a cycle");
          return;
        }
        parent[a] = b;
      }
      if (arcs + 1 != trees.size()) {
        fail(c, std::to_string(arcs) + " arcs for " + std::to_string(trees.size()) +
                    " plane trees");
        return;
      }
      const TreeReport r = check_tree(t);
      if (!r.ok()) fail(c, "library tree report disagrees");
    }));
    out.push_back(guarded("subtree-conditions", n, [&](Certificate& c) {
      const ConditionReport r = check_subtree_conditions(build_spanning_tree(n));
      if (!r.violations.empty()) fail(c, "violated at " + r.violations.front());
    }));
    out.push_back(guarded("glued-shift", n, [&](Certificate& c) {
      SpanningRules rules(n);
      const Bitstring start(std::string(n + 1, '0') + std::string(n, '1'));
      const std::size_t len = 2 * ref_dyck(n).size();
      MiddleVertex v = dyck_align(start);
      bool forward = positive_direction(v, rules);
      std::vector<int> flips;
      std::set<Bitstring> necklaces;
      for (std::size_t i = 0; i < len; ++i) {
        if (!necklaces.insert(necklace_representative(v.word)).second) {
          fail(c, "necklace of " + v.word.str() + " visited twice");
          return;
        }
        Bitstring next = glued_step(v, forward, rules);
        const long p = v.word.single_difference(next);
        if (p < 0) {
          fail(c, "step from " + v.word.str() + " is not a single flip");
          return;
        }
        flips.push_back(static_cast<int>(p) + 1);
        v = dyck_align(next);
      }
      auto s = measure_shift(start, flips);
      const long want = static_cast<long>(ref_dyck(n).size()) % m;
      if (!s || *s != want)
        fail(c, "measured shift " + (s ? std::to_string(*s) : std::string("none")) +
                    ", expected " + std::to_string(want));
    }));
  }

  if (n >= 4 && n <= 6) {
    out.push_back(guarded("nesting-free", n, [&](Certificate& c) {
      const auto pairs = build_spanning_tree(n).pairs();
      for (const auto& p : pairs)
        for (const auto& q : pairs) {
          if (&p == &q) continue;
          // rho^-1 of p.y equals q.x exactly when rho of q.x equals p.y.
          if (ref_rho(q.x) == p.y) {
            fail(c, p.x + " and " + q.x + " are nested");
            return;
          }
          if (ref_rho(ref_rho(p.x)) == q.x) {
            fail(c, p.x + " and " + q.x + " are interleaved");
            return;
          }
        }
    }));
    out.push_back(guarded("hexagon-relations", n, [&](Certificate& c) {
      const auto pairs = build_spanning_tree(n).pairs();
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          if (a == b) continue;
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
              Relation r = relation(pairs[a], i, pairs[b], j);
              if (!r.agree() || r.nested || r.interleaved || !r.compatible) {
                fail(c, pairs[a].x + "@" + std::to_string(i) + " vs " +
                            pairs[b].x + "@" + std::to_string(j));
                return;
              }
            }
        }
    }));
    out.push_back(guarded("switch-flags", n, [&](Certificate& c) {
      SpanningRules rules(n);
      const SwitchFlags f1 = usable_and_reversed(tau_1(n), rules);
      const SwitchFlags f2 = usable_and_reversed(tau_2(n), rules);
      if (!f1.usable || !f1.reversed) fail(c, "tau1 should be usable and reversed");
      if (!f2.usable || f2.reversed) fail(c, "tau2 should be usable and not reversed");
    }));
  }
  return out;
}

std::vector<Certificate> hamilton_suite(int n) {
  std::vector<Certificate> out;
  const int m = 2 * n + 1;
  std::vector<int> shifts;
  for (int s = 1; s < m; ++s)
    if (std::gcd(s, m) == 1 && (n <= 6 || s == 1)) shifts.push_back(s);
  std::optional<GraphSnapshot> g;
  if (n <= 6) g = build_M(n);
  for (int s : shifts) {
    const std::string tag = " (shift " + std::to_string(s) + ")";
    std::vector<Bitstring> stream;
    std::vector<int> flips;
    out.push_back(guarded("generate" + tag, n, [&](Certificate&) {
      Generator gen(n, s);
      while (auto st = gen.next()) {
        stream.push_back(std::move(st->combination));
        flips.push_back(st->flip);
      }
    }));
    Certificate h = certify_hamilton(stream, n);
    h.claim += tag;
    out.push_back(std::move(h));
    if (g) {
      Certificate w = certify_walk(stream, *g);
      w.claim += tag;
      out.push_back(std::move(w));
    }
    Certificate b = certify_blocks(flips, n, -s);
    b.claim += tag;
    out.push_back(std::move(b));
  }
  return out;
}

std::string to_json(const std::vector<Certificate>& certs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : certs) {
    nlohmann::json j{{"claim", c.claim}, {"n", c.n}, {"pass", c.pass}};
    if (!c.pass) j["counterexample"] = c.counterexample;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace stargray::verify
