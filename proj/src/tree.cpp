#include "stargray/tree.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "stargray/bitstring.hpp"
#include "stargray/fault.hpp"

namespace stargray {

std::string rho(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("rho of the empty word");
  auto [u, v] = decompose_u0v1(w);
  if (fault::active() == fault::Kind::rotation)
    return "0" + v + "1" + u;
  return "0" + u + "1" + v;
}

std::string rho_inv(std::string_view w) {
  if (w.empty() || !is_dyck(w))
    throw std::invalid_argument("rho_inv needs a nonempty Dyck word");
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    d += (w[i] == '0') ? 1 : -1;
    if (d == 0) {
      std::string out(w.substr(1, i - 1));
      out += '0';
      out += w.substr(i + 1);
      out += '1';
      return out;
    }
  }
  throw std::logic_error("unreachable: Dyck word without first block");
}

std::string rho_pow(std::string_view w, long k) {
  std::string out(w);
  if (w.empty()) return out;
  // rho has order dividing 2n on Dyck words of length 2n.
  const long period = static_cast<long>(w.size());
  k %= period;
  if (k < 0) k += period;
  if (k <= period / 2) {
    for (long i = 0; i < k; ++i) out = rho(out);
  } else {
    for (long i = k; i < period; ++i) out = rho_inv(out);
  }
  return out;
}

int lambda_of(std::string_view w) {
  if (w.empty()) throw std::invalid_argument("lambda of the empty word");
  std::string x = rho(w);
  int i = 1;
  while (x != w) {
    x = rho(x);
    ++i;
  }
  return i;
}

std::string canonical_word(std::string_view w) {
  std::string best(w);
  if (w.empty()) return best;
  std::string x = rho(w);
  while (x != w) {
    if (x < best) best = x;
    x = rho(x);
  }
  return best;
}

std::vector<std::string> dyck_words(int n) {
  std::vector<std::string> out;
  std::string cur;
  auto rec = [&](auto&& self, int open, int close) -> void {
    if (open == n && close == n) {
      out.push_back(cur);
      return;
    }
    if (open < n) {
      cur.push_back('0');
      self(self, open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back('1');
      self(self, open, close + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<std::string> plane_trees(int n) {
  std::set<std::string> seen;
  for (const auto& w : dyck_words(n)) seen.insert(canonical_word(w));
  return {seen.begin(), seen.end()};
}

std::size_t least_rotation(const std::vector<int>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[(k + i + 1) % n]) {
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

Tree::Tree(std::string_view dyck) {
  if (!is_dyck(dyck)) throw std::invalid_argument("not a Dyck word: " +
                                                  std::string(dyck));
  parent_.reserve(dyck.size() / 2 + 1);
  parent_.push_back(-1);
  rank_.push_back(0);
  std::vector<std::vector<int>> children(1);
  int cur = 0;
  for (char c : dyck) {
    if (c == '0') {
      int v = static_cast<int>(parent_.size());
      parent_.push_back(cur);
      rank_.push_back(static_cast<int>(children[cur].size()));
      children[cur].push_back(v);
      children.emplace_back();
      cur = v;
    } else {
      cur = parent_[cur];
    }
  }
  nb_ = std::move(children);
  for (int v = 1; v < vertex_count(); ++v) nb_[v].push_back(parent_[v]);
}

int Tree::index_of(int v, int u) const {
  if (u == parent_[v]) return degree(v) - 1;
  if (u >= 0 && u < vertex_count() && parent_[u] == v) return rank_[u];
  throw std::invalid_argument("vertices are not adjacent");
}

int Tree::clockwise_next(int v, int u) const {
  int d = degree(v);
  return nb_[v][(index_of(v, u) + d - 1) % d];
}

namespace {

// Emits "0 <branch> 1" for `count` neighbours of v, starting at index
// `start` of v's neighbour list.
void serialize(const Tree& t, int v, int start, int count, std::string& out) {
  struct Frame {
    int v, idx, left;
  };
  std::vector<Frame> stack;
  stack.push_back({v, start, count});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.left == 0) {
      stack.pop_back();
      if (!stack.empty()) out += '1';
      continue;
    }
    const auto& nb = t.neighbors(f.v);
    int u = nb[f.idx];
    f.idx = (f.idx + 1) % static_cast<int>(nb.size());
    --f.left;
    const int from = f.v;
    out += '0';
    int d = t.degree(u);
    stack.push_back({u, (t.index_of(u, from) + 1) % d, d - 1});
  }
}

}  // namespace

std::string Tree::branch(int v, int from) const {
  std::string out;
  out.reserve(2 * edge_count());
  if (from < 0) {
    serialize(*this, v, 0, degree(v), out);
  } else {
    serialize(*this, v, (index_of(v, from) + 1) % degree(v), degree(v) - 1,
              out);
  }
  return out;
}

std::string Tree::rooted(int a, int b) const {
  std::string out;
  out.reserve(2 * edge_count());
  serialize(*this, a, (index_of(a, b) + 1) % degree(a), degree(a), out);
  return out;
}

std::string Tree::subtree(int c, int b) const {
  return "0" + branch(b, c) + "1";
}

std::vector<int> Tree::distances(int source) const {
  std::vector<int> d(vertex_count(), -1);
  std::vector<int> queue{source};
  d[source] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int u : nb_[v]) {
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return d;
}

CentroidInfo Tree::centroids() const {
  const int count = vertex_count();
  std::vector<long> size(count, 1), depth(count, 0), phi(count, 0);
  for (int v = 1; v < count; ++v) depth[v] = depth[parent_[v]] + 1;
  for (int v = count - 1; v > 0; --v) size[parent_[v]] += size[v];
  for (int v = 0; v < count; ++v) phi[0] += depth[v];
  for (int v = 1; v < count; ++v)
    phi[v] = phi[parent_[v]] + count - 2 * size[v];
  CentroidInfo info;
  info.potential = *std::min_element(phi.begin(), phi.end());
  for (int v = 0; v < count; ++v)
    if (phi[v] == info.potential) info.centroids.push_back(v);
  return info;
}

std::vector<int> Tree::path(int a, int c) const {
  std::vector<int> toward(vertex_count(), -2);
  std::vector<int> queue{c};
  toward[c] = -1;
  for (std::size_t h = 0; h < queue.size() && toward[a] == -2; ++h) {
    int v = queue[h];
    for (int u : nb_[v]) {
      if (toward[u] == -2) {
        toward[u] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> p{a};
  while (p.back() != c) p.push_back(toward[p.back()]);
  return p;
}

PlaneTree canonical_plane(std::string_view w) {
  PlaneTree pt;
  pt.canonical = canonical_word(w);
  pt.lambda = lambda_of(w);
  CentroidInfo info = Tree(pt.canonical).centroids();
  pt.centroids = info.centroids;
  pt.potential = info.potential;
  return pt;
}

CentroidInfo centroid_and_potential(std::string_view w) {
  return Tree(w).centroids();
}

std::vector<std::string> subtrees_at(const Tree& t, int c) {
  std::vector<std::string> words;
  const auto& nb = t.neighbors(c);
  for (auto it = nb.rbegin(); it != nb.rend(); ++it)
    words.push_back(t.subtree(c, *it));
  std::vector<int> key;
  std::vector<int> owner;
  for (std::size_t i = 0; i < words.size(); ++i) {
    key.push_back(-1);
    owner.push_back(static_cast<int>(i));
    for (char ch : words[i]) {
      key.push_back(ch - '0');
      owner.push_back(-1);
    }
  }
  if (key.empty()) return words;
  std::size_t r = least_rotation(key);
  int first = owner[r];
  std::rotate(words.begin(), words.begin() + first, words.end());
  return words;
}

LeafContext leaf_flags(const Tree& t, int c, int a) {
  if (!t.is_leaf(a)) throw std::invalid_argument("leaf_flags: not a leaf");
  if (a == c) throw std::invalid_argument("leaf_flags: leaf equals centroid");
  LeafContext ctx;
  ctx.centroid = c;
  ctx.leaf = a;
  ctx.path = t.path(a, c);
  const int d = static_cast<int>(ctx.path.size()) - 1;
  ctx.thin = t.degree(t.neighbors(a)[0]) <= 2;
  if (d >= 2) {
    const int p1 = ctx.path[1], p2 = ctx.path[2];
    ctx.pullable_to = t.clockwise_next(p1, p2) == a;
    ctx.pushable_to = t.clockwise_next(p1, a) == p2;
    ctx.pullable_from = !ctx.pullable_to;
    ctx.pushable_from = !ctx.pushable_to;
  } else {
    const bool c_inner = !t.is_leaf(c);
    ctx.pullable_from = c_inner;
    ctx.pushable_from = c_inner;
  }
  return ctx;
}

bool is_pullable(std::string_view x) {
  if (x.size() < 4 || !x.ends_with("011") || !is_dyck(x)) return false;
  auto [u, v] = decompose_u0v1(x);
  return v.size() >= 2 && v.ends_with("01");
}

bool is_pushable(std::string_view y) {
  if (y.size() < 4 || !y.ends_with("101") || !is_dyck(y)) return false;
  return is_dyck(y.substr(0, y.size() - 2));
}

std::string pull(std::string_view x) {
  if (!is_pullable(x))
    throw std::invalid_argument("pull: word is not of the form u0v011: " +
                                std::string(x));
  return std::string(x.substr(0, x.size() - 3)) + "101";
}

std::string push(std::string_view y) {
  if (!is_pushable(y))
    throw std::invalid_argument("push: word is not of the form u0v101: " +
                                std::string(y));
  return std::string(y.substr(0, y.size() - 3)) + "011";
}

std::string root_for_pull(const Tree& t, int c, int a) {
  std::vector<int> p = t.path(a, c);
  if (p.size() < 3) throw std::invalid_argument("leaf too close to centroid");
  std::string x = t.rooted(p[2], p[1]);
  if (!is_pullable(x))
    throw std::invalid_argument("leaf is not pullable to the centroid");
  return x;
}

std::string root_for_push(const Tree& t, int c, int a) {
  std::vector<int> p = t.path(a, c);
  if (p.size() < 3) throw std::invalid_argument("leaf too close to centroid");
  std::string y = t.rooted(p[1], a);
  if (!is_pushable(y))
    throw std::invalid_argument("leaf is not pushable to the centroid");
  return y;
}

std::string star(int n) {
  if (n < 1) throw std::out_of_range("star needs n >= 1");
  std::string s = "0";
  for (int i = 1; i < n; ++i) s += "01";
  return s + "1";
}

std::string footed_star(int n) {
  if (n < 2) throw std::out_of_range("footed star needs n >= 2");
  return "01" + star(n - 1);
}

std::string dumbbell(int n) {
  if (n < 5 || n % 2 == 0) throw std::out_of_range("dumbbell needs odd n >= 5");
  std::string half;
  for (int i = 0; i < (n - 1) / 2; ++i) half += "01";
  return half + "0" + half + "1";
}

std::string dumbbell_prime(int n) { return rho_pow(dumbbell(n), -2); }

const std::string& q_word(int j) {
  static const std::array<std::string, 10> q = {
      "01",         "0011",       "001011",     "00100111",   "00101011",
      "0010010111", "0010100111", "0001100111", "0001101011", "0010101011"};
  if (j < 0 || j > 9) throw std::out_of_range("q index must be 0..9");
  return q[j];
}

}  // namespace stargray
