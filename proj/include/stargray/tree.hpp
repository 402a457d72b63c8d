#ifndef STARGRAY_TREE_HPP
#define STARGRAY_TREE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace stargray {

// rho(u0v1) = 0u1v; rho_inv(0u1v) = u0v1.
std::string rho(std::string_view w);
std::string rho_inv(std::string_view w);
std::string rho_pow(std::string_view w, long k);

// Least i >= 1 with rho^i(w) = w.
int lambda_of(std::string_view w);

// Lexicographically least word in the rho-orbit of w.
std::string canonical_word(std::string_view w);

// All Dyck words with n up-steps, in lexicographic order.
std::vector<std::string> dyck_words(int n);

// Canonical words of all plane trees with n edges, sorted.
std::vector<std::string> plane_trees(int n);

// Start index of the lexicographically least rotation of s (Booth).
std::size_t least_rotation(const std::vector<int>& s);

struct CentroidInfo {
  std::vector<int> centroids;  // one, or two adjacent vertices
  long potential = 0;          // sum of distances from a centroid
};

// An ordered tree read from a Dyck word. Vertex 0 is the root; vertices are
// numbered in the order their down-steps appear. Around every vertex the
// neighbours are kept in word order: children left to right, then the
// parent. Clockwise order is the reverse of word order.
class Tree {
 public:
  explicit Tree(std::string_view dyck);

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& neighbors(int v) const { return nb_[v]; }
  int degree(int v) const { return static_cast<int>(nb_[v].size()); }
  bool is_leaf(int v) const { return degree(v) == 1; }

  // Index of neighbour u in neighbors(v).
  int index_of(int v, int u) const;
  // Neighbour following u around v in clockwise order.
  int clockwise_next(int v, int u) const;

  // Word of the component containing v once the edge to `from` is removed,
  // with v as root and its children read cyclically after `from`.
  // from = -1 serializes the whole tree from v in stored order.
  std::string branch(int v, int from) const;
  // T^(a,b): rooted at a, neighbour b last.
  std::string rooted(int a, int b) const;
  // The c-subtree through neighbour b of c.
  std::string subtree(int c, int b) const;

  std::vector<int> distances(int source) const;
  CentroidInfo centroids() const;
  // Vertices on the path a = p^0, p^1, ..., p^d = c.
  std::vector<int> path(int a, int c) const;

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;  // position among the parent's children
  std::vector<std::vector<int>> nb_;
};

struct PlaneTree {
  std::string canonical;
  int lambda = 0;
  std::vector<int> centroids;  // vertex ids within Tree(canonical)
  long potential = 0;
};

PlaneTree canonical_plane(std::string_view w);

CentroidInfo centroid_and_potential(std::string_view w);

// Subtrees around c in clockwise order, rotated to the lexicographically
// least arrangement.
std::vector<std::string> subtrees_at(const Tree& t, int c);

struct LeafContext {
  int centroid = -1;
  int leaf = -1;
  std::vector<int> path;  // leaf to centroid
  bool thin = false;
  bool pullable_to = false;
  bool pushable_to = false;
  bool pullable_from = false;
  bool pushable_from = false;
};

LeafContext leaf_flags(const Tree& t, int c, int a);

// x = u0v011 and y = u0v101 with u, v Dyck words.
bool is_pullable(std::string_view x);
bool is_pushable(std::string_view y);
std::string pull(std::string_view x);
std::string push(std::string_view y);

// x(T,c,a) = T^(p^2, p^1) and y[T,c,a] = T^(p^1, a).
std::string root_for_pull(const Tree& t, int c, int a);
std::string root_for_push(const Tree& t, int c, int a);

std::string star(int n);
std::string footed_star(int n);
std::string dumbbell(int n);
std::string dumbbell_prime(int n);
// q_0 .. q_9.
const std::string& q_word(int j);

}  // namespace stargray

#endif
