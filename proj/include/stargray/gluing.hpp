#ifndef STARGRAY_GLUING_HPP
#define STARGRAY_GLUING_HPP

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stargray/bitstring.hpp"
#include "stargray/necklace.hpp"

namespace stargray {

struct GluingPair {
  std::string x;  // u0v011
  std::string y;  // u0v101
  std::string u, v;
};

GluingPair make_gluing_pair(std::string_view x);

// Every gluing pair with n edges, ordered by x.
std::vector<GluingPair> gluing_pairs(int n);

// The nine vertices of the hexagon of a pair in the base frame:
// x[0..6] follow the path of 0x, y0 = 0y and y1 = f(y0).
struct Hexagon {
  std::array<Bitstring, 7> x;
  Bitstring y0, y1;
  int p1 = 0, p2 = 0, p3 = 0;  // 1-based flip positions |u|+2, m-2, m-1
};

Hexagon hexagon(const GluingPair& p);

// The six-cycle (x0, y1, y0, x5, x6, x1) rotated by i, with the flip taken
// to reach each next vertex (cyclically).
struct GluingCycle {
  std::array<Bitstring, 6> vertices;
  std::array<int, 6> flips{};
  int rotation = 0;
};

GluingCycle gluing_cycle(const GluingPair& p, int i);

// Decides which rooted trees take part in gluing.
class GluingMembership {
 public:
  virtual ~GluingMembership() = default;
  // w is the x of a selected pair.
  virtual bool in_x(std::string_view w) const = 0;
  // w is the y of a selected pair.
  virtual bool in_y(std::string_view w) const = 0;
};

class ExplicitGluingSet : public GluingMembership {
 public:
  ExplicitGluingSet() = default;
  explicit ExplicitGluingSet(const std::vector<GluingPair>& pairs);
  void insert(const GluingPair& p);
  bool in_x(std::string_view w) const override;
  bool in_y(std::string_view w) const override;

 private:
  std::set<std::string, std::less<>> xs_, ys_;
};

// Positions of a vertex inside the rotated hexagons of the gluing set.
enum class Role { x0, x1, x2, x3, x4, x5, x6, y0, y1 };
constexpr int kRoleCount = 9;
using RoleSet = unsigned;
constexpr RoleSet role_bit(Role r) { return 1u << static_cast<unsigned>(r); }

RoleSet roles(const MiddleVertex& v, const GluingMembership& g);

// One step along the glued two-factor. `forward` follows f outside the
// reversed hexagon segments and is updated in place.
Bitstring glued_step(const MiddleVertex& v, bool& forward,
                     const GluingMembership& g);

// Orientation at v that agrees with the rest of the glued cycle.
bool positive_direction(const MiddleVertex& v, const GluingMembership& g);

// The grafted periodic path starting at 0x and continuing to 0u0v111.
PeriodicPath graft(const GluingPair& p);

struct Relation {
  bool compatible = true;
  bool nested = false;
  bool interleaved = false;
  bool nested_algebraic = false;
  bool interleaved_algebraic = false;
  bool agree() const {
    return nested == nested_algebraic && interleaved == interleaved_algebraic;
  }
};

// Relation between the cycle of p rotated by i and that of q rotated by j.
Relation relation(const GluingPair& p, int i, const GluingPair& q, int j);

}  // namespace stargray

#endif
