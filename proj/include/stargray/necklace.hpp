#ifndef STARGRAY_NECKLACE_HPP
#define STARGRAY_NECKLACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stargray/bitstring.hpp"

namespace stargray {

// The flip bijection on middle-levels vertices and its inverse.
Bitstring f(const Bitstring& x);
Bitstring f(const MiddleVertex& x);
Bitstring f_inv(const Bitstring& x);
Bitstring f_inv(const MiddleVertex& x);

// True when a and b are rotations of each other.
bool same_necklace(const Bitstring& a, const Bitstring& b);

// Flip positions are 1-based, in 1..modulus. Replaying the entries from x
// ends at a vertex z with x = rotate(z, shift).
struct FlipSequence {
  std::vector<int> entries;
  int shift = 0;
  int modulus = 1;
};

struct PeriodicPath {
  std::vector<Bitstring> vertices;
  FlipSequence flips;
  int kappa = 0;
};

int kappa(const Bitstring& x);
PeriodicPath periodic_path(const Bitstring& x);
FlipSequence flip_seq(const Bitstring& x);

// Sequence operations on flip sequences. rev runs the path backwards from
// the same start vertex; mov starts one vertex later; add rotates the start.
FlipSequence rev(const FlipSequence& a);
FlipSequence mov(const FlipSequence& a);
FlipSequence add(const FlipSequence& a, int i);

// Position arithmetic mod m with representatives 1..m.
int wrap_position(long p, int m);

// Replays 1-based flips from start, returning every vertex including start
// and the final one.
std::vector<Bitstring> replay(const Bitstring& start,
                              const std::vector<int>& flips);

// Shift of a flip sequence started at x, or nothing when the end vertex is
// not a rotation of x.
std::optional<int> measure_shift(const Bitstring& start,
                                 const std::vector<int>& flips);

struct FactorCycle {
  int lambda = 0;
  std::vector<Bitstring> vertices;  // the periodic path of 0 + tree
};

// One cycle per plane tree, keyed by canonical Dyck word.
std::map<std::string, FactorCycle> cycle_factor(int n);

}  // namespace stargray

#endif
