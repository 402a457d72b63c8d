#ifndef STARGRAY_VERIFIER_HPP
#define STARGRAY_VERIFIER_HPP

#include <string>
#include <vector>

#include "stargray/bitstring.hpp"

namespace stargray::verify {

struct Certificate {
  std::string claim;
  int n = 0;
  bool pass = false;
  std::string counterexample;  // empty on success
};

struct GraphSnapshot {
  int n = 0;
  std::vector<Bitstring> vertices;           // sorted
  std::vector<std::vector<int>> adjacency;   // indices into vertices
  std::size_t index(const Bitstring& v) const;  // vertices.size() if absent
};

// The middle-levels graph (n <= 7) and its necklace quotient (n <= 9).
GraphSnapshot build_M(int n);
GraphSnapshot build_N(int n);

// Every combination of length 2n+2 and weight n+1 exactly once, cyclically
// linked by star transpositions.
Certificate certify_hamilton(const std::vector<Bitstring>& stream, int n);

// The stream without its first bit is a closed spanning walk of g.
Certificate certify_walk(const std::vector<Bitstring>& stream,
                         const GraphSnapshot& g);

// The flips split into 2n+1 blocks of length 2C_n with block i equal to
// block 0 plus i*s (representatives 1..2n+1).
Certificate certify_blocks(const std::vector<int>& flips, int n, long s);

// Structural claims checked exhaustively at the sizes where they apply.
std::vector<Certificate> lemma_suite(int n);

// Generator streams for every target shift (n <= 6) or one shift.
std::vector<Certificate> hamilton_suite(int n);

std::string to_json(const std::vector<Certificate>& certs);

}  // namespace stargray::verify

#endif
