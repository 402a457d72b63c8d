#ifndef STARGRAY_GENERATOR_HPP
#define STARGRAY_GENERATOR_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "stargray/bitstring.hpp"
#include "stargray/necklace.hpp"
#include "stargray/spanning_tree.hpp"
#include "stargray/switches.hpp"

namespace stargray {

// C_n mod m by Segner's recurrence.
long catalan_mod(int n, long m);

// Shift of the glued cycle before any switch, in 0..2n: C_n mod 2n+1 for
// n >= 4 and the shift of the fixed block for n <= 3.
int base_shift(int n);

// The fixed blocks and their start vertices for n = 1, 2, 3.
struct BaseBlock {
  Bitstring start;
  std::vector<int> flips;
};
BaseBlock base_block(int n);

// C(2n+2, n+1) when it fits in 64 bits.
std::optional<std::uint64_t> combination_count(int n);

long inverse_mod(long a, long m);

// Multiplies every entry by s^-1 * s_target mod 2n+1.
FlipSequence scale_sequence(const FlipSequence& alpha, long s, long s_target);

struct Step {
  int flip = 0;           // position in 1..2n+1; combination position flip+1
  Bitstring combination;  // before the flip
};

// Streams the star-transposition ordering of (n+1, n+1)-combinations whose
// flip sequence has the given shift.
class Generator {
 public:
  Generator(int n, long target_shift,
            std::optional<Bitstring> start_combination = std::nullopt,
            std::optional<ShiftPlan> plan = std::nullopt);
  ~Generator();
  Generator(Generator&&) noexcept;
  Generator& operator=(Generator&&) noexcept;

  int n() const { return n_; }
  int shift() const { return target_; }
  int scale() const { return scale_; }
  const ShiftPlan& plan() const { return plan_; }
  std::optional<std::uint64_t> total() const { return total_; }
  std::uint64_t steps() const { return steps_; }
  bool exhausted() const { return total_ && steps_ >= *total_; }

  // Nothing once every combination has been produced.
  std::optional<Step> next();

 private:
  struct Site {
    Switch sw;
    MiddleVertex x;
  };
  Bitstring internal_step(long& position);

  int n_ = 0, m_ = 0;
  int target_ = 0;
  int scale_ = 1;
  ShiftPlan plan_;
  std::optional<std::uint64_t> total_;
  std::uint64_t steps_ = 0;
  Bitstring combination_;
  // n >= 4
  std::unique_ptr<SpanningRules> rules_;
  std::vector<Site> sites_;
  MiddleVertex current_;
  bool forward_ = true;
  // n <= 3
  std::vector<int> cycle_;
};

}  // namespace stargray

#endif
