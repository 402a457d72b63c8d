#ifndef STARGRAY_SWITCHES_HPP
#define STARGRAY_SWITCHES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stargray/bitstring.hpp"
#include "stargray/gluing.hpp"
#include "stargray/necklace.hpp"

namespace stargray {

// Positions s, s+d, s+2d, ... (representatives 1..2n+1) up to the first
// repetition.
std::vector<int> orbit(int s, int d, int n);

enum class SwitchKind { tau1, tau2, tau_dz };

// A triple (x, y, y') where x differs from y and from y' in one bit and
// y = rotate(y', shift).
struct Switch {
  Bitstring x, y, y_prime;
  int shift = 0;
  bool f_conformal = false;     // f(x) = y or f(y') = x
  bool finv_conformal = false;  // f(x) = y' or f(y) = x
  Bitstring tail, head;         // the f-edge: f(tail) = head
};

class SwitchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Switch validate_switch(const Bitstring& x, const Bitstring& y,
                       const Bitstring& y_prime);

Switch tau_1(int n);
Switch tau_2(int n);
// z defaults to 0^((d-1)/2) 1^((d-1)/2).
Switch tau_dz(int n, int d, std::optional<std::string> z = std::nullopt);

Switch rotate_switch(const Switch& t, long i);
// (x, y', y), with the negated shift.
Switch reverse_switch(const Switch& t);

struct SwitchFlags {
  bool usable = false;
  bool reversed = false;
};

// Usable when the f-edge of t is no f-edge of a rotated gluing hexagon;
// reversed when it lies on a reversed hexagon segment.
SwitchFlags usable_and_reversed(const Switch& t, const GluingMembership& g);

// Shift change contributed by t when its f-edge is traversed along the
// glued cycle.
int effective_sign(const Switch& t, const GluingMembership& g);

// Replaces the first traversal of a rotated copy of an edge of t along the
// path started at `start` with the other half of the switch. Throws when no
// such edge occurs.
FlipSequence apply_switch(const FlipSequence& alpha, const Bitstring& start,
                          const Switch& t);

// Distinct prime factors in increasing order.
std::vector<int> prime_set(long m);
// Primes of m that do not divide s; empty for s = 0.
std::vector<int> relative_prime_set(long m, long s);

struct PlanEntry {
  SwitchKind kind = SwitchKind::tau1;
  int d = 1;     // shift of the switch
  int sign = 1;  // effective sign
};

struct ShiftPlan {
  int n = 0;
  int base = 0;
  std::vector<PlanEntry> entries;
  int result = 0;
};

ShiftPlan plan_shift_fix(int n, int s);
Switch make_switch(int n, const PlanEntry& e);
std::string explain(const ShiftPlan& p);
std::string kind_name(SwitchKind k);

}  // namespace stargray

#endif
