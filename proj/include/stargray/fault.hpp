#ifndef STARGRAY_FAULT_HPP
#define STARGRAY_FAULT_HPP

namespace stargray::fault {

// Deliberate defects used to check that the verifier notices broken
// building blocks. Never enabled outside tests.
enum class Kind { none, flip_map, rotation, subtree_rule };

Kind active();
void inject(Kind k);

class Scope {
 public:
  explicit Scope(Kind k) : previous_(active()) { inject(k); }
  ~Scope() { inject(previous_); }
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  Kind previous_;
};

}  // namespace stargray::fault

#endif
