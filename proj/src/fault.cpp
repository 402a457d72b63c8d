#include "stargray/fault.hpp"

#include <atomic>

namespace stargray::fault {

namespace {
std::atomic<Kind> current{Kind::none};
}

Kind active() { return current.load(std::memory_order_relaxed); }

void inject(Kind k) { current.store(k, std::memory_order_relaxed); }

}  // namespace stargray::fault
