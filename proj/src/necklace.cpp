#include "stargray/necklace.hpp"

#include <algorithm>
#include <stdexcept>

#include "stargray/fault.hpp"
#include "stargray/tree.hpp"

namespace stargray {

Bitstring f(const MiddleVertex& x) {
  if (x.side == Side::A) return rotate(Bitstring(rho(x.dyck) + "1"), -x.ell);
  int ell = x.ell;
  if (fault::active() == fault::Kind::flip_map && ell % 2 == 1) ell += 1;
  return rotate(Bitstring(x.dyck + "0"), -ell);
}

Bitstring f(const Bitstring& x) { return f(dyck_align(x)); }

Bitstring f_inv(const MiddleVertex& x) {
  if (x.side == Side::B)
    return rotate(Bitstring("0" + rho_inv(x.dyck)), -x.ell);
  return rotate(Bitstring(x.dyck + "1"), -(x.ell - 1));
}

Bitstring f_inv(const Bitstring& x) { return f_inv(dyck_align(x)); }

bool same_necklace(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size() || a.weight() != b.weight()) return false;
  MiddleVertex va = dyck_align(a), vb = dyck_align(b);
  return va.dyck == vb.dyck;
}

int wrap_position(long p, int m) {
  long r = (p - 1) % m;
  if (r < 0) r += m;
  return static_cast<int>(r) + 1;
}

std::vector<Bitstring> replay(const Bitstring& start,
                              const std::vector<int>& flips) {
  std::vector<Bitstring> out{start};
  out.reserve(flips.size() + 1);
  Bitstring cur = start;
  for (int p : flips) {
    if (p < 1 || static_cast<std::size_t>(p) > cur.size())
      throw std::out_of_range("flip position out of range");
    cur.flip(p - 1);
    out.push_back(cur);
  }
  return out;
}

std::optional<int> measure_shift(const Bitstring& start,
                                 const std::vector<int>& flips) {
  Bitstring cur = start;
  for (int p : flips) {
    if (p < 1 || static_cast<std::size_t>(p) > cur.size())
      throw std::out_of_range("flip position out of range");
    cur.flip(p - 1);
  }
  const int m = static_cast<int>(start.size());
  const std::size_t n = (start.size() - 1) / 2;
  auto valid = [&](const Bitstring& b) {
    return b.weight() == n || b.weight() == n + 1;
  };
  if (!valid(start) || !valid(cur) || start.weight() != cur.weight())
    return std::nullopt;
  MiddleVertex a = dyck_align(start), z = dyck_align(cur);
  if (a.dyck != z.dyck) return std::nullopt;
  return ((z.ell - a.ell) % m + m) % m;
}

PeriodicPath periodic_path(const Bitstring& x) {
  PeriodicPath p;
  const int m = static_cast<int>(x.size());
  p.flips.modulus = m;
  MiddleVertex start = dyck_align(x);
  Bitstring cur = x;
  while (true) {
    p.vertices.push_back(cur);
    Bitstring next = f(cur);
    long pos = cur.single_difference(next);
    if (pos < 0) throw std::logic_error("f did not flip exactly one bit");
    p.flips.entries.push_back(static_cast<int>(pos) + 1);
    cur = std::move(next);
    MiddleVertex v = dyck_align(cur);
    if (v.side == start.side && v.dyck == start.dyck) {
      p.flips.shift = ((v.ell - start.ell) % m + m) % m;
      break;
    }
    if (p.vertices.size() > static_cast<std::size_t>(4 * m * m))
      throw std::logic_error("periodic path does not close");
  }
  p.kappa = static_cast<int>(p.vertices.size());
  return p;
}

int kappa(const Bitstring& x) { return periodic_path(x).kappa; }

FlipSequence flip_seq(const Bitstring& x) { return periodic_path(x).flips; }

FlipSequence rev(const FlipSequence& a) {
  FlipSequence r;
  r.modulus = a.modulus;
  r.shift = (a.modulus - a.shift) % a.modulus;
  for (auto it = a.entries.rbegin(); it != a.entries.rend(); ++it)
    r.entries.push_back(wrap_position(*it + a.shift, a.modulus));
  return r;
}

FlipSequence mov(const FlipSequence& a) {
  FlipSequence r = a;
  if (a.entries.empty()) return r;
  std::rotate(r.entries.begin(), r.entries.begin() + 1, r.entries.end());
  r.entries.back() = wrap_position(r.entries.back() - a.shift, a.modulus);
  return r;
}

FlipSequence add(const FlipSequence& a, int i) {
  FlipSequence r = a;
  for (int& e : r.entries) e = wrap_position(e + i, a.modulus);
  return r;
}

std::map<std::string, FactorCycle> cycle_factor(int n) {
  if (n < 2) throw std::out_of_range("cycle factor needs n >= 2");
  std::map<std::string, FactorCycle> out;
  for (const auto& t : plane_trees(n)) {
    PeriodicPath p = periodic_path(Bitstring("0" + t));
    FactorCycle c;
    c.lambda = lambda_of(t);
    c.vertices = std::move(p.vertices);
    out.emplace(t, std::move(c));
  }
  return out;
}

}  // namespace stargray
