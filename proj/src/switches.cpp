#include "stargray/switches.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stargray/tree.hpp"

namespace stargray {

std::vector<int> orbit(int s, int d, int n) {
  if (d < 1 || s < 1 || s > d) throw std::invalid_argument("orbit needs 1 <= s <= d");
  const int m = 2 * n + 1;
  const int len = m / std::gcd(m, d);
  std::vector<int> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i)
    out.push_back(wrap_position(static_cast<long>(s) + static_cast<long>(i) * d, m));
  return out;
}

namespace {

bool middle_weight(const Bitstring& b) {
  const std::size_t n = b.size() / 2;
  return b.size() % 2 == 1 && (b.weight() == n || b.weight() == n + 1);
}

// r with rotate(from, r) == to, if any.
std::optional<long> rotation_between(const Bitstring& from, const Bitstring& to) {
  if (from.size() != to.size() || from.weight() != to.weight() ||
      !middle_weight(from))
    return std::nullopt;
  MiddleVertex a = dyck_align(from), b = dyck_align(to);
  if (a.dyck != b.dyck) return std::nullopt;
  const long m = static_cast<long>(from.size());
  return ((a.ell - b.ell) % m + m) % m;
}

}  // namespace

Switch validate_switch(const Bitstring& x, const Bitstring& y,
                       const Bitstring& y_prime) {
  if (x.size() != y.size() || x.size() != y_prime.size())
    throw SwitchError("switch words differ in length");
  if (x.size() % 2 == 0 || x.size() < 3)
    throw SwitchError("switch words need odd length 2n+1");
  if (x.single_difference(y) < 0)
    throw SwitchError("x and y must differ in exactly one bit");
  if (x.single_difference(y_prime) < 0)
    throw SwitchError("x and y' must differ in exactly one bit");
  if (y == y_prime) throw SwitchError("y and y' must be different");
  if (!middle_weight(x) || !middle_weight(y))
    throw SwitchError("switch words must lie on the middle levels");
  auto r = rotation_between(y_prime, y);
  if (!r) throw SwitchError("y and y' lie in different necklaces");
  Switch t;
  t.x = x;
  t.y = y;
  t.y_prime = y_prime;
  t.shift = static_cast<int>(*r);
  if (f(x) == y) {
    t.f_conformal = true;
    t.tail = x;
    t.head = y;
  } else if (f(y_prime) == x) {
    t.f_conformal = true;
    t.tail = y_prime;
    t.head = x;
  }
  if (f(x) == y_prime) {
    t.finv_conformal = true;
    t.tail = x;
    t.head = y_prime;
  } else if (f(y) == x) {
    t.finv_conformal = true;
    t.tail = y;
    t.head = x;
  }
  return t;
}

namespace {

Switch checked(Switch t, int shift, const char* what) {
  const int m = static_cast<int>(t.x.size());
  if (t.shift != ((shift % m) + m) % m)
    throw SwitchError(std::string(what) + " has the wrong shift");
  if (t.f_conformal == t.finv_conformal)
    throw SwitchError(std::string(what) + " is not conformal");
  return t;
}

}  // namespace

Switch tau_1(int n) {
  if (n < 1) throw std::out_of_range("tau_1 needs n >= 1");
  Bitstring x(std::string(n + 1, '0') + std::string(n, '1'));
  return checked(validate_switch(x, x.flipped(0), x.flipped(n)), 1, "tau_1");
}

Switch tau_2(int n) {
  if (n < 4) throw std::out_of_range("tau_2 needs n >= 4");
  std::string w = "001";
  for (int i = 1; i < n; ++i) w += "01";
  Bitstring x(w);
  return checked(validate_switch(x, x.flipped(1), x.flipped(0)), 2, "tau_2");
}

Switch tau_dz(int n, int d, std::optional<std::string> z) {
  const int m = 2 * n + 1;
  if (n < 4) throw std::out_of_range("tau_dz needs n >= 4");
  if (d < 3 || d > n || m % d != 0)
    throw std::out_of_range("tau_dz needs 3 <= d <= n dividing 2n+1");
  const int half = (d - 1) / 2;
  std::string zz = z ? *z : std::string(half, '0') + std::string(half, '1');
  if (static_cast<int>(zz.size()) != d - 1 ||
      std::count(zz.begin(), zz.end(), '1') != half)
    throw std::invalid_argument("z needs length d-1 and weight (d-1)/2");
  const int c = m / d;
  std::string w = zz + '0';
  for (int i = 0; i < (c - 3) / 2; ++i) w += zz + '0';
  w += zz + '0';
  for (int i = 0; i < (c - 1) / 2; ++i) w += zz + '1';
  Bitstring x(w);
  const std::size_t under = zz.size();
  const std::size_t over = zz.size() + 1 + static_cast<std::size_t>((c - 3) / 2) * d + zz.size();
  try {
    return checked(validate_switch(x, x.flipped(under), x.flipped(over)), d,
                   "tau_dz");
  } catch (const SwitchError&) {
  }
  // Other readings of the marked positions: any two block separators.
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      const std::size_t a = zz.size() + static_cast<std::size_t>(i) * d;
      const std::size_t b = zz.size() + static_cast<std::size_t>(j) * d;
      if (i == j || w[a] != '0' || w[b] != '0') continue;
      try {
        return checked(validate_switch(x, x.flipped(a), x.flipped(b)), d,
                       "tau_dz");
      } catch (const SwitchError&) {
      }
    }
  }
  throw SwitchError("no switch with shift d in the tau_dz skeleton");
}

Switch rotate_switch(const Switch& t, long i) {
  return validate_switch(rotate(t.x, i), rotate(t.y, i), rotate(t.y_prime, i));
}

Switch reverse_switch(const Switch& t) {
  return validate_switch(t.x, t.y_prime, t.y);
}

SwitchFlags usable_and_reversed(const Switch& t, const GluingMembership& g) {
  SwitchFlags fl;
  if (t.tail.empty()) return fl;
  const RoleSet r = roles(dyck_align(t.tail), g);
  const RoleSet blocked =
      role_bit(Role::x0) | role_bit(Role::x5) | role_bit(Role::y0);
  const RoleSet inside = role_bit(Role::x1) | role_bit(Role::x2) |
                         role_bit(Role::x3) | role_bit(Role::x4);
  fl.usable = (r & blocked) == 0;
  fl.reversed = (r & inside) != 0;
  return fl;
}

int effective_sign(const Switch& t, const GluingMembership& g) {
  const SwitchFlags fl = usable_and_reversed(t, g);
  return (t.finv_conformal ? -1 : 1) * (fl.reversed ? -1 : 1);
}

FlipSequence apply_switch(const FlipSequence& alpha, const Bitstring& start,
                          const Switch& t) {
  const int m = alpha.modulus;
  if (static_cast<int>(start.size()) != m)
    throw std::invalid_argument("start does not match the flip sequence");
  Bitstring v = start;
  for (std::size_t i = 0; i < alpha.entries.size(); ++i) {
    Bitstring nv = v.flipped(alpha.entries[i] - 1);
    long delta = 0;
    bool hit = false;
    if (auto r = rotation_between(t.x, v)) {
      if (rotate(t.y, *r) == nv) {
        delta = -t.shift;
        hit = true;
      } else if (rotate(t.y_prime, *r) == nv) {
        delta = t.shift;
        hit = true;
      }
    }
    if (!hit) {
      if (auto r = rotation_between(t.x, nv)) {
        if (rotate(t.y, *r) == v) {
          delta = t.shift;
          hit = true;
        } else if (rotate(t.y_prime, *r) == v) {
          delta = -t.shift;
          hit = true;
        }
      }
    }
    if (hit) {
      FlipSequence out;
      out.modulus = m;
      out.entries.assign(alpha.entries.begin(), alpha.entries.begin() + i);
      Bitstring replaced = rotate(nv, delta);
      out.entries.push_back(static_cast<int>(v.single_difference(replaced)) + 1);
      for (std::size_t j = i + 1; j < alpha.entries.size(); ++j)
        out.entries.push_back(wrap_position(alpha.entries[j] + delta, m));
      out.shift = static_cast<int>((((alpha.shift - delta) % m) + m) % m);
      return out;
    }
    v = std::move(nv);
  }
  throw std::invalid_argument("no edge of the switch occurs on the path");
}

std::vector<int> prime_set(long m) {
  std::vector<int> out;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    out.push_back(static_cast<int>(p));
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(static_cast<int>(m));
  return out;
}

std::vector<int> relative_prime_set(long m, long s) {
  std::vector<int> out;
  if (s == 0) return out;
  for (int p : prime_set(m))
    if (s % p != 0) out.push_back(p);
  return out;
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

int product(const std::vector<int>& ps) {
  long d = 1;
  for (int p : ps) d *= p;
  return static_cast<int>(d);
}

}  // namespace

ShiftPlan plan_shift_fix(int n, int s) {
  const int m = 2 * n + 1;
  ShiftPlan plan;
  plan.n = n;
  plan.base = static_cast<int>(mod(s, m));
  plan.result = plan.base;
  auto coprime = [m](long v) { return std::gcd(mod(v, m), static_cast<long>(m)) == 1; };
  if (coprime(plan.base)) return plan;
  if (n < 4) throw std::out_of_range("shift fixing needs n >= 4");
  const PlanEntry t1{SwitchKind::tau1, 1, +1}, t2{SwitchKind::tau2, 2, +1};
  const std::vector<int> primes = prime_set(m);
  if (n <= 10) {
    if (coprime(plan.base + 1)) {
      plan.entries = {t1};
    } else if (coprime(plan.base + 2)) {
      plan.entries = {t2};
    } else {
      plan.entries = {t1, t2};
    }
  } else if (primes.size() == 1) {
    plan.entries = {t1};
  } else {
    std::vector<int> rel = relative_prime_set(m, plan.base);
    if (!rel.empty()) {
      plan.entries = {{SwitchKind::tau_dz, product(rel), -1}};
    } else {
      const int d = primes.front();
      const int d2 = product(relative_prime_set(m, mod(plan.base - d, m)));
      plan.entries = {{SwitchKind::tau_dz, d, -1}, {SwitchKind::tau_dz, d2, -1}};
    }
  }
  long r = plan.base;
  for (const auto& e : plan.entries) r += static_cast<long>(e.sign) * e.d;
  plan.result = static_cast<int>(mod(r, m));
  return plan;
}

Switch make_switch(int n, const PlanEntry& e) {
  switch (e.kind) {
    case SwitchKind::tau1:
      return tau_1(n);
    case SwitchKind::tau2:
      return tau_2(n);
    case SwitchKind::tau_dz:
      return tau_dz(n, e.d);
  }
  throw std::logic_error("unknown switch kind");
}

std::string kind_name(SwitchKind k) {
  switch (k) {
    case SwitchKind::tau1:
      return "tau1";
    case SwitchKind::tau2:
      return "tau2";
    case SwitchKind::tau_dz:
      return "tau_dz";
  }
  return "?";
}

std::string explain(const ShiftPlan& p) {
  std::ostringstream out;
  const int m = 2 * p.n + 1;
  out << "n = " << p.n << ", 2n+1 = " << m << ", base shift " << p.base
      << " (gcd " << std::gcd(p.base, m) << ")\n";
  if (p.entries.empty()) out << "no switch needed\n";
  for (const auto& e : p.entries)
    out << "apply " << kind_name(e.kind) << " with d = " << e.d << ", sign "
        << (e.sign > 0 ? "+" : "-") << "\n";
  out << "resulting shift " << p.result << " (gcd " << std::gcd(p.result, m)
      << ")\n";
  return out.str();
}

}  // namespace stargray
