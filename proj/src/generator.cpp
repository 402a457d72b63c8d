#include "stargray/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stargray {

long catalan_mod(int n, long m) {
  if (n < 0 || m < 1) throw std::invalid_argument("catalan_mod needs n >= 0, m >= 1");
  std::vector<long> c(n + 1, 0);
  c[0] = 1 % m;
  for (int k = 1; k <= n; ++k) {
    long s = 0;
    for (int i = 0; i < k; ++i) s = (s + c[i] * c[k - 1 - i]) % m;
    c[k] = s;
  }
  return c[n];
}

BaseBlock base_block(int n) {
  auto digits = [](std::string_view s) {
    std::vector<int> out;
    for (char ch : s) out.push_back(ch - '0');
    return out;
  };
  switch (n) {
    case 1:
      return {Bitstring("010"), digits("32")};
    case 2:
      return {Bitstring("00011"), digits("1531")};
    case 3:
      return {Bitstring("0000111"), digits("2635426753")};
    default:
      throw std::out_of_range("fixed blocks exist for n = 1, 2, 3");
  }
}

int base_shift(int n) {
  if (n < 1) throw std::out_of_range("base_shift needs n >= 1");
  if (n <= 3) {
    BaseBlock b = base_block(n);
    auto s = measure_shift(b.start, b.flips);
    if (!s) throw std::logic_error("fixed block does not return to its necklace");
    return *s;
  }
  return static_cast<int>(catalan_mod(n, 2L * n + 1));
}

std::optional<std::uint64_t> combination_count(int n) {
  if (n < 0) return std::nullopt;
  unsigned __int128 c = 1;
  const int top = 2 * n + 2, k = n + 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (top - k + i) / i;
    if (c > ~std::uint64_t{0}) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = ((a % m) + m) % m;
  while (r != 0) {
    long q = g / r;
    long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::invalid_argument("value is not invertible");
  return ((x % m) + m) % m;
}

FlipSequence scale_sequence(const FlipSequence& alpha, long s, long s_target) {
  const int m = alpha.modulus;
  if (std::gcd(((s_target % m) + m) % m, static_cast<long>(m)) != 1)
    throw std::invalid_argument("target shift is not invertible");
  const long k = inverse_mod(s, m) * (((s_target % m) + m) % m) % m;
  FlipSequence out;
  out.modulus = m;
  out.shift = static_cast<int>(((s_target % m) + m) % m);
  for (int e : alpha.entries) out.entries.push_back(wrap_position(k * e, m));
  return out;
}

Generator::~Generator() = default;
Generator::Generator(Generator&&) noexcept = default;
Generator& Generator::operator=(Generator&&) noexcept = default;

Generator::Generator(int n, long target_shift,
                     std::optional<Bitstring> start_combination,
                     std::optional<ShiftPlan> plan)
    : n_(n), m_(2 * n + 1) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  target_ = static_cast<int>(((target_shift % m_) + m_) % m_);
  if (std::gcd(target_, m_) != 1)
    throw std::invalid_argument("shift must be coprime to 2n+1");
  total_ = combination_count(n);

  const int base = base_shift(n);
  if (n >= 4) {
    plan_ = plan ? *plan : plan_shift_fix(n, base);
    if (plan_.base != base || std::gcd(plan_.result, m_) != 1)
      throw std::invalid_argument("plan does not fix the base shift");
    rules_ = std::make_unique<SpanningRules>(n);
    for (const auto& e : plan_.entries) {
      Switch sw = make_switch(n, e);
      const SwitchFlags fl = usable_and_reversed(sw, *rules_);
      if (!fl.usable || effective_sign(sw, *rules_) != e.sign)
        throw std::logic_error("planned switch does not fit the glued cycle");
      MiddleVertex ax = dyck_align(sw.x);
      sites_.push_back({std::move(sw), std::move(ax)});
    }
  } else {
    plan_.n = n;
    plan_.base = plan_.result = base;
  }
  scale_ = static_cast<int>(inverse_mod(plan_.result, m_) * target_ % m_);

  // Internal vertices are mapped to output words by moving the bit at
  // position i to position scale * i.
  auto to_output = [&](const Bitstring& v) {
    Bitstring out(v.size());
    for (int i = 1; i <= m_; ++i)
      out.set(wrap_position(static_cast<long>(scale_) * i, m_) - 1, v.test(i - 1));
    return out;
  };
  auto from_output = [&](const Bitstring& w) {
    Bitstring out(w.size());
    for (int i = 1; i <= m_; ++i)
      out.set(i - 1, w.test(wrap_position(static_cast<long>(scale_) * i, m_) - 1));
    return out;
  };

  Bitstring start;
  if (start_combination) {
    const Bitstring& c = *start_combination;
    if (c.size() != static_cast<std::size_t>(m_ + 1) ||
        c.weight() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("start combination needs length 2n+2 and weight n+1");
    Bitstring tail(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) tail.set(i, c.test(i + 1));
    start = from_output(tail);
  } else if (n <= 3) {
    start = base_block(n).start;
  } else {
    start = Bitstring(std::string(n + 1, '0') + std::string(n, '1'));
  }

  if (n >= 4) {
    current_ = dyck_align(start);
    forward_ = positive_direction(current_, *rules_);
  } else {
    BaseBlock b = base_block(n);
    const int lambda = base;
    std::vector<int> flips;
    for (int i = 0; i < m_; ++i)
      for (int e : b.flips) flips.push_back(wrap_position(e - static_cast<long>(i) * lambda, m_));
    std::vector<Bitstring> verts = replay(b.start, flips);
    verts.pop_back();
    auto it = std::find(verts.begin(), verts.end(), start);
    if (it == verts.end()) throw std::logic_error("start is not on the fixed cycle");
    const auto off = it - verts.begin();
    cycle_.assign(flips.begin() + off, flips.end());
    cycle_.insert(cycle_.end(), flips.begin(), flips.begin() + off);
  }

  Bitstring out = to_output(start);
  combination_ = Bitstring(static_cast<std::size_t>(m_ + 1));
  combination_.set(0, out.weight() == static_cast<std::size_t>(n));
  for (int i = 0; i < m_; ++i) combination_.set(i + 1, out.test(i));
}

Bitstring Generator::internal_step(long& position) {
  Bitstring nv = glued_step(current_, forward_, *rules_);
  MiddleVertex next = dyck_align(nv);
  for (const auto& s : sites_) {
    long delta = 0;
    if (current_.side == Side::A && current_.dyck == s.x.dyck) {
      const long r = s.x.ell - current_.ell;
      if (nv == rotate(s.sw.y, r))
        delta = -s.sw.shift;
      else if (nv == rotate(s.sw.y_prime, r))
        delta = s.sw.shift;
    } else if (next.side == Side::A && next.dyck == s.x.dyck) {
      const long r = s.x.ell - next.ell;
      if (current_.word == rotate(s.sw.y, r))
        delta = s.sw.shift;
      else if (current_.word == rotate(s.sw.y_prime, r))
        delta = -s.sw.shift;
    }
    if (delta != 0) {
      nv = rotate(nv, delta);
      next = dyck_align(nv);
      break;
    }
  }
  position = current_.word.single_difference(nv) + 1;
  current_ = std::move(next);
  return nv;
}

std::optional<Step> Generator::next() {
  if (exhausted()) return std::nullopt;
  long p;
  if (n_ >= 4) {
    internal_step(p);
    if (p <= 0) throw std::logic_error("glued step did not flip one bit");
  } else {
    p = cycle_[steps_ % cycle_.size()];
  }
  Step s;
  s.flip = wrap_position(static_cast<long>(scale_) * p, m_);
  s.combination = combination_;
  combination_.flip(0);
  combination_.flip(s.flip);
  ++steps_;
  return s;
}

}  // namespace stargray
