#include "stargray/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stargray {

Bitstring::Bitstring(std::size_t length) : size_(length) {
  if (word_count() > kInlineWords) heap_.assign(word_count(), 0);
}

Bitstring::Bitstring(std::string_view bits) : Bitstring(bits.size()) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      flip(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bitstring may only contain '0' and '1': " +
                                  std::string(bits));
    }
  }
}

void Bitstring::set(std::size_t i, bool value) {
  if (test(i) != value) flip(i);
}

Bitstring Bitstring::flipped(std::size_t i) const {
  Bitstring r = *this;
  r.flip(i);
  return r;
}

std::size_t Bitstring::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < word_count(); ++k) w += std::popcount(data()[k]);
  return w;
}

std::string Bitstring::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::size_t Bitstring::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
  for (std::size_t k = 0; k < word_count(); ++k) {
    h ^= data()[k] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

long Bitstring::single_difference(const Bitstring& other) const {
  if (size_ != other.size_) return -1;
  long found = -1;
  for (std::size_t k = 0; k < word_count(); ++k) {
    std::uint64_t d = data()[k] ^ other.data()[k];
    if (d == 0) continue;
    if (found >= 0 || std::popcount(d) != 1) return -1;
    found = static_cast<long>(k * 64 + std::countr_zero(d));
  }
  return found;
}

bool operator==(const Bitstring& a, const Bitstring& b) {
  if (a.size_ != b.size_) return false;
  return std::equal(a.data(), a.data() + a.word_count(), b.data());
}

std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
  std::size_t common = std::min(a.word_count(), b.word_count());
  for (std::size_t k = 0; k < common; ++k) {
    std::uint64_t d = a.data()[k] ^ b.data()[k];
    if (d == 0) continue;
    std::size_t bit = std::countr_zero(d);
    std::size_t pos = k * 64 + bit;
    if (pos >= a.size_ || pos >= b.size_) break;
    return ((a.data()[k] >> bit) & 1u) ? std::strong_ordering::greater
                                        : std::strong_ordering::less;
  }
  return a.size_ <=> b.size_;
}

Bitstring rotate(const Bitstring& x, long i) {
  const long m = static_cast<long>(x.size());
  if (m == 0) return x;
  long r = ((i % m) + m) % m;
  if (r == 0) return x;
  Bitstring out(x.size());
  for (long p = 0; p < m; ++p) {
    if (x.test(p)) out.flip((p + r) % m);
  }
  return out;
}

std::vector<Bitstring> necklace(const Bitstring& x) {
  std::vector<Bitstring> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < std::max<std::size_t>(x.size(), 1); ++i)
    out.push_back(rotate(x, static_cast<long>(i)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bitstring necklace_representative(const Bitstring& x) {
  Bitstring best = x;
  for (std::size_t i = 1; i < x.size(); ++i) {
    Bitstring r = rotate(x, static_cast<long>(i));
    if (r < best) best = std::move(r);
  }
  return best;
}

int deficiency(const Bitstring& x) {
  return static_cast<int>(x.size()) - 2 * static_cast<int>(x.weight());
}

int deficiency(std::string_view w) {
  int d = 0;
  for (char c : w) d += (c == '0') ? 1 : -1;
  return d;
}

bool is_dyck(std::string_view w) {
  int d = 0;
  for (char c : w) {
    if (c == '0') {
      ++d;
    } else if (c == '1') {
      if (--d < 0) return false;
    } else {
      return false;
    }
  }
  return d == 0;
}

bool is_dyck(const Bitstring& x) { return is_dyck(x.str()); }

MiddleVertex dyck_align(const Bitstring& x) {
  const std::size_t m = x.size();
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("middle-levels vertex needs odd length >= 3");
  const std::size_t n = (m - 1) / 2;
  const std::size_t w = x.weight();
  if (w != n && w != n + 1)
    throw std::invalid_argument("middle-levels vertex needs weight n or n+1: " +
                                x.str());
  // Prefix sums of (+1 for '0', -1 for '1'). Side A starts right at the last
  // minimum, side B at the first one.
  const bool side_a = (w == n);
  long sum = 0, best = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (side_a ? sum <= best : sum < best) {
      best = sum;
      start = i;
    }
    sum += x.test(i) ? -1 : 1;
  }
  MiddleVertex v;
  v.word = x;
  v.side = side_a ? Side::A : Side::B;
  v.ell = static_cast<int>((m - start) % m);
  v.dyck.resize(m - 1);
  const std::size_t first = side_a ? start + 1 : start;
  for (std::size_t j = 0; j + 1 < m; ++j)
    v.dyck[j] = x.test((first + j) % m) ? '1' : '0';
  return v;
}

Bitstring from_alignment(Side side, int ell, std::string_view dyck) {
  std::string s = side == Side::A ? "0" + std::string(dyck)
                                  : std::string(dyck) + "1";
  return rotate(Bitstring(s), -ell);
}

std::pair<std::string, std::string> decompose_u0v1(std::string_view w) {
  if (w.empty() || !is_dyck(w))
    throw std::invalid_argument("expected a nonempty Dyck word: " +
                                std::string(w));
  int d = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    d += (w[i] == '1') ? 1 : -1;
    if (d == 0)
      return {std::string(w.substr(0, i)),
              std::string(w.substr(i + 1, w.size() - i - 2))};
  }
  throw std::logic_error("unreachable: Dyck word without matching pair");
}

}  // namespace stargray
