#ifndef STARGRAY_BITSTRING_HPP
#define STARGRAY_BITSTRING_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stargray {

// Fixed-length binary word. Index 0 is the leftmost character of the
// textual form, which is position 1 in the external 1-indexed numbering.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t length);
  explicit Bitstring(std::string_view bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool test(std::size_t i) const {
    return (data()[i >> 6] >> (i & 63)) & 1u;
  }
  bool operator[](std::size_t i) const { return test(i); }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { data()[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  Bitstring flipped(std::size_t i) const;

  std::size_t weight() const;
  std::string str() const;
  std::size_t hash() const;

  // Index of the single differing bit, or -1 when the words differ in zero
  // or several places (or have different lengths).
  long single_difference(const Bitstring& other) const;

  friend bool operator==(const Bitstring& a, const Bitstring& b);
  friend std::strong_ordering operator<=>(const Bitstring& a,
                                          const Bitstring& b);

 private:
  static constexpr std::size_t kInlineWords = 2;
  std::size_t word_count() const { return (size_ + 63) >> 6; }
  const std::uint64_t* data() const {
    return heap_.empty() ? inline_.data() : heap_.data();
  }
  std::uint64_t* data() { return heap_.empty() ? inline_.data() : heap_.data(); }

  std::size_t size_ = 0;
  std::array<std::uint64_t, kInlineWords> inline_{};
  std::vector<std::uint64_t> heap_;
};

struct BitstringHash {
  std::size_t operator()(const Bitstring& b) const { return b.hash(); }
};

// Cyclic right rotation: the bit at index p moves to index p + i.
Bitstring rotate(const Bitstring& x, long i);

// All distinct rotations, sorted.
std::vector<Bitstring> necklace(const Bitstring& x);

// Lexicographically least rotation.
Bitstring necklace_representative(const Bitstring& x);

int deficiency(const Bitstring& x);
int deficiency(std::string_view w);

bool is_dyck(std::string_view w);
bool is_dyck(const Bitstring& x);

enum class Side { A, B };

// A vertex of the middle-levels graph together with its Dyck alignment:
// side A (weight n) has rotate(word, ell) = "0" + dyck,
// side B (weight n+1) has rotate(word, ell) = dyck + "1".
struct MiddleVertex {
  Bitstring word;
  Side side = Side::A;
  int ell = 0;
  std::string dyck;
};

MiddleVertex dyck_align(const Bitstring& x);

// Rebuilds the word from an alignment.
Bitstring from_alignment(Side side, int ell, std::string_view dyck);

// Splits a nonempty Dyck word w = u 0 v 1 into (u, v).
std::pair<std::string, std::string> decompose_u0v1(std::string_view w);

}  // namespace stargray

#endif
