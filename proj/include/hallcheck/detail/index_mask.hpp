#pragma once

#include <cstdint>
#include <vector>

namespace hallcheck::detail {

// Fixed-universe bitset over element indices of one parent group.
class IndexMask {
public:
  IndexMask() = default;
  explicit IndexMask(size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  size_t universe() const { return universe_; }

  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  size_t count() const {
    size_t n = 0;
    for (auto w : words_) n += static_cast<size_t>(__builtin_popcountll(w));
    return n;
  }

  bool subset_of(const IndexMask& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  IndexMask& operator&=(const IndexMask& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  IndexMask& operator|=(const IndexMask& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend IndexMask operator&(IndexMask a, const IndexMask& b) { return a &= b; }
  friend IndexMask operator|(IndexMask a, const IndexMask& b) { return a |= b; }

  friend bool operator==(const IndexMask& a, const IndexMask& b) = default;

  std::vector<std::uint16_t> indices() const {
    std::vector<std::uint16_t> out;
    out.reserve(count());
    for (size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        out.push_back(static_cast<std::uint16_t>((w << 6) + static_cast<size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

private:
  size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hallcheck::detail
