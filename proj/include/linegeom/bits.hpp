#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace linegeom {

/// Runtime-sized bitset. The clique search and the map-search engine work on
/// whole 64-bit words, so the word storage is exposed read-only.
class Bits {
public:
  Bits() = default;
  explicit Bits(int bit_count)
      : bits_(bit_count), w_(word_count_for(bit_count), 0) {}

  static Bits of(int bit_count, const std::vector<int>& members) {
    Bits b(bit_count);
    for (int i : members) b.set(i);
    return b;
  }

  int capacity() const { return bits_; }
  int word_count() const { return static_cast<int>(w_.size()); }
  const std::vector<std::uint64_t>& words() const { return w_; }

  bool test(int i) const {
    assert(i >= 0 && i < bits_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < bits_);
    w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < bits_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (std::uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bits& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  /// *this ⊆ o
  bool is_subset_of(const Bits& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  static int and_count(const Bits& a, const Bits& b) {
    assert(a.bits_ == b.bits_);
    int c = 0;
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      c += std::popcount(a.w_[k] & b.w_[k]);
    return c;
  }

  Bits& operator&=(const Bits& o) {
    assert(bits_ == o.bits_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    assert(bits_ == o.bits_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  /// this := this \ o
  Bits& subtract(const Bits& o) {
    assert(bits_ == o.bits_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) {
    a &= b;
    return a;
  }
  friend Bits operator|(Bits a, const Bits& b) {
    a |= b;
    return a;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    r.subtract(o);
    return r;
  }

  /// All bits below capacity() flipped.
  Bits complemented() const {
    Bits r = *this;
    for (auto& x : r.w_) x = ~x;
    r.mask_tail();
    return r;
  }

  int find_first() const { return find_from(0); }
  /// First set bit strictly greater than i, or -1.
  int find_next(int i) const { return find_from(i + 1); }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  bool operator==(const Bits&) const = default;

private:
  static int word_count_for(int bits) { return (bits + 63) >> 6; }

  int find_from(int i) const {
    if (i < 0) i = 0;
    if (i >= bits_) return -1;
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    std::uint64_t x = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (x) {
        int bit = static_cast<int>(k << 6) + std::countr_zero(x);
        return bit < bits_ ? bit : -1;
      }
      if (++k >= w_.size()) return -1;
      x = w_[k];
    }
  }

  void mask_tail() {
    int rem = bits_ & 63;
    if (rem != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  int bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace linegeom
