#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cliquevc {

// Fixed-width bit row over 0..size()-1. Used both as adjacency row and as a
// vertex subset; all binary operations require equal sizes.
class DynBitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DynBitset() = default;
  explicit DynBitset(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}
  DynBitset(std::size_t nbits, std::initializer_list<std::size_t> members) : DynBitset(nbits) {
    for (auto v : members) set(v);
  }

  static DynBitset full(std::size_t nbits) {
    DynBitset b(nbits);
    for (auto& w : b.words_) w = ~word_type{0};
    b.trim();
    return b;
  }

  static constexpr std::size_t word_count(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return nbits_; }
  std::size_t num_words() const { return words_.size(); }
  const word_type* data() const { return words_.data(); }
  word_type* data() { return words_.data(); }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) {
    assert(i < nbits_);
    words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < nbits_);
    words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits));
  }
  void set(std::size_t i, bool value) { value ? set(i) : reset(i); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const {
    if (from >= nbits_) return npos;
    std::size_t wi = from / kWordBits;
    word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w != 0) {
        fn(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  DynBitset& operator&=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& operator^=(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // this &= ~o
  DynBitset& subtract(const DynBitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a.subtract(b); }

  std::size_t intersection_count(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool intersects(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const DynBitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const DynBitset&) const = default;

  // Lexicographic order on the ascending member lists; a proper prefix sorts first.
  friend bool lex_less(const DynBitset& a, const DynBitset& b) {
    assert(a.nbits_ == b.nbits_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const word_type diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      const word_type low = diff & (~diff + 1);
      // The first differing element belongs to exactly one side. If it is in
      // a, a has a smaller element at that position unless b has already run out.
      const bool in_a = (a.words_[i] & low) != 0;
      const word_type above = ~((low << 1) - 1);
      if (in_a) {
        // b lacks this element: b is smaller only if b has no further elements.
        bool b_more = (b.words_[i] & above) != 0;
        for (std::size_t j = i + 1; !b_more && j < b.words_.size(); ++j) b_more = b.words_[j] != 0;
        return b_more;
      }
      bool a_more = (a.words_[i] & above) != 0;
      for (std::size_t j = i + 1; !a_more && j < a.words_.size(); ++j) a_more = a.words_[j] != 0;
      return !a_more;
    }
    return false;
  }

  // Raw word comparison; a total order usable for sorting and dedup.
  friend bool word_less(const DynBitset& a, const DynBitset& b) {
    if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
    return std::lexicographical_compare(a.words_.rbegin(), a.words_.rend(), b.words_.rbegin(), b.words_.rend());
  }

 private:
  void trim() {
    if (nbits_ % kWordBits != 0 && !words_.empty()) words_.back() &= (word_type{1} << (nbits_ % kWordBits)) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<word_type> words_;
};

using VertexSet = DynBitset;

}  // namespace cliquevc
