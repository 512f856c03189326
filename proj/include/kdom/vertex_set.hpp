#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kdom {

#ifdef KDOM_VERTEX_CAP_128
using SetWord = unsigned __int128;
inline constexpr int kMaxVertices = 128;
#else
using SetWord = std::uint64_t;
inline constexpr int kMaxVertices = 64;
#endif

namespace detail {

constexpr int popcount_word(SetWord w) {
#ifdef KDOM_VERTEX_CAP_128
  return std::popcount(static_cast<std::uint64_t>(w)) +
         std::popcount(static_cast<std::uint64_t>(w >> 64));
#else
  return std::popcount(w);
#endif
}

constexpr int countr_zero_word(SetWord w) {
#ifdef KDOM_VERTEX_CAP_128
  const auto lo = static_cast<std::uint64_t>(w);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(w >> 64));
#else
  return std::countr_zero(w);
#endif
}

}  // namespace detail

// A set of vertex indices stored in a single machine word.  Cheap to copy;
// all operations are O(1) except iteration.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(SetWord bits) : bits_(bits) {}

  // {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    if (n <= 0) return VertexSet{};
    if (n >= kMaxVertices) return VertexSet{~SetWord{0}};
    return VertexSet{(SetWord{1} << n) - 1};
  }

  static constexpr VertexSet single(int v) { return VertexSet{SetWord{1} << v}; }

  static constexpr VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr SetWord bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & SetWord{1}; }
  constexpr VertexSet& add(int v) {
    bits_ |= SetWord{1} << v;
    return *this;
  }
  constexpr VertexSet& remove(int v) {
    bits_ &= ~(SetWord{1} << v);
    return *this;
  }
  constexpr int count() const { return detail::popcount_word(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool any() const { return bits_ != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  // Lowest vertex, or -1 if empty.
  constexpr int lowest() const {
    return bits_ == 0 ? -1 : detail::countr_zero_word(bits_);
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ | b.bits_};
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ & b.bits_};
  }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ ^ b.bits_};
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet{a.bits_ & ~b.bits_};
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  // Numeric order on the underlying word; used as the canonical tie-break.
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    return a.bits_ < b.bits_;
  }

  class iterator {
   public:
    constexpr explicit iterator(SetWord rest) : rest_(rest) {}
    constexpr int operator*() const { return detail::countr_zero_word(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    SetWord rest_;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) s += ' ';
      s += std::to_string(v);
      first = false;
    }
    s += '}';
    return s;
  }

 private:
  SetWord bits_ = 0;
};

// Next word with the same popcount in increasing numeric order (Gosper).
// Input must be nonzero; the caller stops once the result overflows the
// intended range.
constexpr SetWord next_same_count(SetWord bits) {
  const SetWord low = bits & (~bits + 1);
  const SetWord ripple = bits + low;
  const SetWord changed = bits ^ ripple;
  return ripple | (changed >> (2 + detail::countr_zero_word(low)));
}

// Enumerates all n-bit subsets of the given popcount in increasing numeric
// order; returns false from the visitor to stop early.
template <class Visit>
bool for_each_subset_of_count(int n, int count, Visit visit) {
  if (count < 0 || count > n) return true;
  if (count == 0) return visit(VertexSet{});
  SetWord mask = (VertexSet::range(count)).bits();
  const SetWord limit = VertexSet::range(n).bits();
  while (true) {
    if (!visit(VertexSet{mask})) return false;
    const SetWord next = next_same_count(mask);
    if (next > limit || next < mask) break;
    mask = next;
  }
  return true;
}

// Lexicographically next r-combination of {0..m-1} in colex order (ordered by
// numeric value of the indicator word); returns false when exhausted.
inline bool next_combination_colex(std::vector<int>& c, int m) {
  const int r = static_cast<int>(c.size());
  for (int i = 0; i < r; ++i) {
    const int limit = (i + 1 < r) ? c[i + 1] : m;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace kdom
