#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace sperf {

inline constexpr int kMaxOrder = 64;

// A subset of {0..63} packed into one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
  // {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(mask_); }

  constexpr void insert(int v) { mask_ |= bit(v); }
  constexpr void erase(int v) { mask_ &= ~bit(v); }

  constexpr VertexSet with(int v) const { return VertexSet(mask_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(mask_ & ~bit(v)); }

  constexpr bool is_subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (mask_ & o.mask_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(mask_ & ~o.mask_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    mask_ &= ~o.mask_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t mask_ = 0;
};

}  // namespace sperf
