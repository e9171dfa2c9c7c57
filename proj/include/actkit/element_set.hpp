#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace actkit {

/// Dense element index into a semigroup or act carrier.
using Index = std::uint32_t;

/// Largest carrier for which subsets are represented as an ElementSet.
inline constexpr std::size_t kMaxMaskedSize = 64;

/// A subset of {0, ..., 63} stored as a bit mask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Index;
    using difference_type = std::ptrdiff_t;
    using pointer = const Index*;
    using reference = Index;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Index operator*() const {
      return static_cast<Index>(std::countr_zero(rest_));
    }
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

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(Index i) {
    return ElementSet(std::uint64_t{1} << i);
  }
  /// {0, ..., n-1}
  static constexpr ElementSet first(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  template <class Range>
  static ElementSet of(const Range& elements) {
    ElementSet out;
    for (auto e : elements) out.insert(static_cast<Index>(e));
    return out;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Index i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(Index i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(Index i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr Index front() const {
    return static_cast<Index>(std::countr_zero(bits_));
  }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Index> to_vector() const { return {begin(), end()}; }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace actkit
