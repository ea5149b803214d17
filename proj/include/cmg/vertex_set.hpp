#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace cmg {

using Vertex = std::uint32_t;

/// A subset of at most 64 vertices, stored as a bitmask over vertex ids.
class VertexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
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
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  /// {0, ..., count-1}
  static constexpr VertexSet first(std::size_t count) {
    return VertexSet{count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr Vertex lowest() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending element sequences of two sets, so a
/// proper prefix sorts first: {0,1} < {0,1,2} < {0,2} < {1}.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

}  // namespace cmg
