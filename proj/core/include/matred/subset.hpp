// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATRED_SUBSET_HPP_
#define MATRED_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace matred {

/// Largest supported ground-set size. Every algorithm in the library
/// enumerates subsets (or pairs of subsets), so one machine word per
/// subset is enough and keeps exhaustive verification tractable.
inline constexpr int kMaxUniverse = 24;

/// 0-based index of a ground-set element. Displayed 1-based.
using ElementId = int;

/// A subset of a ground set of at most kMaxUniverse elements, one bit per
/// element. Plain value type; ordering is by numeric bit value.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset of_bits(std::uint32_t bits) { return Subset(bits); }
  static constexpr Subset single(ElementId e) { return Subset(1u << e); }
  /// The full ground set {0, ..., n-1}.
  static constexpr Subset full(int n) {
    return Subset(n <= 0 ? 0u : (0xFFFFFFFFu >> (32 - n)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr bool contains(ElementId e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & other.bits_) == bits_;
  }
  constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr Subset with(ElementId e) const { return Subset(bits_ | (1u << e)); }
  constexpr Subset without(ElementId e) const {
    return Subset(bits_ & ~(1u << e));
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }

  constexpr auto operator<=>(const Subset&) const = default;

  /// Iterates the elements of the subset in ascending order.
  class ElementIterator {
   public:
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;

    constexpr ElementIterator() = default;
    explicit constexpr ElementIterator(std::uint32_t bits) : bits_(bits) {}
    ElementId operator*() const { return std::countr_zero(bits_); }
    constexpr ElementIterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr ElementIterator operator++(int) {
      ElementIterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const ElementIterator&) const = default;

   private:
    std::uint32_t bits_ = 0;
  };

  constexpr ElementIterator begin() const { return ElementIterator(bits_); }
  constexpr ElementIterator end() const { return ElementIterator(0); }

 private:
  explicit constexpr Subset(std::uint32_t bits) : bits_(bits) {}

  std::uint32_t bits_ = 0;
};

/// Canonical order used throughout: ascending cardinality, then ascending
/// numeric bit value. Makes every family and listing byte-deterministic.
inline bool canonical_less(Subset a, Subset b) {
  const int sa = a.size();
  const int sb = b.size();
  return sa != sb ? sa < sb : a.bits() < b.bits();
}

/// Renders a subset in the display grammar: "{}" or "{1,3}" with ascending
/// 1-based elements and no spaces.
std::string format_subset(Subset s);

/// Parses the display grammar back into a subset. Whitespace-insensitive.
/// Elements must lie in [1, universe_size]. Throws ParseError.
Subset parse_subset(std::string_view text, int universe_size);

/// Calls f once for every subset of `ground`, including the empty set and
/// `ground` itself, in descending numeric order.
template <typename F>
void for_each_submask(Subset ground, F&& f) {
  const std::uint32_t g = ground.bits();
  std::uint32_t s = g;
  while (true) {
    f(Subset::of_bits(s));
    if (s == 0) break;
    s = (s - 1) & g;
  }
}

/// All 2^n subsets of {0, ..., n-1} in canonical order, generated lazily.
class PowerSet {
 public:
  /// Throws UniverseTooLarge when n exceeds kMaxUniverse.
  explicit PowerSet(int n);

  class Iterator {
   public:
    using value_type = Subset;
    using difference_type = std::ptrdiff_t;

    constexpr Iterator() = default;
    Iterator(int n, int cardinality, std::uint32_t mask)
        : n_(n), cardinality_(cardinality), mask_(mask) {}

    Subset operator*() const { return Subset::of_bits(mask_); }
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& other) const {
      return cardinality_ == other.cardinality_ && mask_ == other.mask_;
    }

   private:
    int n_ = 0;
    int cardinality_ = 0;
    std::uint32_t mask_ = 0;
  };

  Iterator begin() const { return Iterator(n_, 0, 0); }
  Iterator end() const { return Iterator(n_, n_ + 1, 0); }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  int universe_size() const { return n_; }

 private:
  int n_;
};

/// Convenience wrapper: iterate all subsets of an n-element universe.
inline PowerSet power_set(int n) { return PowerSet(n); }

}  // namespace matred

#endif  // MATRED_SUBSET_HPP_
