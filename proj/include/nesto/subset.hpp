#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nesto {

using Mask = std::uint32_t;

// Labels are 1..kHardMaxN; bit i-1 stores label i.
inline constexpr int kHardMaxN = 30;

class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elems);
  static Subset from_elements(const std::vector<int>& elems);
  static constexpr Subset singleton(int i) { return Subset(Mask{1} << (i - 1)); }
  // {lo, lo+1, ..., hi}; empty when lo > hi.
  static Subset interval(int lo, int hi);
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(Subset o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }
  int min() const { return std::countr_zero(bits_) + 1; }
  int max() const { return 32 - std::countl_zero(bits_); }
  bool is_interval() const;

  std::vector<int> elements() const;
  std::string str() const;

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset with(int i) const { return Subset(bits_ | (Mask{1} << (i - 1))); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(Mask{1} << (i - 1))); }

  constexpr bool operator==(const Subset&) const = default;

 private:
  Mask bits_ = 0;
};

// Canonical order: cardinality first, then lexicographic on sorted elements.
bool canonical_less(Subset a, Subset b);

struct CanonicalLess {
  bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

struct SubsetHash {
  std::size_t operator()(Subset s) const noexcept { return std::hash<Mask>{}(s.bits()); }
};

// Visits every submask of `s`, including the empty one and `s` itself.
template <class F>
void for_each_submask(Subset s, F&& f) {
  Mask m = s.bits();
  Mask sub = m;
  while (true) {
    f(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace nesto
