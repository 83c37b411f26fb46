#include "nesto/subset.hpp"

#include <algorithm>
#include <sstream>

#include "nesto/error.hpp"

namespace nesto {

namespace {
void check_label(int i) {
  if (i < 1 || i > kHardMaxN)
    throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(i) + " outside 1.." + std::to_string(kHardMaxN));
}
}  // namespace

Subset Subset::of(std::initializer_list<int> elems) {
  Mask m = 0;
  for (int i : elems) {
    check_label(i);
    m |= Mask{1} << (i - 1);
  }
  return Subset(m);
}

Subset Subset::from_elements(const std::vector<int>& elems) {
  Mask m = 0;
  for (int i : elems) {
    check_label(i);
    Mask bit = Mask{1} << (i - 1);
    if (m & bit) throw Error(ErrorCode::InvalidArgument, "duplicate element " + std::to_string(i));
    m |= bit;
  }
  return Subset(m);
}

Subset Subset::interval(int lo, int hi) {
  if (lo > hi) return Subset{};
  check_label(lo);
  check_label(hi);
  return Subset(full(hi).bits() & ~full(lo - 1).bits());
}

bool Subset::is_interval() const {
  if (empty()) return true;
  return *this == interval(min(), max());
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : elements()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Same cardinality: the first differing element decides; the set holding
  // the smaller element at that position comes first.
  Mask diff = a.bits() ^ b.bits();
  Mask low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

}  // namespace nesto
