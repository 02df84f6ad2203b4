#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <vector>

namespace amalgam {

/// Index of an element in a ring's canonical carrier enumeration.
using Element = std::uint32_t;

/// Membership bitmap over a carrier 0..order-1.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<Element> to_vector(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

inline ElementSet make_set(std::size_t order, const std::vector<Element>& elems) {
  ElementSet s(order);
  for (auto e : elems) s.set(e);
  return s;
}

/// Canonical order on element sets: by cardinality, then lexicographically
/// on the ascending element lists.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ElementSet::npos && j != ElementSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return boost::hash_value(s); }
};

}  // namespace amalgam
