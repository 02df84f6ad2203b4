#pragma once

/**
 * @file lattice.hpp
 * @brief Full ideal lattice of a finite ring.
 *
 * Every ideal is a finite sum of principal ideals, so the lattice is the
 * closure of the principal ideals under pairwise sums. Ideal counts stay
 * small even when 2^|R| is astronomically large.
 */

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "amalgam/ideal.hpp"

namespace amalgam {

/// Every ideal of r, deduplicated and sorted canonically by element set
/// (cardinality, then ascending element lists).
inline std::vector<Ideal> all_ideals(const FiniteRing& r, std::size_t cap = kDefaultCap) {
  if (r.order() > cap) {
    throw size_cap_error("ideal enumeration of " + r.label() + " (order " + std::to_string(r.order()) +
                         ") exceeds the cap of " + std::to_string(cap));
  }
  std::vector<ElementSet> sets;
  std::vector<std::vector<Element>> lists;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  auto insert = [&](ElementSet s, std::vector<Element> l) {
    if (index.contains(s)) return;
    index.emplace(s, sets.size());
    sets.push_back(std::move(s));
    lists.push_back(std::move(l));
  };
  for (auto x : r.elements()) {
    ElementSet m(r.order());
    m.set(r.zero());
    std::vector<Element> l{r.zero()};
    detail::extend_ideal(r, m, l, x);
    insert(std::move(m), std::move(l));
  }
  // Principal ideals are handled against every earlier ideal; each new sum
  // is in turn summed against everything before it.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].is_subset_of(sets[i]) || sets[i].is_subset_of(sets[j])) continue;
      ElementSet m = sets[i];
      auto l = lists[i];
      for (auto x : lists[j]) detail::extend_subgroup(r, m, l, x);
      insert(std::move(m), std::move(l));
    }
  }
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return canonical_less(sets[a], sets[b]); });
  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (auto i : order) {
    auto gens = reduce_generators(r, sets[i]);
    out.emplace_back(r, std::move(gens), std::move(sets[i]));
  }
  return out;
}

/// Indexed view of an ideal lattice with memoised sums and products, for
/// algorithms that combine ideals in tight loops.
class IdealLattice {
 public:
  using Id = std::uint32_t;

  IdealLattice(const FiniteRing& r, std::vector<Ideal> ideals) : ring_(r), ideals_(std::move(ideals)) {
    for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].members(), static_cast<Id>(i));
    principal_.resize(r.order());
    for (auto x : r.elements()) principal_[x] = id_of(ideal_closure(r, {x}).members());
    const auto n = ideals_.size();
    sum_.assign(n * n, kUnset);
    product_.assign(n * n, kUnset);
  }

  explicit IdealLattice(const FiniteRing& r) : IdealLattice(r, all_ideals(r)) {}

  const FiniteRing& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const Ideal& operator[](Id i) const { return ideals_[i]; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  Id principal(Element x) const { return principal_[x]; }
  Id zero() const { return principal_[ring_.zero()]; }

  Id id_of(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw consistency_error("element set is missing from the ideal lattice of " + ring_.label());
    return it->second;
  }

  Id sum(Id a, Id b) {
    auto& slot = sum_[a * size() + b];
    if (slot == kUnset) {
      slot = id_of(ideal_sum(ideals_[a], ideals_[b]).members());
      sum_[b * size() + a] = slot;
    }
    return slot;
  }

  Id product(Id a, Id b) {
    auto& slot = product_[a * size() + b];
    if (slot == kUnset) {
      slot = id_of(ideal_product(ideals_[a], ideals_[b]).members());
      product_[b * size() + a] = slot;
    }
    return slot;
  }

  /// Ideal generated by a list of elements.
  template <typename Range>
  Id generated(const Range& elems) {
    Id acc = zero();
    for (auto x : elems) acc = sum(acc, principal(x));
    return acc;
  }

 private:
  static constexpr Id kUnset = 0xFFFFFFFFU;
  FiniteRing ring_;
  std::vector<Ideal> ideals_;
  std::unordered_map<ElementSet, Id, ElementSetHash> index_;
  std::vector<Id> principal_;
  std::vector<Id> sum_;
  std::vector<Id> product_;
};

}  // namespace amalgam
