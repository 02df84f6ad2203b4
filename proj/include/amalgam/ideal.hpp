#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of finite rings: closure, sums, products, intersections,
 * colon ideals, invertibility and content ideals.
 *
 * An ideal keeps both the generators it was built from and its full element
 * set. Equality is element-set equality; generators are not canonical.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "amalgam/element_set.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

namespace detail {

/// Grows the additive subgroup `members` (listed in `list`) to contain t.
/// H + <t> is the union of the cosets H + kt.
inline void extend_subgroup(const FiniteRing& r, ElementSet& members, std::vector<Element>& list, Element t) {
  if (members.test(t)) return;
  const auto base_size = list.size();
  Element shift = t;
  while (!members.test(shift)) {
    for (std::size_t i = 0; i < base_size; ++i) {
      const auto z = r.add(list[i], shift);
      members.set(z);
      list.push_back(z);
    }
    shift = r.add(shift, t);
  }
}

/// Adds the ideal generated by g to the ideal `members`.
inline void extend_ideal(const FiniteRing& r, ElementSet& members, std::vector<Element>& list, Element g) {
  if (members.test(g)) return;
  for (auto x : r.elements()) extend_subgroup(r, members, list, r.mul(x, g));
}

}  // namespace detail

class Ideal {
 public:
  Ideal(FiniteRing ring, std::vector<Element> generators, ElementSet members)
      : ring_(std::move(ring)), gens_(std::move(generators)), members_(std::move(members)) {}

  const FiniteRing& ring() const noexcept { return ring_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  const ElementSet& members() const noexcept { return members_; }
  std::vector<Element> elements() const { return to_vector(members_); }
  std::size_t size() const { return members_.count(); }
  bool contains(Element x) const { return members_.test(x); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_whole() const { return members_.all(); }
  bool is_proper() const { return !is_whole(); }
  bool is_subset_of(const Ideal& o) const { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.members_ == b.members_ && a.ring_ == b.ring_;
  }

  /// "(g1,g2,...)" in construction-trace form.
  std::string describe() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += ring_.element_label(gens_[i]);
    }
    if (gens_.empty()) s += ring_.element_label(ring_.zero());
    return s + ")";
  }

 private:
  FiniteRing ring_;
  std::vector<Element> gens_;
  ElementSet members_;
};

/// Smallest ideal containing gens.
inline Ideal ideal_closure(const FiniteRing& r, std::vector<Element> gens) {
  ElementSet members(r.order());
  members.set(r.zero());
  std::vector<Element> list{r.zero()};
  for (auto g : gens) {
    if (g >= r.order()) throw error("generator " + std::to_string(g) + " is not an element of " + r.label());
    detail::extend_ideal(r, members, list, g);
  }
  return Ideal(r, std::move(gens), std::move(members));
}

inline Ideal zero_ideal(const FiniteRing& r) { return ideal_closure(r, {}); }
inline Ideal unit_ideal(const FiniteRing& r) { return ideal_closure(r, {r.one()}); }

/// Greedy generating set of a subset that is already known to be an ideal:
/// each element, in index order, that the previous ones do not generate.
inline std::vector<Element> reduce_generators(const FiniteRing& r, const ElementSet& members) {
  std::vector<Element> gens;
  ElementSet cur(r.order());
  cur.set(r.zero());
  std::vector<Element> list{r.zero()};
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    const auto x = static_cast<Element>(i);
    if (cur.test(x)) continue;
    gens.push_back(x);
    detail::extend_ideal(r, cur, list, x);
  }
  return gens;
}

/// True when the set contains 0 and is closed under + and ring multiples.
inline bool is_ideal_set(const FiniteRing& r, const ElementSet& s) {
  if (s.size() != r.order() || !s.test(r.zero())) return false;
  const auto elems = to_vector(s);
  for (auto x : elems) {
    for (auto y : elems) {
      if (!s.test(r.add(x, y))) return false;
    }
    for (auto a : r.elements()) {
      if (!s.test(r.mul(a, x))) return false;
    }
  }
  return true;
}

/// Wraps a verified ideal element set with reduced generators.
inline Ideal ideal_from_set(const FiniteRing& r, ElementSet s) {
  if (!is_ideal_set(r, s)) throw error("element set is not an ideal of " + r.label());
  auto gens = reduce_generators(r, s);
  return Ideal(r, std::move(gens), std::move(s));
}

inline Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "ideal sum");
  const auto& r = i.ring();
  ElementSet members = i.members();
  auto list = i.elements();
  for (auto x : j.elements()) detail::extend_subgroup(r, members, list, x);
  auto gens = i.generators();
  for (auto g : j.generators()) {
    if (std::ranges::find(gens, g) == gens.end()) gens.push_back(g);
  }
  return Ideal(r, std::move(gens), std::move(members));
}

inline Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "ideal product");
  std::vector<Element> gens;
  for (auto a : i.generators()) {
    for (auto b : j.generators()) {
      const auto p = i.ring().mul(a, b);
      if (std::ranges::find(gens, p) == gens.end()) gens.push_back(p);
    }
  }
  return ideal_closure(i.ring(), std::move(gens));
}

inline Ideal ideal_intersection(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "ideal intersection");
  return ideal_from_set(i.ring(), i.members() & j.members());
}

enum class IdealOp { sum, product, intersection };

inline Ideal ideal_combine(IdealOp op, const Ideal& i, const Ideal& j) {
  switch (op) {
    case IdealOp::sum:
      return ideal_sum(i, j);
    case IdealOp::product:
      return ideal_product(i, j);
    case IdealOp::intersection:
      return ideal_intersection(i, j);
  }
  throw error("unknown ideal operation");
}

/// (I : J) = {r : rJ ⊆ I}. Checking the generators of J suffices.
inline Ideal colon_ideal(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring(), "colon ideal");
  const auto& r = i.ring();
  ElementSet out(r.order());
  for (auto x : r.elements()) {
    bool inside = true;
    for (auto g : j.generators()) {
      if (!i.contains(r.mul(x, g))) {
        inside = false;
        break;
      }
    }
    if (inside) out.set(x);
  }
  auto gens = reduce_generators(r, out);
  return Ideal(r, std::move(gens), std::move(out));
}

inline bool is_unit(const FiniteRing& r, Element x) {
  for (auto y : r.elements()) {
    if (r.mul(x, y) == r.one()) return true;
  }
  return false;
}

/// Over a finite ring the total ring of quotients is the ring itself, so
/// I is invertible iff (R : I)·I = R. The answer is cross-checked against
/// "I contains a unit" and a disagreement throws consistency_error.
inline bool is_invertible(const Ideal& i, const ElementSet& units) {
  const auto& r = i.ring();
  const auto whole = unit_ideal(r);
  const bool by_colon = ideal_product(colon_ideal(whole, i), i).is_whole();
  const bool has_unit = i.members().intersects(units);
  if (by_colon != has_unit) {
    throw consistency_error("invertibility of " + i.describe() + " in " + r.label() +
                            ": colon-ideal route and unit route disagree");
  }
  return by_colon;
}

inline bool is_invertible(const Ideal& i) {
  const auto& r = i.ring();
  ElementSet units(r.order());
  for (auto x : r.elements()) {
    if (is_unit(r, x)) units.set(x);
  }
  return is_invertible(i, units);
}

/// Content ideal of a polynomial given by its coefficient list.
inline Ideal content(const FiniteRing& r, const std::vector<Element>& coeffs) { return ideal_closure(r, coeffs); }

}  // namespace amalgam
