#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// A unital ring homomorphism between finite rings, verified exhaustively
/// when it is constructed.
class RingHom {
 public:
  /// Builds the map and checks map(1) = 1, additivity and multiplicativity on
  /// every pair. Throws axiom_error carrying the first violating pair.
  static RingHom verified(FiniteRing source, FiniteRing target, std::vector<Element> map) {
    if (map.size() != source.order()) {
      throw error("homomorphism table has " + std::to_string(map.size()) + " entries, source has order " +
                  std::to_string(source.order()));
    }
    for (auto x : source.elements()) {
      if (map[x] >= target.order()) {
        throw axiom_error("image of " + source.describe(x) + " is outside " + target.label(), {x});
      }
    }
    if (map[source.one()] != target.one()) {
      throw axiom_error("map(1) = " + target.element_label(map[source.one()]) + " is not the identity of " +
                            target.label(),
                        {source.one()});
    }
    for (auto x : source.elements()) {
      for (auto y : source.elements()) {
        const auto s = source.add(x, y);
        if (map[s] != target.add(map[x], map[y])) {
          throw axiom_error("not additive: map(" + source.element_label(x) + " + " + source.element_label(y) +
                                ") = " + target.element_label(map[s]) + " but map(x) + map(y) = " +
                                target.element_label(target.add(map[x], map[y])),
                            {x, y});
        }
        const auto p = source.mul(x, y);
        if (map[p] != target.mul(map[x], map[y])) {
          throw axiom_error("not multiplicative: map(" + source.element_label(x) + " * " +
                                source.element_label(y) + ") = " + target.element_label(map[p]) +
                                " but map(x) * map(y) = " + target.element_label(target.mul(map[x], map[y])),
                            {x, y});
        }
      }
    }
    RingHom h;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.map_ = std::move(map);
    return h;
  }

  const FiniteRing& source() const noexcept { return source_; }
  const FiniteRing& target() const noexcept { return target_; }
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& table() const noexcept { return map_; }

  bool is_injective() const {
    ElementSet seen(target_.order());
    for (auto y : map_) {
      if (seen.test(y)) return false;
      seen.set(y);
    }
    return true;
  }

  bool is_surjective() const {
    ElementSet seen(target_.order());
    for (auto y : map_) seen.set(y);
    return seen.all();
  }

  ElementSet image() const {
    ElementSet seen(target_.order());
    for (auto y : map_) seen.set(y);
    return seen;
  }

  /// Kernel as an element set of the source.
  ElementSet kernel() const {
    ElementSet k(source_.order());
    for (auto x : source_.elements()) {
      if (map_[x] == target_.zero()) k.set(x);
    }
    return k;
  }

 private:
  RingHom() = default;
  FiniteRing source_;
  FiniteRing target_;
  std::vector<Element> map_;
};

inline RingHom identity_hom(const FiniteRing& r) {
  std::vector<Element> map(r.order());
  for (auto x : r.elements()) map[x] = x;
  return RingHom::verified(r, r, std::move(map));
}

/// The characteristic map x·1 ↦ x·1 out of a ring whose additive group is
/// generated by 1 (Z/n and its isomorphic copies).
inline RingHom canonical_hom(const FiniteRing& source, const FiniteRing& target) {
  std::vector<Element> map(source.order(), 0);
  ElementSet reached(source.order());
  Element x = source.zero();
  Element y = target.zero();
  for (std::size_t k = 0; k < source.order(); ++k) {
    if (reached.test(x)) break;
    reached.set(x);
    map[x] = y;
    x = source.add(x, source.one());
    y = target.add(y, target.one());
  }
  if (!reached.all()) {
    throw error("canonical map needs a source generated additively by 1; " + source.label() + " is not");
  }
  return RingHom::verified(source, target, std::move(map));
}

/// Projection of a pair-structured ring (product, trivial extension,
/// amalgamation) onto component 0 or 1.
inline RingHom projection_hom(const FiniteRing& source, std::size_t component) {
  if (source.coords().empty() || source.components().empty()) {
    throw error(source.label() + " has no component structure to project from");
  }
  if (component >= source.components().size()) {
    throw error("projection component " + std::to_string(component) + " does not exist in " + source.label());
  }
  std::vector<Element> map(source.order());
  for (auto x : source.elements()) {
    map[x] = component == 0 ? source.coords()[x].first : source.coords()[x].second;
  }
  return RingHom::verified(source, source.components()[component], std::move(map));
}

inline RingHom table_hom(const FiniteRing& source, const FiniteRing& target,
                         const std::vector<std::pair<Element, Element>>& pairs) {
  std::vector<std::optional<Element>> partial(source.order());
  for (const auto& [x, y] : pairs) {
    if (x >= source.order()) throw error("table entry source " + std::to_string(x) + " out of range");
    if (partial[x] && *partial[x] != y) throw error("table maps " + std::to_string(x) + " twice");
    partial[x] = y;
  }
  std::vector<Element> map(source.order());
  for (auto x : source.elements()) {
    if (!partial[x]) throw error("table does not define the image of " + source.describe(x));
    map[x] = *partial[x];
  }
  return RingHom::verified(source, target, std::move(map));
}

inline RingHom compose(const RingHom& g, const RingHom& f) {
  require_same_ring(f.target(), g.source(), "compose");
  std::vector<Element> map(f.source().order());
  for (auto x : f.source().elements()) map[x] = g(f(x));
  return RingHom::verified(f.source(), g.target(), std::move(map));
}

namespace detail {

/// Elements generating r as a ring, chosen greedily in index order.
inline std::vector<Element> ring_generators(const FiniteRing& r) {
  std::vector<Element> gens;
  ElementSet sub(r.order());
  std::vector<Element> list;
  auto close = [&]() {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto z : {r.add(list[i], list[j]), r.mul(list[i], list[j]), r.neg(list[i])}) {
          if (!sub.test(z)) {
            sub.set(z);
            list.push_back(z);
          }
        }
      }
    }
  };
  sub.set(r.zero());
  sub.set(r.one());
  list = {r.zero(), r.one()};
  if (r.zero() == r.one()) list.pop_back();
  close();
  for (auto x : r.elements()) {
    if (sub.test(x)) continue;
    gens.push_back(x);
    sub.set(x);
    list.push_back(x);
    close();
  }
  return gens;
}

/// Extends a partial map by closing under + and ·; false on inconsistency.
inline bool propagate(const FiniteRing& r, const FiniteRing& s, std::vector<std::optional<Element>>& map) {
  std::vector<Element> known;
  for (auto x : r.elements()) {
    if (map[x]) known.push_back(x);
  }
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto x = known[i], y = known[j];
      const std::pair<Element, Element> cand[] = {{r.add(x, y), s.add(*map[x], *map[y])},
                                                   {r.mul(x, y), s.mul(*map[x], *map[y])}};
      for (const auto& [z, w] : cand) {
        if (map[z]) {
          if (*map[z] != w) return false;
        } else {
          map[z] = w;
          known.push_back(z);
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Brute-force search for a ring isomorphism r → s. Tries every assignment
/// of images to a generating set of r; desk-scale only.
inline std::optional<RingHom> find_isomorphism(const FiniteRing& r, const FiniteRing& s) {
  if (r.order() != s.order()) return std::nullopt;
  const auto gens = detail::ring_generators(r);
  const auto n = s.order();
  std::vector<Element> choice(gens.size(), 0);
  while (true) {
    std::vector<std::optional<Element>> map(r.order());
    map[r.zero()] = s.zero();
    map[r.one()] = s.one();
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      if (map[gens[i]] && *map[gens[i]] != choice[i]) ok = false;
      map[gens[i]] = choice[i];
    }
    if (ok && detail::propagate(r, s, map)) {
      std::vector<Element> table(r.order());
      bool total = true;
      for (auto x : r.elements()) {
        if (!map[x]) {
          total = false;
          break;
        }
        table[x] = *map[x];
      }
      if (total) {
        try {
          auto h = RingHom::verified(r, s, std::move(table));
          if (h.is_injective()) return h;
        } catch (const axiom_error&) {
        }
      }
    }
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == n) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return std::nullopt;
}

}  // namespace amalgam
