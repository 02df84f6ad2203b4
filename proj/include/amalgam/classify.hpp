#pragma once

/**
 * @file classify.hpp
 * @brief Element classification, locality, maximal ideals, Jacobson radical
 * and the decomposition of a finite ring into local factors.
 *
 * Conventions: 0 is a zero divisor, and "regular" means "not a zero
 * divisor", so Z(R) and Reg(R) partition the carrier.
 */

#include <optional>
#include <string>
#include <vector>

#include "amalgam/hom.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/lattice_cache.hpp"

namespace amalgam {

inline ElementSet zero_divisors(const FiniteRing& r) {
  ElementSet z(r.order());
  for (auto x : r.elements()) {
    for (auto y : r.elements()) {
      if (y != r.zero() && r.mul(x, y) == r.zero()) {
        z.set(x);
        break;
      }
    }
  }
  return z;
}

inline ElementSet regular_elements(const FiniteRing& r) { return ~zero_divisors(r); }

inline ElementSet unit_elements(const FiniteRing& r) {
  ElementSet u(r.order());
  for (auto x : r.elements()) {
    if (is_unit(r, x)) u.set(x);
  }
  return u;
}

inline ElementSet nilpotent_elements(const FiniteRing& r) {
  ElementSet n(r.order());
  for (auto x : r.elements()) {
    Element p = x;
    for (std::size_t k = 0; k <= r.order(); ++k) {
      if (p == r.zero()) {
        n.set(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return n;
}

inline std::vector<Element> idempotents(const FiniteRing& r) {
  std::vector<Element> out;
  for (auto x : r.elements()) {
    if (r.mul(x, x) == x) out.push_back(x);
  }
  return out;
}

/// Locality via "the non-units are closed under addition".
inline bool nonunits_additively_closed(const FiniteRing& r, const ElementSet& units) {
  const auto non = to_vector(~units);
  for (auto x : non) {
    for (auto y : non) {
      if (units.test(r.add(x, y))) return false;
    }
  }
  return true;
}

struct ClassifiedRing {
  FiniteRing ring;
  ElementSet zero_divisors;
  ElementSet units;
  ElementSet regulars;
  ElementSet nilpotents;
  std::vector<Ideal> maximal_ideals;
  Ideal radical;
  bool is_local = false;
};

/// Proper ideals not strictly contained in another proper ideal.
inline std::vector<Ideal> maximal_ideals(const std::vector<Ideal>& lattice) {
  std::vector<Ideal> out;
  for (const auto& i : lattice) {
    if (i.is_whole()) continue;
    bool maximal = true;
    for (const auto& j : lattice) {
      if (!j.is_whole() && j.size() > i.size() && i.is_subset_of(j)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

inline ClassifiedRing classify(const FiniteRing& r, LatticeStore& store) {
  const auto& lattice = store.ideals(r);
  auto zd = zero_divisors(r);
  auto units = unit_elements(r);
  auto regs = ~zd;
  if (regs != units) {
    throw consistency_error("regular elements and units differ in the finite ring " + r.label());
  }
  auto maxes = maximal_ideals(lattice);
  ElementSet rad(r.order());
  rad.set();
  for (const auto& m : maxes) rad &= m.members();
  const bool local = maxes.size() == 1;
  if (local != nonunits_additively_closed(r, units)) {
    throw consistency_error("locality of " + r.label() + ": maximal-ideal count and non-unit closure disagree");
  }
  auto nil = nilpotent_elements(r);
  return {r, std::move(zd), std::move(units), std::move(regs), std::move(nil), std::move(maxes),
          ideal_from_set(r, std::move(rad)), local};
}

inline ClassifiedRing classify(const FiniteRing& r) {
  LatticeStore store;
  return classify(r, store);
}

// ---------------------------------------------------------------------------
// Local decomposition

struct LocalFactor {
  FiniteRing ring;                 // R·e with identity e
  RingHom projection;              // x ↦ x·e
  std::vector<Element> embedding;  // factor index → index in R
  Element idempotent = 0;
};

/// Splits r along its primitive idempotents. A local ring comes back as a
/// single factor equal to itself. The map R → ∏ R·e is verified to be a
/// ring isomorphism.
inline std::vector<LocalFactor> local_decomposition(const FiniteRing& r, std::size_t cap = kDefaultCap) {
  if (r.order() > cap) throw size_cap_error("local decomposition of " + r.label() + " exceeds the cap");
  const auto idem = idempotents(r);
  std::vector<Element> primitive;
  for (auto e : idem) {
    if (e == r.zero()) continue;
    bool prim = true;
    for (auto f : idem) {
      if (f != r.zero() && f != e && r.mul(f, e) == f) {
        prim = false;
        break;
      }
    }
    if (prim) primitive.push_back(e);
  }
  if (primitive.size() == 1) {
    std::vector<Element> emb(r.order());
    for (auto x : r.elements()) emb[x] = x;
    return {LocalFactor{r, identity_hom(r), std::move(emb), r.one()}};
  }

  std::vector<LocalFactor> factors;
  for (auto e : primitive) {
    ElementSet s(r.order());
    for (auto x : r.elements()) s.set(r.mul(x, e));
    auto emb = to_vector(s);
    std::vector<Element> local_index(r.order(), 0);
    for (std::size_t i = 0; i < emb.size(); ++i) local_index[emb[i]] = static_cast<Element>(i);
    const auto n = emb.size();
    FiniteRing::Data d;
    d.order = n;
    d.add.resize(n * n);
    d.mul.resize(n * n);
    d.neg.resize(n);
    d.element_labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.neg[i] = local_index[r.neg(emb[i])];
      d.element_labels[i] = r.element_label(emb[i]);
      for (std::size_t j = 0; j < n; ++j) {
        d.add[i * n + j] = local_index[r.add(emb[i], emb[j])];
        d.mul[i * n + j] = local_index[r.mul(emb[i], emb[j])];
      }
    }
    d.zero = local_index[r.zero()];
    d.one = local_index[e];
    d.label = r.label() + "*" + r.element_label(e);
    d.construction = Construction::factor;
    auto f = FiniteRing::from_data(std::move(d));
    std::vector<Element> proj(r.order());
    for (auto x : r.elements()) proj[x] = local_index[r.mul(x, e)];
    auto p = RingHom::verified(r, f, std::move(proj));
    factors.push_back({std::move(f), std::move(p), std::move(emb), e});
  }

  FiniteRing prod = factors.front().ring;
  for (std::size_t i = 1; i < factors.size(); ++i) prod = make_product(prod, factors[i].ring);
  std::vector<Element> to_prod(r.order());
  for (auto x : r.elements()) {
    Element idx = 0;
    for (const auto& f : factors) idx = static_cast<Element>(idx * f.ring.order() + f.projection(x));
    to_prod[x] = idx;
  }
  auto iso = RingHom::verified(r, prod, std::move(to_prod));
  if (!iso.is_injective() || !iso.is_surjective()) {
    throw consistency_error("local factors of " + r.label() + " do not recombine to the ring");
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Torsion

struct TorsionResult {
  bool torsion = true;
  std::optional<Element> non_torsion;  // element of the target with no regular annihilator
};

/// J as an A-module through f is torsion iff every j ∈ J is killed by f(r)
/// for some regular r of A.
inline TorsionResult is_torsion_module(const RingHom& f, const Ideal& j) {
  require_same_ring(f.target(), j.ring(), "torsion test");
  const auto& a = f.source();
  const auto& b = f.target();
  const auto regs = to_vector(regular_elements(a));
  for (auto x : j.elements()) {
    bool killed = false;
    for (auto r : regs) {
      if (b.mul(f(r), x) == b.zero()) {
        killed = true;
        break;
      }
    }
    if (!killed) return {false, x};
  }
  return {true, std::nullopt};
}

}  // namespace amalgam
