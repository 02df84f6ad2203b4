#pragma once

/**
 * @file amalgamation.hpp
 * @brief The amalgamation A ⋈^f J = {(a, f(a) + j) : a ∈ A, j ∈ J} ⊆ A × B
 * and the mechanical checks built on it: the zero-divisor formula, the
 * locality criterion, the shape of the maximal spectrum and the quotient
 * A ≅ (A ⋈^f J)/(0 × J).
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/classify.hpp"
#include "amalgam/hom.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/quotient.hpp"
#include "amalgam/status.hpp"

namespace amalgam {

struct AmalgamRing {
  RingHom hom;  // f : A → B
  Ideal ideal;  // J ⊆ B
  FiniteRing ring;
  std::vector<Element> j_part;  // element ↦ j = b − f(a)
  RingHom first_projection;     // (a, b) ↦ a
  RingHom second_projection;    // (a, b) ↦ b

  const FiniteRing& base() const { return hom.source(); }
  const FiniteRing& target() const { return hom.target(); }
  Element a_part(Element x) const { return ring.coords()[x].first; }
  Element b_part(Element x) const { return ring.coords()[x].second; }

  /// Element (a, f(a) + j).
  Element element(Element a, Element j) const {
    const auto b = target().add(hom(a), j);
    return lookup[a * target().order() + b];
  }

  /// Element with coordinates (a, b), if it lies in the amalgam.
  std::optional<Element> find(Element a, Element b) const {
    const auto e = lookup[a * target().order() + b];
    if (e == kAbsent) return std::nullopt;
    return e;
  }

  static constexpr Element kAbsent = 0xFFFFFFFFU;
  std::vector<Element> lookup;  // a·|B| + b ↦ element, or kAbsent
};

inline AmalgamRing make_amalgamation(const RingHom& f, const Ideal& j, std::string label = {}) {
  const auto& a = f.source();
  const auto& b = f.target();
  require_same_ring(b, j.ring(), "amalgamation");
  if (j.is_whole()) throw improper_ideal_error("amalgamation needs a proper ideal; " + j.describe() + " is all of " + b.label());
  const auto n = a.order() * j.size();
  if (n > 65536) throw size_cap_error("amalgamation of order " + std::to_string(n) + " is too large");

  const auto jelems = j.elements();
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(n);
  for (auto x : a.elements()) {
    const auto start = pairs.size();
    for (auto y : jelems) pairs.emplace_back(x, b.add(f(x), y));
    std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(start), pairs.end());
  }
  std::vector<Element> lookup(a.order() * b.order(), AmalgamRing::kAbsent);
  for (std::size_t i = 0; i < n; ++i) lookup[pairs[i].first * b.order() + pairs[i].second] = static_cast<Element>(i);
  auto at = [&](Element x, Element y) {
    const auto e = lookup[x * b.order() + y];
    if (e == AmalgamRing::kAbsent) {
      throw consistency_error("amalgam carrier is not closed: (" + a.element_label(x) + "," + b.element_label(y) + ")");
    }
    return e;
  };

  FiniteRing::Data d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.neg.resize(n);
  d.element_labels.resize(n);
  for (Element i = 0; i < n; ++i) {
    const auto [x, y] = pairs[i];
    d.neg[i] = at(a.neg(x), b.neg(y));
    d.element_labels[i] = "(" + a.element_label(x) + "," + b.element_label(y) + ")";
    for (Element k = 0; k < n; ++k) {
      const auto [u, v] = pairs[k];
      d.add[i * n + k] = at(a.add(x, u), b.add(y, v));
      d.mul[i * n + k] = at(a.mul(x, u), b.mul(y, v));
    }
  }
  d.zero = at(a.zero(), b.zero());
  d.one = at(a.one(), b.one());
  d.label = label.empty() ? "(" + a.label() + " ⋈^f " + j.describe() + ")" : std::move(label);
  d.construction = Construction::amalgamation;
  d.components = {a, b};
  d.coords = pairs;
  auto ring = FiniteRing::from_data(std::move(d));

  std::vector<Element> jp(n);
  for (Element i = 0; i < n; ++i) jp[i] = b.sub(pairs[i].second, f(pairs[i].first));
  auto p1 = projection_hom(ring, 0);
  auto p2 = projection_hom(ring, 1);
  return AmalgamRing{f, j, std::move(ring), std::move(jp), std::move(p1), std::move(p2), std::move(lookup)};
}

/// A ⋈ I, the amalgamation along the identity of A.
inline AmalgamRing make_duplication(const FiniteRing& a, const Ideal& i) {
  return make_amalgamation(identity_hom(a), i, "(" + a.label() + " ⋈ " + i.describe() + ")");
}

/// {0} × J as an ideal of the amalgam.
inline Ideal zero_times_j(const AmalgamRing& am) {
  ElementSet s(am.ring.order());
  for (auto x : am.ring.elements()) {
    if (am.a_part(x) == am.base().zero()) s.set(x);
  }
  return ideal_from_set(am.ring, std::move(s));
}

// ---------------------------------------------------------------------------
// Zero divisors

struct Prop21Sets {
  ElementSet s1, s2, s3, s4;
  ElementSet all() const { return s1 | s2 | s3 | s4; }
};

/// The four pieces of the zero-divisor formula:
///   S1 = Z(A) ⋈^f J,  S2 = {(a,0) : f(a) ∈ J},  S3 = {(0,x) : x ∈ J},
///   S4 = {(a, f(a)+i) : a regular, (f(a)+i)·j = 0 for some 0 ≠ j ∈ J}.
inline Prop21Sets prop21_sets(const AmalgamRing& am) {
  const auto& a = am.base();
  const auto& b = am.target();
  const auto n = am.ring.order();
  const auto za = zero_divisors(a);
  const auto jelems = am.ideal.elements();
  Prop21Sets s{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
  for (auto x : am.ring.elements()) {
    const auto ax = am.a_part(x);
    const auto bx = am.b_part(x);
    if (za.test(ax)) s.s1.set(x);
    if (ax == a.zero()) s.s3.set(x);
    if (!za.test(ax)) {
      for (auto j : jelems) {
        if (j != b.zero() && b.mul(bx, j) == b.zero()) {
          s.s4.set(x);
          break;
        }
      }
    }
  }
  for (auto x : a.elements()) {
    if (am.ideal.contains(am.hom(x))) {
      // (x, 0) = (x, f(x) + j) with j = −f(x) ∈ J.
      s.s2.set(am.element(x, b.neg(am.hom(x))));
    }
  }
  return s;
}

inline ElementSet prop21_rhs(const AmalgamRing& am) { return prop21_sets(am).all(); }

struct Prop21Verdict {
  bool hyp_a = false;  // J ⊆ f(A)
  bool hyp_b = false;  // J torsion over A
  bool hyp_c = false;  // J² = 0
  ElementSet exhaustive;
  ElementSet rhs;
  std::vector<Element> only_exhaustive;  // in Z(amalgam) but not the formula
  std::vector<Element> only_rhs;         // in the formula but not Z(amalgam)
  bool equal = false;
  bool subset = false;  // Z(amalgam) ⊆ formula
  Status status = Status::info;

  bool any_hypothesis() const { return hyp_a || hyp_b || hyp_c; }
};

inline Prop21Verdict check_prop21(const AmalgamRing& am) {
  Prop21Verdict v;
  const auto img = am.hom.image();
  v.hyp_a = am.ideal.members().is_subset_of(img);
  v.hyp_b = is_torsion_module(am.hom, am.ideal).torsion;
  v.hyp_c = ideal_product(am.ideal, am.ideal).is_zero();
  v.exhaustive = zero_divisors(am.ring);
  v.rhs = prop21_rhs(am);
  v.only_exhaustive = to_vector(v.exhaustive - v.rhs);
  v.only_rhs = to_vector(v.rhs - v.exhaustive);
  v.equal = v.exhaustive == v.rhs;
  v.subset = v.exhaustive.is_subset_of(v.rhs);
  v.status = v.any_hypothesis() ? status_of(v.equal) : Status::info;
  return v;
}

// ---------------------------------------------------------------------------
// Locality

struct Lemma23Verdict {
  bool amalgam_local = false;
  bool base_local = false;
  bool j_in_radical = false;
  bool holds = false;
  std::vector<Element> j_outside_radical;  // elements of J not in Rad(B)
};

inline Lemma23Verdict check_lemma23(const AmalgamRing& am, LatticeStore& store) {
  Lemma23Verdict v;
  v.amalgam_local = classify(am.ring, store).is_local;
  v.base_local = classify(am.base(), store).is_local;
  const auto cb = classify(am.target(), store);
  v.j_outside_radical = to_vector(am.ideal.members() - cb.radical.members());
  v.j_in_radical = v.j_outside_radical.empty();
  v.holds = v.amalgam_local == (v.base_local && v.j_in_radical);
  return v;
}

inline Lemma23Verdict check_lemma23(const AmalgamRing& am) {
  LatticeStore store;
  return check_lemma23(am, store);
}

struct MaximalIdealForm {
  Ideal ideal;            // maximal ideal of the amalgam
  bool over_base = true;  // m ⋈^f J (true) or Q̄^f (false)
  Ideal source;           // m ⊆ A or Q ⊆ B
};

struct MaxSpectrumVerdict {
  std::vector<MaximalIdealForm> matched;
  std::vector<Ideal> unmatched;          // maximal ideals of the amalgam with neither form
  std::vector<Ideal> non_maximal_forms;  // predicted sets that are not maximal ideals
  std::size_t qbar_count = 0;
  bool holds = false;
};

/// Max(A ⋈^f J) = {m ⋈^f J : m ∈ Max(A)} ∪ {Q̄^f : Q ∈ Max(B), Q ⊉ J}.
inline MaxSpectrumVerdict max_spectrum_pattern(const AmalgamRing& am, LatticeStore& store) {
  MaxSpectrumVerdict v;
  const auto& r = am.ring;
  const auto ca = classify(am.base(), store);
  const auto cb = classify(am.target(), store);
  const auto cr = classify(r, store);

  std::vector<std::pair<ElementSet, MaximalIdealForm>> predicted;
  for (const auto& m : ca.maximal_ideals) {
    ElementSet s(r.order());
    for (auto x : r.elements()) {
      if (m.contains(am.a_part(x))) s.set(x);
    }
    predicted.push_back({s, MaximalIdealForm{ideal_from_set(r, s), true, m}});
  }
  for (const auto& q : cb.maximal_ideals) {
    if (am.ideal.is_subset_of(q)) continue;
    ElementSet s(r.order());
    for (auto x : r.elements()) {
      if (q.contains(am.b_part(x))) s.set(x);
    }
    predicted.push_back({s, MaximalIdealForm{ideal_from_set(r, s), false, q}});
    ++v.qbar_count;
  }
  for (const auto& mx : cr.maximal_ideals) {
    auto it = std::ranges::find_if(predicted, [&](const auto& p) { return p.first == mx.members(); });
    if (it == predicted.end()) {
      v.unmatched.push_back(mx);
    } else {
      v.matched.push_back(it->second);
    }
  }
  for (const auto& [s, form] : predicted) {
    auto it = std::ranges::find_if(cr.maximal_ideals, [&](const Ideal& m) { return m.members() == s; });
    if (it == cr.maximal_ideals.end()) v.non_maximal_forms.push_back(form.ideal);
  }
  v.holds = v.unmatched.empty() && v.non_maximal_forms.empty();
  return v;
}

inline MaxSpectrumVerdict max_spectrum_pattern(const AmalgamRing& am) {
  LatticeStore store;
  return max_spectrum_pattern(am, store);
}

// ---------------------------------------------------------------------------
// Quotient by {0} × J

struct QuotientIsoVerdict {
  bool well_defined = false;
  bool bijective = false;
  bool homomorphism = false;
  bool holds = false;
  std::string detail;
};

/// Checks that (a, f(a)+j) + (0 × J) ↦ a is a well-defined ring isomorphism
/// (A ⋈^f J)/(0 × J) → A.
inline QuotientIsoVerdict quotient_iso_check(const AmalgamRing& am) {
  QuotientIsoVerdict v;
  const auto k = zero_times_j(am);
  const auto q = make_quotient(am.ring, k);
  const auto& a = am.base();
  constexpr Element kUnset = 0xFFFFFFFFU;
  std::vector<Element> map(q.ring.order(), kUnset);
  v.well_defined = true;
  for (auto x : am.ring.elements()) {
    const auto c = q.projection(x);
    if (map[c] == kUnset) {
      map[c] = am.a_part(x);
    } else if (map[c] != am.a_part(x)) {
      v.well_defined = false;
      v.detail = "coset of " + am.ring.describe(x) + " has two first coordinates";
      return v;
    }
  }
  try {
    auto h = RingHom::verified(q.ring, a, map);
    v.homomorphism = true;
    v.bijective = h.is_injective() && h.is_surjective();
    if (!v.bijective) v.detail = "candidate map is not bijective";
  } catch (const axiom_error& e) {
    v.detail = e.what();
  }
  v.holds = v.well_defined && v.homomorphism && v.bijective;
  return v;
}

}  // namespace amalgam
