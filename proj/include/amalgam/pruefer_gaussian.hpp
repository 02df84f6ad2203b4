#pragma once

/**
 * @file pruefer_gaussian.hpp
 * @brief Deciders for the arithmetical ⇒ Gaussian ⇒ Prüfer ladder on
 * finite rings, the polynomial-content oracle, and the bounded check that
 * Gaussian lifted polynomials over an amalgam descend to the base ring.
 *
 * Gaussianness is decided through the local two-element criterion:
 * a local ring is Gaussian iff for all a, b
 *   <a,b>² = <a²> or <a,b>² = <b²>, and
 *   if ab = 0 and <a,b>² = <a²> then b² = 0 (symmetrically for <b²>).
 * A finite ring is Gaussian iff each local factor is. The content search
 * c(fg) = c(f)c(g) is an independent cross-check, not the decider.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "amalgam/amalgamation.hpp"
#include "amalgam/classify.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/lattice_cache.hpp"
#include "amalgam/polynomial.hpp"

namespace amalgam {

// ---------------------------------------------------------------------------
// Gaussian

struct GaussianPairVerdict {
  bool holds = true;
  bool square_is_a2 = false;  // <a,b>² = <a²>
  bool square_is_b2 = false;  // <a,b>² = <b²>
  bool ab_zero = false;
  std::string reason;
};

/// Two-element Gaussian criterion. The ring must be local; the caller
/// guarantees it.
inline GaussianPairVerdict gaussian_pair_verdict(const FiniteRing& r, Element a, Element b) {
  GaussianPairVerdict v;
  const auto a2 = r.mul(a, a), b2 = r.mul(b, b), ab = r.mul(a, b);
  const auto sq = ideal_closure(r, {a2, ab, b2});
  v.square_is_a2 = sq == ideal_closure(r, {a2});
  v.square_is_b2 = sq == ideal_closure(r, {b2});
  v.ab_zero = ab == r.zero();
  if (!v.square_is_a2 && !v.square_is_b2) {
    v.holds = false;
    v.reason = "<a,b>^2 equals neither <a^2> nor <b^2>";
  } else if (v.ab_zero && v.square_is_a2 && b2 != r.zero()) {
    v.holds = false;
    v.reason = "ab = 0 and <a,b>^2 = <a^2> but b^2 != 0";
  } else if (v.ab_zero && v.square_is_b2 && a2 != r.zero()) {
    v.holds = false;
    v.reason = "ab = 0 and <a,b>^2 = <b^2> but a^2 != 0";
  }
  return v;
}

struct GaussianWitness {
  std::size_t factor = 0;
  std::string factor_label;
  Element a = 0;  // indices in the original ring
  Element b = 0;
  std::string reason;
};

struct GaussianDecision {
  bool gaussian = true;
  std::optional<GaussianWitness> witness;
};

/// Runs the pair criterion on every local factor. The witness is the first
/// failing pair (a ≤ b in the factor's carrier order).
inline GaussianDecision is_gaussian(const FiniteRing& r, std::size_t cap = kDefaultCap) {
  const auto factors = local_decomposition(r, cap);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k].ring;
    for (auto a : f.elements()) {
      for (auto b = a; b < f.order(); ++b) {
        auto v = gaussian_pair_verdict(f, a, b);
        if (!v.holds) {
          return {false, GaussianWitness{k, f.label(), factors[k].embedding[a], factors[k].embedding[b], v.reason}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

struct ContentOracleResult {
  std::optional<std::pair<Coefficients, Coefficients>> violation;
  bool exhaustive = false;
  std::uint64_t pairs_tested = 0;
  std::size_t representatives = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000ULL;

namespace detail {

/// Coefficient vectors of the given length, one per orbit of the unit
/// group acting by scaling (the lexicographically least member). The zero
/// vector is skipped.
inline std::vector<Coefficients> scaling_orbit_representatives(const FiniteRing& r, std::size_t length,
                                                               const std::vector<Element>& units) {
  std::vector<Coefficients> reps;
  Coefficients v(length, 0);
  const auto n = static_cast<Element>(r.order());
  Coefficients scaled(length);
  while (true) {
    if (!is_zero_poly(r, v)) {
      bool least = true;
      for (auto u : units) {
        for (std::size_t i = 0; i < length; ++i) scaled[i] = r.mul(u, v[i]);
        if (std::ranges::lexicographical_compare(scaled, v)) {
          least = false;
          break;
        }
      }
      if (least) reps.push_back(v);
    }
    std::size_t k = 0;
    while (k < length && ++v[k] == n) v[k++] = 0;
    if (k == length) break;
  }
  return reps;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (~0ULL) / base) return ~0ULL;
    out *= base;
  }
  return out;
}

}  // namespace detail

/// Searches polynomial pairs f, g of degree ≤ degree_bound for
/// c(fg) ≠ c(f)c(g). Scaling f or g by a unit changes neither side, so the
/// exhaustive search runs over unordered pairs of scaling-orbit
/// representatives; it is used whenever that pair count fits the budget.
/// Otherwise `budget` pairs are drawn with the given seed. A violation is
/// re-verified with direct ideal arithmetic before it is returned.
inline ContentOracleResult gaussian_content_oracle(const FiniteRing& r, std::size_t degree_bound, std::uint64_t budget,
                                                   std::uint64_t seed, LatticeStore& store) {
  ContentOracleResult res;
  IdealLattice lat = store.lattice(r);
  const auto length = degree_bound + 1;
  const auto units = to_vector(unit_elements(r));

  Coefficients prod(2 * length - 1);
  auto violates = [&](const Coefficients& f, IdealLattice::Id cf, const Coefficients& g, IdealLattice::Id cg) {
    std::ranges::fill(prod, r.zero());
    for (std::size_t i = 0; i < length; ++i) {
      if (f[i] == r.zero()) continue;
      for (std::size_t j = 0; j < length; ++j) prod[i + j] = r.add(prod[i + j], r.mul(f[i], g[j]));
    }
    return lat.generated(prod) != lat.product(cf, cg);
  };

  constexpr std::uint64_t kMaxScan = 1ULL << 22;
  const auto vectors = detail::saturating_pow(r.order(), length);
  std::vector<Coefficients> reps;
  if (vectors <= kMaxScan) reps = detail::scaling_orbit_representatives(r, length, units);
  const std::uint64_t pairs = reps.size() * (reps.size() + 1) / 2;
  res.representatives = reps.size();

  if (!reps.empty() && pairs <= budget) {
    res.exhaustive = true;
    std::vector<IdealLattice::Id> content_id(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) content_id[i] = lat.generated(reps[i]);
    for (std::size_t i = 0; i < reps.size() && !res.violation; ++i) {
      for (std::size_t j = i; j < reps.size(); ++j) {
        ++res.pairs_tested;
        if (violates(reps[i], content_id[i], reps[j], content_id[j])) {
          res.violation = {reps[i], reps[j]};
          break;
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(r.order() - 1));
    Coefficients f(length), g(length);
    for (std::uint64_t t = 0; t < budget; ++t) {
      for (auto& c : f) c = pick(rng);
      for (auto& c : g) c = pick(rng);
      ++res.pairs_tested;
      if (violates(f, lat.generated(f), g, lat.generated(g))) {
        res.violation = {f, g};
        break;
      }
    }
  }

  if (res.violation) {
    const auto& [f, g] = *res.violation;
    const auto lhs = content(r, poly_mul(r, f, g));
    const auto rhs = ideal_product(content(r, f), content(r, g));
    if (lhs == rhs) throw consistency_error("content oracle reported a pair that satisfies c(fg) = c(f)c(g)");
  }
  return res;
}

inline ContentOracleResult gaussian_content_oracle(const FiniteRing& r, std::size_t degree_bound, std::uint64_t budget,
                                                   std::uint64_t seed = 0) {
  LatticeStore store;
  return gaussian_content_oracle(r, degree_bound, budget, seed, store);
}

// ---------------------------------------------------------------------------
// Arithmetical

struct ArithmeticalDecision {
  bool arithmetical = true;
  std::optional<std::array<Ideal, 3>> distributivity_witness;  // I ∩ (J + K) ≠ (I ∩ J) + (I ∩ K)
  std::optional<std::pair<Element, Element>> incomparable;     // principal ideals not comparable in a local factor
};

/// Primary route: distributivity over all ideal triples. Cross-check: every
/// local factor has totally ordered principal ideals. The routes must agree.
inline ArithmeticalDecision is_arithmetical(const FiniteRing& r, LatticeStore& store) {
  ArithmeticalDecision d;
  auto lat = store.lattice(r);
  const auto n = lat.size();
  bool distributive = true;
  for (IdealLattice::Id i = 0; i < n && distributive; ++i) {
    const auto& mi = lat[i].members();
    for (IdealLattice::Id j = 0; j < n && distributive; ++j) {
      for (IdealLattice::Id k = j + 1; k < n; ++k) {
        const auto& mj = lat[j].members();
        const auto& mk = lat[k].members();
        if (mj.is_subset_of(mk) || mk.is_subset_of(mj)) continue;
        const auto lhs = mi & lat[lat.sum(j, k)].members();
        ElementSet rhs = mi & mj;
        auto list = to_vector(rhs);
        for (auto x : to_vector(mi & mk)) detail::extend_subgroup(r, rhs, list, x);
        if (lhs != rhs) {
          distributive = false;
          d.distributivity_witness = std::array<Ideal, 3>{lat[i], lat[j], lat[k]};
          break;
        }
      }
    }
  }

  bool chains = true;
  for (const auto& f : local_decomposition(r)) {
    std::vector<ElementSet> principal;
    principal.reserve(f.ring.order());
    for (auto x : f.ring.elements()) principal.push_back(ideal_closure(f.ring, {x}).members());
    for (auto x : f.ring.elements()) {
      for (auto y = x + 1; y < f.ring.order() && chains; ++y) {
        if (!principal[x].is_subset_of(principal[y]) && !principal[y].is_subset_of(principal[x])) {
          chains = false;
          d.incomparable = {f.embedding[x], f.embedding[y]};
        }
      }
      if (!chains) break;
    }
    if (!chains) break;
  }
  if (distributive != chains) {
    throw consistency_error("arithmetical test of " + r.label() + ": distributivity and local chain routes disagree");
  }
  d.arithmetical = distributive;
  return d;
}

inline ArithmeticalDecision is_arithmetical(const FiniteRing& r) {
  LatticeStore store;
  return is_arithmetical(r, store);
}

// ---------------------------------------------------------------------------
// Prüfer

struct PrueferCertificate {
  bool pruefer = true;
  std::size_t two_generated_visited = 0;
  std::size_t regular_visited = 0;
  bool every_regular_is_whole = true;  // every regular two-generated ideal equals R
  std::optional<std::pair<Element, Element>> witness;  // non-invertible regular (a, b)
};

/// Visits every two-generated ideal (a, b), a ≤ b, and checks that the
/// regular ones are invertible.
inline PrueferCertificate is_pruefer_finite(const FiniteRing& r, std::size_t cap = kDefaultCap) {
  if (r.order() > cap) throw size_cap_error("Prüfer test of " + r.label() + " exceeds the cap");
  PrueferCertificate c;
  const auto regs = regular_elements(r);
  const auto units = unit_elements(r);
  for (auto a : r.elements()) {
    for (auto b = a; b < r.order(); ++b) {
      const auto i = ideal_closure(r, {a, b});
      ++c.two_generated_visited;
      if (!i.members().intersects(regs)) continue;
      ++c.regular_visited;
      if (!i.is_whole()) c.every_regular_is_whole = false;
      if (!is_invertible(i, units) && c.pruefer) {
        c.pruefer = false;
        c.witness = {a, b};
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Lifted polynomials over an amalgam

struct Lemma24Verdict {
  Coefficients base_poly;    // f = Σ a_i x^i over A
  Coefficients lifted_poly;  // F = Σ (a_i, f(a_i)) x^i over the amalgam
  bool base_bounded_gaussian = true;
  bool lifted_bounded_gaussian = true;
  std::optional<Coefficients> base_failure;    // h over A with c(fh) ≠ c(f)c(h)
  std::optional<Coefficients> lifted_failure;  // H over the amalgam with c(FH) ≠ c(F)c(H)
  bool base_exhaustive = false;
  bool lifted_exhaustive = false;
  std::uint64_t base_tests = 0;
  std::uint64_t lifted_tests = 0;
  bool implication_holds = true;  // lifted bounded-Gaussian ⇒ base bounded-Gaussian
};

inline constexpr std::uint64_t kDefaultLemma24Budget = 4096;

/// Bounded consistency check of "F Gaussian over A ⋈^f J ⇒ f Gaussian over A".
/// A polynomial counts as bounded-Gaussian when the content equation holds
/// against every test polynomial of degree ≤ degree_bound: all of them when
/// the count fits the budget, otherwise `budget` draws. The lifted side is
/// tested against the lifts of every base test polynomial as well as its own
/// draws.
inline Lemma24Verdict check_lemma24(const AmalgamRing& am, const Coefficients& coeffs, std::size_t degree_bound,
                                    std::uint64_t budget, std::uint64_t seed, LatticeStore& store) {
  Lemma24Verdict v;
  const auto& a = am.base();
  const auto& r = am.ring;
  for (auto c : coeffs) {
    if (c >= a.order()) throw error("coefficient " + std::to_string(c) + " is not an element of " + a.label());
  }
  v.base_poly = coeffs;
  for (auto c : coeffs) v.lifted_poly.push_back(am.element(c, am.target().zero()));
  auto la = store.lattice(a);
  auto lr = store.lattice(r);
  const auto cf = la.generated(v.base_poly);
  const auto cF = lr.generated(v.lifted_poly);
  const auto length = degree_bound + 1;
  std::mt19937_64 rng(seed);

  auto lift = [&](const Coefficients& h) {
    Coefficients out;
    for (auto c : h) out.push_back(am.element(c, am.target().zero()));
    return out;
  };
  auto test_base = [&](const Coefficients& h) {
    ++v.base_tests;
    if (la.generated(poly_mul(a, v.base_poly, h)) != la.product(cf, la.generated(h))) {
      v.base_bounded_gaussian = false;
      if (!v.base_failure) v.base_failure = h;
    }
  };
  auto test_lifted = [&](const Coefficients& h) {
    ++v.lifted_tests;
    if (lr.generated(poly_mul(r, v.lifted_poly, h)) != lr.product(cF, lr.generated(h))) {
      v.lifted_bounded_gaussian = false;
      if (!v.lifted_failure) v.lifted_failure = h;
    }
  };
  auto for_each_test = [&](const FiniteRing& ring, bool& exhaustive, auto&& body) {
    if (detail::saturating_pow(ring.order(), length) <= budget) {
      exhaustive = true;
      Coefficients h(length, 0);
      const auto n = static_cast<Element>(ring.order());
      while (true) {
        body(h);
        std::size_t k = 0;
        while (k < length && ++h[k] == n) h[k++] = 0;
        if (k == length) break;
      }
    } else {
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(ring.order() - 1));
      Coefficients h(length);
      for (std::uint64_t t = 0; t < budget; ++t) {
        for (auto& c : h) c = pick(rng);
        body(h);
      }
    }
  };

  for_each_test(a, v.base_exhaustive, [&](const Coefficients& h) {
    test_base(h);
    test_lifted(lift(h));
  });
  for_each_test(r, v.lifted_exhaustive, test_lifted);
  v.implication_holds = !v.lifted_bounded_gaussian || v.base_bounded_gaussian;
  return v;
}

inline Lemma24Verdict check_lemma24(const AmalgamRing& am, const Coefficients& coeffs, std::size_t degree_bound,
                                    std::uint64_t budget = kDefaultLemma24Budget, std::uint64_t seed = 0) {
  LatticeStore store;
  return check_lemma24(am, coeffs, degree_bound, budget, seed, store);
}

// ---------------------------------------------------------------------------
// The ladder

struct PropertyReport {
  std::string label;
  std::size_t order = 0;
  bool is_local = false;
  bool arithmetical = false;
  bool gaussian = false;
  bool pruefer = false;
  /// Certificate per failed property, in construction-trace form.
  std::map<std::string, std::vector<std::string>> witnesses;
  ArithmeticalDecision arithmetical_detail;
  GaussianDecision gaussian_detail;
  PrueferCertificate pruefer_detail;
};

/// Decides the three properties, asserts arithmetical ⇒ Gaussian ⇒ Prüfer
/// (hierarchy_violation_error otherwise) and attaches witnesses.
inline PropertyReport check_hierarchy(const FiniteRing& r, LatticeStore& store) {
  PropertyReport p;
  p.label = r.label();
  p.order = r.order();
  p.is_local = classify(r, store).is_local;
  p.arithmetical_detail = is_arithmetical(r, store);
  p.gaussian_detail = is_gaussian(r);
  p.pruefer_detail = is_pruefer_finite(r);
  p.arithmetical = p.arithmetical_detail.arithmetical;
  p.gaussian = p.gaussian_detail.gaussian;
  p.pruefer = p.pruefer_detail.pruefer;

  if (!p.arithmetical) {
    auto& w = p.witnesses["arithmetical"];
    if (const auto& t = p.arithmetical_detail.distributivity_witness) {
      w.push_back("I ∩ (J + K) != (I ∩ J) + (I ∩ K) for I = " + (*t)[0].describe() + ", J = " + (*t)[1].describe() +
                  ", K = " + (*t)[2].describe());
    }
    if (const auto& c = p.arithmetical_detail.incomparable) {
      w.push_back("incomparable principal ideals <" + r.describe(c->first) + "> and <" + r.describe(c->second) + ">");
    }
  }
  if (!p.gaussian) {
    const auto& g = *p.gaussian_detail.witness;
    p.witnesses["gaussian"].push_back("a = " + r.describe(g.a) + ", b = " + r.describe(g.b) + " in factor " +
                                      g.factor_label + ": " + g.reason);
  }
  if (!p.pruefer) {
    const auto& [a, b] = *p.pruefer_detail.witness;
    p.witnesses["pruefer"].push_back("regular ideal (" + r.describe(a) + ", " + r.describe(b) + ") is not invertible");
  }
  if ((p.arithmetical && !p.gaussian) || (p.gaussian && !p.pruefer)) {
    throw hierarchy_violation_error("property ladder violated on " + r.label());
  }
  return p;
}

inline PropertyReport check_hierarchy(const FiniteRing& r) {
  LatticeStore store;
  return check_hierarchy(r, store);
}

}  // namespace amalgam
