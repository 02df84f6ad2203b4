#pragma once

/**
 * @file checks.hpp
 * @brief Each named check as a NamedCheck with printable witnesses.
 */

#include <string>
#include <vector>

#include "amalgam/amalgamation.hpp"
#include "amalgam/exact_local.hpp"
#include "amalgam/pruefer_gaussian.hpp"
#include "amalgam/report.hpp"

namespace amalgam {

/// "label [#i] in ring".
inline std::string trace(const FiniteRing& r, Element x) { return r.describe(x) + " in " + r.label(); }

inline std::string trace_list(const FiniteRing& r, const std::vector<Element>& xs, std::size_t limit = 8) {
  std::string s;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) s += (i ? ", " : "") + r.describe(xs[i]);
  if (xs.size() > limit) s += ", ... (" + std::to_string(xs.size()) + " total)";
  return s + " in " + r.label();
}

inline NamedCheck prop21_check(const AmalgamRing& am) {
  const auto v = check_prop21(am);
  NamedCheck c{"prop21 " + am.ring.label(), v.status, {}, {}};
  std::string hyps;
  if (v.hyp_a) hyps += " (a)";
  if (v.hyp_b) hyps += " (b)";
  if (v.hyp_c) hyps += " (c)";
  c.notes.push_back("hypotheses:" + (hyps.empty() ? std::string(" none") : hyps));
  c.notes.push_back("|Z| = " + std::to_string(v.exhaustive.count()) + ", |S1 u S2 u S3 u S4| = " +
                    std::to_string(v.rhs.count()));
  if (!v.only_exhaustive.empty()) c.witnesses.push_back("zero divisors outside the formula: " + trace_list(am.ring, v.only_exhaustive));
  if (!v.only_rhs.empty()) c.witnesses.push_back("formula elements that are regular: " + trace_list(am.ring, v.only_rhs));
  return c;
}

inline NamedCheck lemma23_check(const AmalgamRing& am, LatticeStore& store) {
  const auto v = check_lemma23(am, store);
  NamedCheck c{"lemma23 " + am.ring.label(), status_of(v.holds), {}, {}};
  auto tf = [](bool b) { return std::string(b ? "true" : "false"); };
  c.notes.push_back("amalgam local " + tf(v.amalgam_local) + ", A local " + tf(v.base_local) + ", J in Rad(B) " +
                    tf(v.j_in_radical));
  if (!v.j_outside_radical.empty()) c.notes.push_back("J outside Rad(B): " + trace_list(am.target(), v.j_outside_radical));
  if (!v.holds) c.witnesses.push_back("biconditional fails on " + am.ring.label());
  return c;
}

inline NamedCheck maxspec_check(const AmalgamRing& am, LatticeStore& store) {
  const auto v = max_spectrum_pattern(am, store);
  NamedCheck c{"maxspec " + am.ring.label(), status_of(v.holds), {}, {}};
  for (const auto& m : v.matched) {
    c.notes.push_back((m.over_base ? "m x J form from " : "Qbar form from ") + m.source.describe() + ": " +
                      m.ideal.describe());
  }
  for (const auto& u : v.unmatched) c.witnesses.push_back("maximal ideal of neither form: " + u.describe());
  for (const auto& u : v.non_maximal_forms) c.witnesses.push_back("predicted ideal is not maximal: " + u.describe());
  return c;
}

inline NamedCheck quotient_iso_named_check(const AmalgamRing& am) {
  const auto v = quotient_iso_check(am);
  NamedCheck c{"quotient-iso " + am.ring.label(), status_of(v.holds), {}, {}};
  if (!v.holds) c.witnesses.push_back(v.detail.empty() ? "isomorphism check failed" : v.detail);
  return c;
}

inline NamedCheck lemma24_check(const AmalgamRing& am, const Coefficients& coeffs, std::size_t degree,
                                std::uint64_t budget, std::uint64_t seed, LatticeStore& store) {
  const auto v = check_lemma24(am, coeffs, degree, budget, seed, store);
  NamedCheck c{"lemma24 " + am.ring.label() + " f = " + describe_poly(am.base(), coeffs), status_of(v.implication_holds),
               {}, {}};
  auto tf = [](bool b) { return std::string(b ? "true" : "false"); };
  c.notes.push_back("lifted F = " + describe_poly(am.ring, v.lifted_poly) + " bounded-Gaussian " +
                    tf(v.lifted_bounded_gaussian) + " (" + std::to_string(v.lifted_tests) + " tests)");
  c.notes.push_back("base f bounded-Gaussian " + tf(v.base_bounded_gaussian) + " (" + std::to_string(v.base_tests) +
                    (v.base_exhaustive ? " tests, exhaustive)" : " tests, sampled)"));
  if (v.base_failure) c.notes.push_back("base failure h = " + describe_poly(am.base(), *v.base_failure));
  if (!v.implication_holds) {
    c.witnesses.push_back("F passes every test but f fails against h = " + describe_poly(am.base(), *v.base_failure));
  }
  return c;
}

inline NamedCheck cor27_check(std::int64_t p, int k) {
  const auto v = corollary27_condition(p, k);
  const auto search = pruefer_witness_search(p, k, kDefaultSearchBound);
  // Expected: the condition fails exactly when the duplication is not Prüfer.
  const bool consistent = (!v.holds) == search.has_value();
  NamedCheck c{"cor27 p=" + std::to_string(p) + " k=" + exponent_to_string(k), status_of(consistent), {}, {}};
  c.notes.push_back(std::string("I = aI for all sampled a: ") + (v.holds ? "true" : "false"));
  if (v.witness) {
    c.notes.push_back("a = " + v.witness->to_string() + ": aI = p^" + std::to_string(v.witness_product_exponent) +
                      " Z_(p) != p^" + exponent_to_string(k) + " Z_(p)");
  }
  if (search) {
    c.notes.push_back("regular pair with mutual non-divisibility: x = " + search->x.to_string() +
                      ", y = " + search->y.to_string());
  }
  if (!consistent) c.witnesses.push_back("condition and witness search disagree");
  return c;
}

inline NamedCheck thm22_check(std::int64_t p, int k, std::int64_t bound) {
  const auto v = check_thm22_instance(p, k, bound);
  NamedCheck c{"thm22 p=" + std::to_string(p) + " k=" + exponent_to_string(k), status_of(v.consistent), {}, {}};
  c.notes.push_back("A = Z_(p) Pruefer: true (valuation domain)");
  c.notes.push_back(std::string("J = f(a)J for all sampled a: ") + (v.condition.holds ? "true" : "false"));
  if (v.witness) {
    c.notes.push_back("not Pruefer: x = " + v.witness->x.to_string() + " regular, y = " + v.witness->y.to_string() +
                      ", neither divides the other");
  } else {
    c.notes.push_back("no witness with height <= " + std::to_string(bound));
  }
  if (!v.consistent) c.witnesses.push_back("right-hand side and witness search disagree");
  return c;
}

inline NamedCheck example28_check(std::int64_t p) {
  const auto v = example28_structural(p);
  NamedCheck c{"example28 p=" + std::to_string(p), status_of(v.holds), {}, {}};
  c.notes.push_back("f(A) n J = 0: " + std::string(v.image_meets_j_trivially ? "true" : "false"));
  c.notes.push_back("(0,1) in J outside f(A): " + std::string(v.j_not_in_image ? "true" : "false"));
  c.notes.push_back("f(" + std::to_string(p) + ")*(0,1) = (0,0) with " + std::to_string(p) +
                    " regular: " + (v.regular_maps_to_zero_divisor ? "true" : "false"));
  if (!v.holds) c.witnesses.push_back(v.detail.empty() ? "structural claim failed" : v.detail);
  return c;
}

}  // namespace amalgam
