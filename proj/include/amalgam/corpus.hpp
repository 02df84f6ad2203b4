#pragma once

/**
 * @file corpus.hpp
 * @brief The built-in instance suite and the numbered acceptance criteria
 * run over it. Shared by the command-line `corpus` command and the
 * acceptance test binary.
 */

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "amalgam/checks.hpp"
#include "amalgam/spec.hpp"

namespace amalgam {

struct NamedSpec {
  std::string name;
  RingSpec spec;
};

namespace corpus {

using K = HomSpec::Kind;

inline RingSpec z(std::uint64_t n) { return zmod_spec(n); }

inline RingSpec id_amalgam(std::uint64_t n, std::vector<Element> j) {
  return amalgamation_spec(z(n), z(n), hom_spec(K::identity), std::move(j));
}

/// Z/2 ⋉ Z/2.
inline RingSpec dual_numbers_f2() { return trivial_extension_spec(z(2), z(2), hom_spec(K::identity)); }

// Zero-divisor formula instances, |A|·|J| ≤ 256.
inline std::vector<NamedSpec> prop21_instances() {
  return {
      {"Z/8, id, J=(2)", id_amalgam(8, {2})},
      {"Z/12, id, J=(2)", id_amalgam(12, {2})},
      {"Z/6, id, J=(2)", id_amalgam(6, {2})},
      {"Z/27, id, J=(3)", id_amalgam(27, {3})},
      {"Z/16, id, J=(2)", id_amalgam(16, {2})},
      {"Z/8 x Z/2 -> Z/8 projection, J=(2)",
       amalgamation_spec(product_spec(z(8), z(2)), z(8), hom_spec(K::projection, 0), {2})},
      {"Z/4, id, J=(2)", id_amalgam(4, {2})},
      {"Z/9, id, J=(3)", id_amalgam(9, {3})},
      {"Z/8 -> Z/4 canonical, J=(2)", amalgamation_spec(z(8), z(4), hom_spec(K::canonical), {2})},
      {"Z/2 -> Z/2 x| Z/2, J=0 x Z/2", amalgamation_spec(z(2), dual_numbers_f2(), hom_spec(K::canonical), {1})},
      {"Z/8, id, J=(0)", id_amalgam(8, {})},
      {"Z/12, id, J=(0)", id_amalgam(12, {})},
      {"Z/8 -> Z/4 canonical, J=(0)", amalgamation_spec(z(8), z(4), hom_spec(K::canonical), {})},
      {"Z/3 -> Z/3 x Z/3 diagonal, J=Z/3 x 0",
       amalgamation_spec(z(3), product_spec(z(3), z(3)), hom_spec(K::canonical), {3})},
  };
}

// Locality instances.
inline std::vector<NamedSpec> lemma23_instances() {
  return {
      {"Z/8, id, J=(2)", id_amalgam(8, {2})},
      {"Z/4, id, J=(2)", id_amalgam(4, {2})},
      {"Z/9, id, J=(3)", id_amalgam(9, {3})},
      {"Z/8 -> Z/4 canonical, J=(2)", amalgamation_spec(z(8), z(4), hom_spec(K::canonical), {2})},
      {"Z/4, id, J=(0)", id_amalgam(4, {})},
      {"Z/2 -> Z/2 x| Z/2, J=0 x Z/2", amalgamation_spec(z(2), dual_numbers_f2(), hom_spec(K::canonical), {1})},
      {"Z/8 -> Z/4 x Z/2 canonical, J=0 x Z/2",
       amalgamation_spec(z(8), product_spec(z(4), z(2)), hom_spec(K::canonical), {1})},
      {"Z/6, id, J=(2)", id_amalgam(6, {2})},
      {"Z/12, id, J=(2)", id_amalgam(12, {2})},
      {"Z/2 -> Z/2 x Z/2 diagonal, J=Z/2 x 0",
       amalgamation_spec(z(2), product_spec(z(2), z(2)), hom_spec(K::canonical), {2})},
  };
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Z/n for 2 ≤ n ≤ 64, duplications Z/n ⋈ (d) of order ≤ 256, products of
/// two prime fields and trivial extensions Z/n ⋉ Z/d of order ≤ 64.
inline std::vector<NamedSpec> hierarchy_corpus() {
  std::vector<NamedSpec> out;
  for (std::uint64_t n = 2; n <= 64; ++n) out.push_back({"Z/" + std::to_string(n), z(n)});
  for (std::uint64_t n = 2; n <= 64; ++n) {
    for (std::uint64_t d = 2; d <= n; ++d) {
      if (n % d != 0 || n * (n / d) > 256) continue;
      const auto gens = d == n ? std::vector<Element>{} : std::vector<Element>{static_cast<Element>(d)};
      out.push_back({"Z/" + std::to_string(n) + " dup (" + std::to_string(d % n) + ")", duplication_spec(z(n), gens)});
    }
  }
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i; j < primes.size(); ++j) {
      out.push_back({"F" + std::to_string(primes[i]) + " x F" + std::to_string(primes[j]),
                     product_spec(z(primes[i]), z(primes[j]))});
    }
  }
  for (std::uint64_t n = 2; n <= 32; ++n) {
    for (std::uint64_t d = 2; d <= n; ++d) {
      if (n % d != 0 || n * d > 64) continue;
      out.push_back({"Z/" + std::to_string(n) + " x| Z/" + std::to_string(d),
                     trivial_extension_spec(z(n), z(d), hom_spec(K::canonical))});
    }
  }
  return out;
}

}  // namespace corpus

// ---------------------------------------------------------------------------

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> summary;
  std::vector<NamedCheck> checks;
  double seconds = 0;
};

struct CorpusOptions {
  std::uint64_t seed = 0;
  std::uint64_t oracle_budget = 1'000'000'000;
  std::uint64_t lemma24_budget = kDefaultLemma24Budget;
  std::size_t lemma24_samples = 20;
};

/// Two-stage instance: B = Z/8, I = (2), A = B ⋈ I, then A ⋈^f I along each
/// projection A → B.
struct Example29Result {
  std::vector<NamedCheck> checks;
  std::vector<AmalgamRing> second_stage;
  bool passed = false;
};

inline Example29Result example29(LatticeStore& store) {
  Example29Result res;
  const auto b = make_zmod(8);
  const auto i = ideal_closure(b, {2});
  const auto a = make_duplication(b, i);

  auto tf = [](bool x) { return std::string(x ? "T" : "F"); };
  {
    const auto rep = check_hierarchy(a.ring, store);
    const auto e20 = *a.find(2, 0), e02 = *a.find(0, 2);
    bool witness_ok = false;
    if (rep.gaussian_detail.witness) {
      const auto& w = *rep.gaussian_detail.witness;
      witness_ok = (w.a == e20 && w.b == e02) || (w.a == e02 && w.b == e20);
    }
    const bool ok = rep.is_local && rep.pruefer && !rep.gaussian && !rep.arithmetical && witness_ok;
    NamedCheck c{"example29 stage 1 " + a.ring.label(), status_of(ok), {}, {}};
    c.notes.push_back("order " + std::to_string(a.ring.order()) + ", local " + tf(rep.is_local) + ", (arith, Gauss, Pruefer) = (" +
                      tf(rep.arithmetical) + ", " + tf(rep.gaussian) + ", " + tf(rep.pruefer) + ")");
    for (const auto& [k, v] : rep.witnesses) {
      for (const auto& w : v) c.notes.push_back("not " + k + ": " + w);
    }
    if (!ok) c.witnesses.push_back("expected a local Pruefer ring, not Gaussian via {(2,0),(0,2)}, not arithmetical");
    res.checks.push_back(std::move(c));
  }

  std::vector<std::tuple<bool, bool, bool>> verdicts;
  for (std::size_t comp : {0U, 1U}) {
    const auto& f = comp == 0 ? a.first_projection : a.second_projection;
    auto am = make_amalgamation(f, i);
    const auto rep = check_hierarchy(am.ring, store);
    verdicts.emplace_back(rep.arithmetical, rep.gaussian, rep.pruefer);
    const bool ok = rep.pruefer && !rep.gaussian;
    NamedCheck c{std::string("example29 stage 2, f = ") + (comp == 0 ? "first" : "second") + " projection",
                 status_of(ok), {}, {}};
    c.notes.push_back(am.ring.label() + " order " + std::to_string(am.ring.order()) + ", local " + tf(rep.is_local) +
                      ", (arith, Gauss, Pruefer) = (" + tf(rep.arithmetical) + ", " + tf(rep.gaussian) + ", " +
                      tf(rep.pruefer) + ")");
    for (const auto& [k, v] : rep.witnesses) {
      for (const auto& w : v) c.notes.push_back("not " + k + ": " + w);
    }
    if (!ok) c.witnesses.push_back("expected Pruefer and not Gaussian");
    res.checks.push_back(std::move(c));
    res.second_stage.push_back(std::move(am));
  }
  const bool same = verdicts[0] == verdicts[1];
  NamedCheck c{"example29 both projections agree", status_of(same), {}, {}};
  if (!same) c.witnesses.push_back("first and second projection give different property verdicts");
  res.checks.push_back(std::move(c));
  res.passed = std::ranges::all_of(res.checks, [](const NamedCheck& x) { return x.verdict == Status::pass; });
  return res;
}

namespace detail {

template <class F>
CriterionResult timed(int number, std::string title, F&& body) {
  CriterionResult r;
  r.number = number;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline bool all_pass(const std::vector<NamedCheck>& cs) {
  return std::ranges::none_of(cs, [](const NamedCheck& c) { return c.verdict == Status::fail; });
}

inline std::vector<AmalgamRing> build_amalgams(const std::vector<NamedSpec>& specs) {
  std::vector<AmalgamRing> out;
  for (const auto& s : specs) out.push_back(*build(s.spec).amalgam);
  return out;
}

}  // namespace detail

inline CriterionResult criterion_prop21_finite() {
  return detail::timed(1, "zero divisors of finite amalgamations", [](CriterionResult& r) {
    int only_a = 0, with_c = 0, zero_j = 0, instances = 0;
    for (const auto& s : corpus::prop21_instances()) {
      const auto am = *build(s.spec).amalgam;
      if (am.base().order() * am.ideal.size() > 256) throw error("corpus instance exceeds |A||J| <= 256");
      auto c = prop21_check(am);
      c.id = "prop21 " + s.name;
      const auto v = check_prop21(am);
      if (v.any_hypothesis()) ++instances;
      if (v.hyp_a && !v.hyp_b && !v.hyp_c) ++only_a;
      if (v.hyp_c) ++with_c;
      if (am.ideal.is_zero()) ++zero_j;
      r.checks.push_back(std::move(c));
    }
    const bool shape = instances >= 10 && only_a >= 3 && with_c >= 3 && zero_j >= 1;
    r.summary.push_back(std::to_string(instances) + " instances with a hypothesis (" + std::to_string(only_a) +
                        " only (a), " + std::to_string(with_c) + " with (c), " + std::to_string(zero_j) + " with J = 0)");
    r.passed = shape && detail::all_pass(r.checks);
  });
}

inline CriterionResult criterion_prop21_exact() {
  return detail::timed(2, "zero divisors of Z -> Z/nZ amalgamations", [](CriterionResult& r) {
    for (std::int64_t n : {4, 8, 12}) {
      for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0 || d == 1) continue;
        const auto v = sampled_prop21_exact(n, d % n, 50);
        NamedCheck c{"prop21-exact n=" + std::to_string(n) + " J=(" + std::to_string(d % n) + ")", v.status, {}, {}};
        c.notes.push_back(std::to_string(v.checked) + " elements, " + std::to_string(v.disagreements.size()) +
                          " disagreements");
        for (std::size_t k = 0; k < v.disagreements.size() && k < 4; ++k) {
          const auto [a, cc] = v.disagreements[k];
          const auto text = "(" + std::to_string(a) + "," + std::to_string(cc) + ")";
          if (v.nontrivial) {
            c.witnesses.push_back(text);
          } else {
            c.notes.push_back("regular but in S2: " + text);
          }
        }
        r.checks.push_back(std::move(c));
      }
    }
    r.passed = detail::all_pass(r.checks);
  });
}

inline CriterionResult criterion_lemma23(LatticeStore& store) {
  return detail::timed(3, "locality of amalgamations and maximal spectrum", [&](CriterionResult& r) {
    int local = 0, nonlocal = 0;
    for (const auto& s : corpus::lemma23_instances()) {
      const auto am = *build(s.spec).amalgam;
      auto c = lemma23_check(am, store);
      c.id = "lemma23 " + s.name;
      (check_lemma23(am, store).amalgam_local ? local : nonlocal) += 1;
      r.checks.push_back(std::move(c));
      auto m = maxspec_check(am, store);
      m.id = "maxspec " + s.name;
      r.checks.push_back(std::move(m));
    }
    r.summary.push_back(std::to_string(local) + " local, " + std::to_string(nonlocal) + " not local");
    r.passed = local >= 2 && nonlocal >= 2 && local + nonlocal >= 8 && detail::all_pass(r.checks);
  });
}

inline CriterionResult criterion_example29(LatticeStore& store) {
  return detail::timed(4, "Z/8 duplication and its amalgamation along (2)", [&](CriterionResult& r) {
    auto res = example29(store);
    r.checks = std::move(res.checks);
    r.passed = res.passed;
  });
}

inline CriterionResult criterion_cor27() {
  return detail::timed(5, "duplications of Z_(p) along p^k", [](CriterionResult& r) {
    bool ok = true;
    for (std::int64_t p : {2, 3, 5}) {
      for (int k : {1, 2, 3}) {
        const auto v = check_thm22_instance(p, k, kDefaultSearchBound);
        bool witness_ok = false;
        if (v.witness) {
          const auto& [x, y] = *v.witness;
          witness_ok = x.is_regular() && !divides_in_duplication(x, y) && !divides_in_duplication(y, x);
        }
        const bool pass = !v.condition.holds && witness_ok;
        ok = ok && pass;
        NamedCheck c = thm22_check(p, k, kDefaultSearchBound);
        c.verdict = status_of(pass);
        if (!pass) c.witnesses.push_back("expected a failing condition and a verified witness");
        r.checks.push_back(std::move(c));
      }
    }
    const auto v = check_thm22_instance(2, kZeroIdeal, kDefaultSearchBound);
    const bool zero_ok = v.condition.holds && !v.witness;
    NamedCheck c = thm22_check(2, kZeroIdeal, kDefaultSearchBound);
    c.verdict = status_of(zero_ok);
    if (!zero_ok) c.witnesses.push_back("I = 0 should satisfy the condition with no witness");
    r.checks.push_back(std::move(c));
    r.passed = ok && zero_ok;
  });
}

inline CriterionResult criterion_hierarchy(LatticeStore& store) {
  return detail::timed(6, "arithmetical => Gaussian => Pruefer over the ring corpus", [&](CriterionResult& r) {
    std::size_t rings = 0, arith = 0, gauss = 0;
    bool ok = true;
    for (const auto& s : corpus::hierarchy_corpus()) {
      const auto ring = build(s.spec).ring;
      NamedCheck c{"hierarchy " + s.name, Status::pass, {}, {}};
      try {
        const auto rep = check_hierarchy(ring, store);
        ++rings;
        arith += rep.arithmetical;
        gauss += rep.gaussian;
        if (!rep.pruefer || !rep.pruefer_detail.every_regular_is_whole) {
          c.verdict = Status::fail;
          c.witnesses.push_back(to_text(rep));
        }
      } catch (const hierarchy_violation_error& e) {
        c.verdict = Status::fail;
        c.witnesses.push_back(e.what());
      }
      ok = ok && c.verdict == Status::pass;
      if (c.verdict == Status::fail) r.checks.push_back(std::move(c));
    }
    r.summary.push_back(std::to_string(rings) + " rings: " + std::to_string(arith) + " arithmetical, " +
                        std::to_string(gauss) + " Gaussian, all Pruefer");
    r.passed = ok;
  });
}

inline CriterionResult criterion_oracle(LatticeStore& store, const CorpusOptions& opt) {
  return detail::timed(7, "Gaussian decider against the content oracle", [&](CriterionResult& r) {
    std::size_t rings = 0, violations = 0;
    std::uint64_t pairs = 0;
    bool ok = true;
    for (const auto& s : corpus::hierarchy_corpus()) {
      const auto ring = build(s.spec).ring;
      if (ring.order() > 64) continue;
      const auto decision = is_gaussian(ring);
      const auto o = gaussian_content_oracle(ring, 2, opt.oracle_budget, opt.seed, store);
      ++rings;
      pairs += o.pairs_tested;
      const bool sound = !o.violation || !decision.gaussian;
      const bool complete = !decision.gaussian || o.exhaustive;
      if (o.violation) ++violations;
      if (!sound || !complete) {
        ok = false;
        NamedCheck c{"oracle " + s.name, Status::fail, {}, {}};
        if (!sound) {
          c.witnesses.push_back("f = " + describe_poly(ring, o.violation->first) +
                                ", g = " + describe_poly(ring, o.violation->second));
        }
        if (!complete) c.witnesses.push_back("search was not exhaustive within the budget");
        r.checks.push_back(std::move(c));
      }
    }
    // The duplication Z/8 ⋈ (2) is non-Gaussian whatever the oracle finds.
    const auto dup = make_duplication(make_zmod(8), ideal_closure(make_zmod(8), {2}));
    const auto d = is_gaussian(dup.ring);
    const auto o = gaussian_content_oracle(dup.ring, 2, opt.oracle_budget, opt.seed, store);
    NamedCheck c{"oracle " + dup.ring.label(), status_of(!d.gaussian), {}, {}};
    if (o.violation) {
      c.notes.push_back("oracle pair (re-verified): f = " + describe_poly(dup.ring, o.violation->first) +
                        ", g = " + describe_poly(dup.ring, o.violation->second));
    } else {
      c.notes.push_back("oracle found no pair at degree <= 2");
    }
    if (d.gaussian) c.witnesses.push_back("decider reports Gaussian");
    ok = ok && !d.gaussian;
    r.checks.push_back(std::move(c));
    r.summary.push_back(std::to_string(rings) + " rings of order <= 64, " + std::to_string(pairs) +
                        " polynomial pairs, " + std::to_string(violations) + " with a violation");
    r.passed = ok;
  });
}

/// All amalgamations the suite touches: the two instance lists, the
/// duplications of the hierarchy corpus and both second-stage rings of the
/// Z/8 example.
inline std::vector<std::pair<std::string, AmalgamRing>> corpus_amalgamations(LatticeStore& store) {
  std::vector<std::pair<std::string, AmalgamRing>> out;
  for (const auto& s : corpus::prop21_instances()) out.emplace_back(s.name, *build(s.spec).amalgam);
  for (const auto& s : corpus::lemma23_instances()) out.emplace_back(s.name, *build(s.spec).amalgam);
  for (const auto& s : corpus::hierarchy_corpus()) {
    if (s.spec.kind == RingSpec::Kind::duplication) out.emplace_back(s.name, *build(s.spec).amalgam);
  }
  auto ex = example29(store);
  out.emplace_back("Z/8 dup (2), f = first projection, J=(2)", ex.second_stage[0]);
  out.emplace_back("Z/8 dup (2), f = second projection, J=(2)", ex.second_stage[1]);
  return out;
}

inline CriterionResult criterion_lemma24(LatticeStore& store, const CorpusOptions& opt,
                                         const std::vector<std::pair<std::string, AmalgamRing>>& amalgams) {
  return detail::timed(8, "lifted Gaussian polynomials descend to the base", [&](CriterionResult& r) {
    std::size_t lists = 0, lifted_gauss = 0, base_gauss = 0;
    bool ok = true;
    for (std::size_t idx = 0; idx < amalgams.size(); ++idx) {
      const auto& [name, am] = amalgams[idx];
      std::mt19937_64 rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * (idx + 1)));
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(am.base().order() - 1));
      for (std::size_t t = 0; t < opt.lemma24_samples; ++t) {
        Coefficients coeffs(3);
        for (auto& c : coeffs) c = pick(rng);
        const auto v = check_lemma24(am, coeffs, 2, opt.lemma24_budget, opt.seed + t, store);
        ++lists;
        lifted_gauss += v.lifted_bounded_gaussian;
        base_gauss += v.base_bounded_gaussian;
        if (!v.implication_holds) {
          ok = false;
          auto c = lemma24_check(am, coeffs, 2, opt.lemma24_budget, opt.seed + t, store);
          c.id = "lemma24 " + name;
          r.checks.push_back(std::move(c));
        }
      }
    }
    r.summary.push_back(std::to_string(amalgams.size()) + " amalgamations, " + std::to_string(lists) +
                        " coefficient lists: " + std::to_string(lifted_gauss) + " lifted and " +
                        std::to_string(base_gauss) + " base polynomials bounded-Gaussian");
    r.passed = ok;
  });
}

inline CriterionResult criterion_quotient_iso(const std::vector<std::pair<std::string, AmalgamRing>>& amalgams) {
  return detail::timed(9, "(A x| J)/(0 x J) is isomorphic to A", [&](CriterionResult& r) {
    std::size_t count = 0;
    bool ok = true;
    for (const auto& [name, am] : amalgams) {
      if (am.ring.order() > 256) continue;
      ++count;
      auto c = quotient_iso_named_check(am);
      if (c.verdict != Status::pass) {
        ok = false;
        c.id = "quotient-iso " + name;
        r.checks.push_back(std::move(c));
      }
    }
    r.summary.push_back(std::to_string(count) + " amalgamations checked");
    r.passed = ok;
  });
}

inline CriterionResult criterion_example28() {
  return detail::timed(10, "idealization of Z_(p) by its residue field", [](CriterionResult& r) {
    for (std::int64_t p : {2, 3}) r.checks.push_back(example28_check(p));
    r.passed = detail::all_pass(r.checks);
  });
}

inline std::vector<CriterionResult> run_corpus(LatticeStore& store, const CorpusOptions& opt = {},
                                               const std::function<void(const CriterionResult&)>& on_done = {}) {
  std::vector<CriterionResult> out;
  auto push = [&](CriterionResult r) {
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  };
  push(criterion_prop21_finite());
  push(criterion_prop21_exact());
  push(criterion_lemma23(store));
  push(criterion_example29(store));
  push(criterion_cor27());
  push(criterion_hierarchy(store));
  push(criterion_oracle(store, opt));
  const auto amalgams = corpus_amalgamations(store);
  push(criterion_lemma24(store, opt, amalgams));
  push(criterion_quotient_iso(amalgams));
  push(criterion_example28());
  return out;
}

}  // namespace amalgam
