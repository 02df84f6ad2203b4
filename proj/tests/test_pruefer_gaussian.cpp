#include <gtest/gtest.h>

#include "amalgam/module.hpp"
#include "amalgam/pruefer_gaussian.hpp"

using namespace amalgam;

namespace {

AmalgamRing dup(std::uint64_t n, Element g) {
  const auto r = make_zmod(n);
  return make_duplication(r, ideal_closure(r, {g}));
}

// c(fg) = c(f)c(g) for every pair of linear polynomials, computed with
// plain closures and no lattice.
bool linear_content_holds(const FiniteRing& r) {
  for (auto a0 : r.elements())
    for (auto a1 : r.elements())
      for (auto b0 : r.elements())
        for (auto b1 : r.elements()) {
          const auto lhs = ideal_closure(r, {r.mul(a0, b0), r.add(r.mul(a0, b1), r.mul(a1, b0)), r.mul(a1, b1)});
          const auto rhs = ideal_product(ideal_closure(r, {a0, a1}), ideal_closure(r, {b0, b1}));
          if (!(lhs == rhs)) return false;
        }
  return true;
}

// Distributivity over every ideal triple, written against subset tests.
bool brute_distributive(const FiniteRing& r) {
  const auto ideals = all_ideals(r);
  for (const auto& i : ideals)
    for (const auto& j : ideals)
      for (const auto& k : ideals) {
        if (!(ideal_intersection(i, ideal_sum(j, k)) == ideal_sum(ideal_intersection(i, j), ideal_intersection(i, k))))
          return false;
      }
  return true;
}

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> rs;
  for (std::uint64_t n = 2; n <= 12; ++n) rs.push_back(make_zmod(n));
  rs.push_back(dup(4, 2).ring);
  rs.push_back(dup(2, 0).ring);
  rs.push_back(make_product(make_zmod(2), make_zmod(2)));
  rs.push_back(make_product(make_zmod(2), make_zmod(4)));
  rs.push_back(make_trivial_extension(make_zmod(2), regular_module(make_zmod(2))));
  rs.push_back(make_trivial_extension(make_zmod(4), module_via(canonical_hom(make_zmod(4), make_zmod(2)))));
  rs.push_back(make_trivial_extension(make_zmod(2), module_via(canonical_hom(make_zmod(2), make_product(make_zmod(2), make_zmod(2))))));
  return rs;
}

}  // namespace

TEST(Gaussian, PairVerdict) {
  const auto z8 = make_zmod(8);
  EXPECT_TRUE(gaussian_pair_verdict(z8, 2, 4).holds);
  EXPECT_TRUE(gaussian_pair_verdict(z8, 0, 0).holds);
  const auto am = dup(8, 2);
  const auto v = gaussian_pair_verdict(am.ring, *am.find(2, 0), *am.find(0, 2));
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.square_is_a2);
  EXPECT_FALSE(v.square_is_b2);
}

TEST(Gaussian, Decider) {
  EXPECT_TRUE(is_gaussian(make_zmod(8)).gaussian);
  EXPECT_TRUE(is_gaussian(make_zmod(7)).gaussian);
  const auto am = dup(8, 2);
  const auto d = is_gaussian(am.ring);
  ASSERT_FALSE(d.gaussian);
  ASSERT_TRUE(d.witness.has_value());
  // First failing pair in carrier order: (0,2) ≤ (2,0).
  EXPECT_EQ(d.witness->a, *am.find(0, 2));
  EXPECT_EQ(d.witness->b, *am.find(2, 0));
}

TEST(Gaussian, DeciderMatchesLinearContentOracle) {
  for (const auto& r : small_rings()) {
    EXPECT_EQ(is_gaussian(r).gaussian, linear_content_holds(r)) << r.label();
  }
}

TEST(Gaussian, ContentOracle) {
  const auto z8 = gaussian_content_oracle(make_zmod(8), 2, kDefaultOracleBudget);
  EXPECT_TRUE(z8.exhaustive);
  EXPECT_FALSE(z8.violation.has_value());

  const auto am = dup(8, 2);
  const auto o = gaussian_content_oracle(am.ring, 2, kDefaultOracleBudget);
  ASSERT_TRUE(o.violation.has_value());
  const auto& [f, g] = *o.violation;
  EXPECT_FALSE(content(am.ring, poly_mul(am.ring, f, g)) == ideal_product(content(am.ring, f), content(am.ring, g)));

  // A budget below the reduced pair count switches to sampling.
  const auto s = gaussian_content_oracle(make_zmod(8), 2, 10, 3);
  EXPECT_FALSE(s.exhaustive);
  EXPECT_EQ(s.pairs_tested, 10U);
}

TEST(Gaussian, ZeroPolynomialNeverWitnesses) {
  const auto r = dup(4, 2).ring;
  const Coefficients zero{0, 0};
  for (auto a : r.elements()) {
    const Coefficients g{a, r.one()};
    EXPECT_EQ(content(r, poly_mul(r, zero, g)), ideal_product(content(r, zero), content(r, g)));
  }
}

TEST(Arithmetical, Examples) {
  EXPECT_TRUE(is_arithmetical(make_zmod(8)).arithmetical);
  EXPECT_TRUE(is_arithmetical(make_zmod(5)).arithmetical);
  EXPECT_TRUE(is_arithmetical(make_product(make_zmod(2), make_zmod(2))).arithmetical);
  const auto am = dup(8, 2);
  const auto d = is_arithmetical(am.ring);
  EXPECT_FALSE(d.arithmetical);
  ASSERT_TRUE(d.incomparable.has_value());
  EXPECT_EQ(d.incomparable->first, *am.find(0, 2));
  EXPECT_EQ(d.incomparable->second, *am.find(2, 0));
  ASSERT_TRUE(d.distributivity_witness.has_value());
}

TEST(Arithmetical, MatchesBruteDistributivity) {
  for (const auto& r : small_rings()) {
    EXPECT_EQ(is_arithmetical(r).arithmetical, brute_distributive(r)) << r.label();
  }
}

TEST(Pruefer, FiniteRingsArePruefer) {
  for (const auto& r : small_rings()) {
    const auto c = is_pruefer_finite(r);
    EXPECT_TRUE(c.pruefer) << r.label();
    EXPECT_TRUE(c.every_regular_is_whole) << r.label();
    EXPECT_EQ(c.two_generated_visited, r.order() * (r.order() + 1) / 2);
  }
  EXPECT_TRUE(is_pruefer_finite(dup(8, 2).ring).pruefer);
  EXPECT_THROW(is_pruefer_finite(make_zmod(300)), size_cap_error);
}

TEST(Hierarchy, Examples) {
  const auto z8 = check_hierarchy(make_zmod(8));
  EXPECT_TRUE(z8.arithmetical && z8.gaussian && z8.pruefer);
  EXPECT_TRUE(z8.witnesses.empty());

  const auto d = check_hierarchy(dup(8, 2).ring);
  EXPECT_FALSE(d.arithmetical);
  EXPECT_FALSE(d.gaussian);
  EXPECT_TRUE(d.pruefer);
  EXPECT_TRUE(d.is_local);
  EXPECT_FALSE(d.witnesses.at("arithmetical").empty());
  EXPECT_FALSE(d.witnesses.at("gaussian").empty());

  const auto p = check_hierarchy(make_product(make_zmod(2), make_zmod(2)));
  EXPECT_TRUE(p.arithmetical && p.gaussian && p.pruefer);
}

// Random duplications and trivial extensions: the ladder holds and every
// false property has a witness.
TEST(Property, LadderOnRandomRings) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick_n(2, 16);
  for (int t = 0; t < 30; ++t) {
    const auto n = pick_n(rng);
    const auto r = make_zmod(n);
    std::uniform_int_distribution<Element> pick_g(0, n - 1);
    auto g = pick_g(rng);
    auto i = ideal_closure(r, {g});
    if (i.is_whole()) i = zero_ideal(r);
    const auto rep = check_hierarchy(make_duplication(r, i).ring);
    if (rep.arithmetical) { EXPECT_TRUE(rep.gaussian); }
    if (rep.gaussian) { EXPECT_TRUE(rep.pruefer); }
    for (const auto& key : {"arithmetical", "gaussian", "pruefer"}) {
      const bool value = std::string(key) == "arithmetical" ? rep.arithmetical
                         : std::string(key) == "gaussian"   ? rep.gaussian
                                                            : rep.pruefer;
      if (!value) { EXPECT_FALSE(rep.witnesses.at(key).empty()); }
    }
  }
}

TEST(Lemma24, SpecInstances) {
  const auto am = dup(4, 2);
  const auto unit = check_lemma24(am, {1, 0}, 2);
  EXPECT_TRUE(unit.lifted_bounded_gaussian);
  EXPECT_TRUE(unit.base_bounded_gaussian);
  EXPECT_TRUE(unit.implication_holds);

  const auto v = check_lemma24(am, {2, 2}, 2);
  EXPECT_TRUE(v.implication_holds);
  EXPECT_TRUE(v.base_exhaustive);

  const auto z = check_lemma24(am, {0}, 2);
  EXPECT_TRUE(z.lifted_bounded_gaussian && z.base_bounded_gaussian);

  EXPECT_THROW(check_lemma24(am, {7}, 1), error);
}

TEST(Lemma24, NonGaussianBaseIsCaughtOnBothSides) {
  // Over Z/8 ⋈ (2) (non-Gaussian) f = (0,2) + (2,0)x fails the content test,
  // and so does its lift.
  const auto a = dup(8, 2);
  const auto am = make_amalgamation(a.first_projection, ideal_closure(make_zmod(8), {2}));
  const auto v = check_lemma24(am, {*a.find(0, 2), *a.find(2, 0)}, 1, 100000);
  EXPECT_FALSE(v.base_bounded_gaussian);
  EXPECT_FALSE(v.lifted_bounded_gaussian);
  EXPECT_TRUE(v.implication_holds);
}
