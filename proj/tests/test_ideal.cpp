#include <gtest/gtest.h>

#include <set>

#include "amalgam/ideal.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/module.hpp"
#include "amalgam/quotient.hpp"

using namespace amalgam;

namespace {

// Reference ideal test straight from the definition.
bool brute_is_ideal(const FiniteRing& r, std::uint64_t mask) {
  auto in = [&](Element x) { return (mask >> x) & 1U; };
  if (!in(r.zero())) return false;
  for (auto x : r.elements()) {
    if (!in(x)) continue;
    for (auto y : r.elements()) {
      if (in(y) && !in(r.sub(x, y))) return false;
      if (!in(r.mul(x, y))) return false;
    }
  }
  return true;
}

std::set<std::vector<Element>> brute_ideals(const FiniteRing& r) {
  std::set<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << r.order()); ++mask) {
    if (!brute_is_ideal(r, mask)) continue;
    std::vector<Element> v;
    for (auto x : r.elements()) {
      if ((mask >> x) & 1U) v.push_back(x);
    }
    out.insert(v);
  }
  return out;
}

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> rs;
  for (std::uint64_t n = 2; n <= 16; ++n) rs.push_back(make_zmod(n));
  rs.push_back(make_product(make_zmod(2), make_zmod(2)));
  rs.push_back(make_product(make_zmod(2), make_zmod(4)));
  rs.push_back(make_product(make_zmod(3), make_zmod(3)));
  rs.push_back(make_trivial_extension(make_zmod(4), regular_module(make_zmod(4))));
  rs.push_back(make_trivial_extension(make_zmod(2), regular_module(make_zmod(2))));
  return rs;
}

}  // namespace

TEST(Ideal, ClosureAndMembership) {
  const auto r = make_zmod(12);
  const auto i = ideal_closure(r, {8, 6});
  EXPECT_EQ(i.elements(), (std::vector<Element>{0, 2, 4, 6, 8, 10}));
  EXPECT_TRUE(i.is_proper());
  EXPECT_TRUE(ideal_closure(r, {5}).is_whole());
  EXPECT_TRUE(zero_ideal(r).is_zero());
  EXPECT_THROW(ideal_closure(r, {12}), error);
}

TEST(Ideal, AllIdealsMatchBruteForce) {
  for (const auto& r : small_rings()) {
    const auto expected = brute_ideals(r);
    const auto got = all_ideals(r);
    std::set<std::vector<Element>> got_sets;
    for (const auto& i : got) got_sets.insert(i.elements());
    EXPECT_EQ(got_sets, expected) << r.label();
    EXPECT_EQ(got.size(), expected.size()) << r.label();
    // Canonical order: size first.
    for (std::size_t k = 1; k < got.size(); ++k) EXPECT_LE(got[k - 1].size(), got[k].size());
  }
}

TEST(Ideal, KnownLatticeSizes) {
  EXPECT_EQ(all_ideals(make_zmod(8)).size(), 4U);   // chain (0) ⊂ (4) ⊂ (2) ⊂ (1)
  EXPECT_EQ(all_ideals(make_zmod(12)).size(), 6U);  // divisors of 12
  EXPECT_EQ(all_ideals(make_zmod(30)).size(), 8U);
  EXPECT_THROW(all_ideals(make_zmod(300)), size_cap_error);
}

TEST(Ideal, OperationsMatchSetFormulas) {
  for (const auto& r : small_rings()) {
    const auto ideals = all_ideals(r);
    for (const auto& i : ideals) {
      for (const auto& j : ideals) {
        // Sum: {x + y}.
        ElementSet sum(r.order());
        for (auto x : i.elements())
          for (auto y : j.elements()) sum.set(r.add(x, y));
        EXPECT_EQ(ideal_sum(i, j).members(), sum);
        EXPECT_EQ(ideal_intersection(i, j).members(), i.members() & j.members());
        // Product: the smallest ideal containing all xy; here, the smallest
        // listed ideal containing them.
        ElementSet prods(r.order());
        for (auto x : i.elements())
          for (auto y : j.elements()) prods.set(r.mul(x, y));
        const Ideal* smallest = nullptr;
        for (const auto& k : ideals) {
          if (prods.is_subset_of(k.members()) && (!smallest || k.size() < smallest->size())) smallest = &k;
        }
        ASSERT_NE(smallest, nullptr);
        EXPECT_EQ(ideal_product(i, j), *smallest);
        // Colon: {x : xJ ⊆ I}.
        ElementSet colon(r.order());
        for (auto x : r.elements()) {
          bool ok = true;
          for (auto y : j.elements()) ok = ok && i.contains(r.mul(x, y));
          if (ok) colon.set(x);
        }
        EXPECT_EQ(colon_ideal(i, j).members(), colon);
      }
    }
  }
}

TEST(Ideal, MismatchedRings) {
  EXPECT_THROW(ideal_sum(unit_ideal(make_zmod(4)), unit_ideal(make_zmod(6))), ring_mismatch_error);
}

TEST(Ideal, Invertibility) {
  const auto r = make_zmod(8);
  EXPECT_TRUE(is_invertible(unit_ideal(r)));
  EXPECT_FALSE(is_invertible(ideal_closure(r, {2})));
  EXPECT_FALSE(is_invertible(zero_ideal(r)));
  // In a finite ring the regular ideals are exactly the unit ideal.
  EXPECT_TRUE(is_invertible(ideal_closure(r, {2, 3})));
}

TEST(Ideal, IsIdealSet) {
  const auto r = make_zmod(6);
  EXPECT_TRUE(is_ideal_set(r, make_set(6, {0, 3})));
  EXPECT_FALSE(is_ideal_set(r, make_set(6, {0, 1})));
  EXPECT_THROW(ideal_from_set(r, make_set(6, {0, 1})), error);
}

TEST(Quotient, ZmodQuotient) {
  const auto r = make_zmod(12);
  const auto q = make_quotient(r, ideal_closure(r, {4}));
  EXPECT_EQ(q.ring.order(), 4U);
  EXPECT_TRUE(find_isomorphism(q.ring, make_zmod(4)).has_value());
  EXPECT_EQ(q.projection(7), q.projection(3));
  EXPECT_THROW(make_quotient(r, unit_ideal(r)), improper_ideal_error);
}

TEST(Lattice, SumsAndProducts) {
  const auto r = make_zmod(12);
  IdealLattice lat(r, all_ideals(r));
  const auto i2 = lat.principal(2), i3 = lat.principal(3);
  EXPECT_TRUE(lat[lat.sum(i2, i3)].is_whole());
  EXPECT_EQ(lat[lat.product(i2, i3)], ideal_closure(r, {6}));
  const std::vector<Element> gens{4, 6};
  EXPECT_EQ(lat[lat.generated(gens)], ideal_closure(r, {2}));
}
