#include <gtest/gtest.h>

#include <numeric>

#include "amalgam/classify.hpp"
#include "amalgam/module.hpp"

using namespace amalgam;

TEST(Classify, Z12) {
  const auto c = classify(make_zmod(12));
  EXPECT_EQ(to_vector(c.units), (std::vector<Element>{1, 5, 7, 11}));
  EXPECT_EQ(to_vector(c.zero_divisors), (std::vector<Element>{0, 2, 3, 4, 6, 8, 9, 10}));
  EXPECT_EQ(to_vector(c.nilpotents), (std::vector<Element>{0, 6}));
  EXPECT_FALSE(c.is_local);
  ASSERT_EQ(c.maximal_ideals.size(), 2U);
  EXPECT_EQ(c.radical, ideal_closure(make_zmod(12), {6}));
}

TEST(Classify, UnitsAreCoprimeResidues) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const auto c = classify(make_zmod(n));
    for (Element x = 0; x < n; ++x) EXPECT_EQ(c.units.test(x), std::gcd<std::uint64_t>(x, n) == 1) << n << " " << x;
    // Z/n is local exactly for prime powers.
    std::uint64_t m = n, p = 2;
    while (m % p != 0) ++p;
    while (m % p == 0) m /= p;
    EXPECT_EQ(c.is_local, m == 1) << n;
  }
}

TEST(Classify, LocalDecomposition) {
  const auto factors = local_decomposition(make_zmod(12));
  ASSERT_EQ(factors.size(), 2U);
  std::vector<std::size_t> orders{factors[0].ring.order(), factors[1].ring.order()};
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{3, 4}));
  for (const auto& f : factors) EXPECT_TRUE(classify(f.ring).is_local);

  const auto local = local_decomposition(make_zmod(9));
  ASSERT_EQ(local.size(), 1U);
  EXPECT_EQ(local[0].ring, make_zmod(9));

  EXPECT_EQ(local_decomposition(make_product(make_product(make_zmod(2), make_zmod(3)), make_zmod(5))).size(), 3U);
}

TEST(Classify, Idempotents) {
  EXPECT_EQ(idempotents(make_zmod(12)), (std::vector<Element>{0, 1, 4, 9}));
  EXPECT_EQ(idempotents(make_zmod(8)), (std::vector<Element>{0, 1}));
}

TEST(Classify, Torsion) {
  // Over Z/8 → Z/8 every regular element is a unit, so only 0 is torsion.
  const auto z8 = make_zmod(8);
  const auto t = is_torsion_module(identity_hom(z8), ideal_closure(z8, {2}));
  EXPECT_FALSE(t.torsion);
  EXPECT_EQ(t.non_torsion, Element{2});
  EXPECT_TRUE(is_torsion_module(identity_hom(z8), zero_ideal(z8)).torsion);
}

TEST(Classify, TrivialExtensionIsLocal) {
  const auto t = make_trivial_extension(make_zmod(3), regular_module(make_zmod(3)));
  const auto c = classify(t);
  EXPECT_TRUE(c.is_local);
  EXPECT_EQ(c.nilpotents.count(), 3U);
}
