#include <gtest/gtest.h>

#include <random>

#include "amalgam/exact_local.hpp"

using namespace amalgam;

TEST(PLocal, Basics) {
  EXPECT_EQ(PLocalRational(2, 12).valuation(), 2);
  EXPECT_TRUE(PLocalRational(2, 3, 5).is_unit());
  EXPECT_FALSE(PLocalRational(2, 2, 3).is_unit());
  EXPECT_EQ(PLocalRational(2, 2, 3).valuation(), 1);
  const auto s = PLocalRational(2, 1, 3) + PLocalRational(2, 1, 5);
  EXPECT_EQ(s, PLocalRational(2, 8, 15));
  EXPECT_EQ(s.valuation(), 3);
  EXPECT_EQ(PLocalRational(3, 6, -4), PLocalRational(3, -3, 2));
  EXPECT_EQ(PLocalRational(3, 6, -4).denominator(), 2);
}

TEST(PLocal, Errors) {
  EXPECT_THROW(PLocalRational(2, 1, 2), error);
  EXPECT_THROW(PLocalRational(2, 0).valuation(), undefined_valuation_error);
  EXPECT_THROW(PLocalRational(2, 1) + PLocalRational(3, 1), prime_mismatch_error);
  EXPECT_THROW(PLocalRational(2, 1LL << 62) * PLocalRational(2, 1LL << 62), std::overflow_error);
}

TEST(PLocal, PowerIdealMembership) {
  EXPECT_TRUE(in_power_ideal(PLocalRational(2, 8, 3), 3));
  EXPECT_FALSE(in_power_ideal(PLocalRational(2, 8, 3), 4));
  EXPECT_TRUE(in_power_ideal(PLocalRational(2, 0), 5));
  EXPECT_FALSE(in_power_ideal(PLocalRational(2, 8), kZeroIdeal));
}

TEST(Property, ValuationLaws) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-200, 200), den(1, 60);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int t = 0; t < 500; ++t) {
      auto draw = [&] {
        while (true) {
          const auto d = den(rng);
          if (d % p != 0) return PLocalRational(p, num(rng), d);
        }
      };
      const auto x = draw(), y = draw();
      for (const auto& z : {x + y, x * y, -x, x - y}) {
        EXPECT_GT(z.denominator(), 0);
        EXPECT_EQ(std::gcd(z.numerator(), z.denominator()), 1);
        EXPECT_NE(z.denominator() % p, 0);
      }
      if (x.is_zero() || y.is_zero()) continue;
      EXPECT_EQ((x * y).valuation(), x.valuation() + y.valuation());
      if (!(x + y).is_zero()) { EXPECT_GE((x + y).valuation(), std::min(x.valuation(), y.valuation())); }
    }
  }
}

namespace {
DuplicationElement el(std::int64_t p, int k, std::int64_t a, std::int64_t b) {
  return {k, PLocalRational(p, a), PLocalRational(p, b)};
}
}  // namespace

TEST(Duplication, Divisibility) {
  const auto q = divides_in_duplication(el(2, 1, 2, 2), el(2, 1, 4, 4));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, el(2, 1, 2, 2));
  EXPECT_FALSE(divides_in_duplication(el(2, 1, 2, 2), el(2, 1, 0, 2)).has_value());
  EXPECT_FALSE(divides_in_duplication(el(2, 1, 0, 2), el(2, 1, 2, 2)).has_value());
  EXPECT_TRUE(divides_in_duplication(el(2, 1, 1, 1), el(2, 1, 6, 4)).has_value());
  EXPECT_TRUE(divides_in_duplication(el(2, 1, 0, 2), el(2, 1, 0, 4)).has_value());
  EXPECT_THROW(el(2, 1, 1, 2), error);  // 2 − 1 ∉ 2Z_(2)
  EXPECT_THROW(divides_in_duplication(el(2, 1, 2, 2), el(2, 2, 4, 4)), error);
}

TEST(Property, MutualDivisibilityMeansAssociates) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::int64_t> small(-12, 12);
  const std::int64_t p = 3;
  const int k = 1;
  for (int t = 0; t < 3000; ++t) {
    const auto a1 = small(rng), a2 = small(rng);
    const auto x = el(p, k, a1, a1 + 3 * small(rng));
    const auto y = el(p, k, a2, a2 + 3 * small(rng));
    const auto q = divides_in_duplication(x, y);
    const auto r = divides_in_duplication(y, x);
    if (q) { EXPECT_EQ(x * *q, y); }
    if (q && r && !(x.a.is_zero() && x.second.is_zero())) {
      // The quotient returned is then a unit of the duplication.
      EXPECT_TRUE(q->a.is_unit() && q->second.is_unit()) << x.to_string() << " " << y.to_string();
    }
  }
}

TEST(Cor27, Condition) {
  const auto v = corollary27_condition(2, 1, {PLocalRational(2, 2)});
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness_product_exponent, 2);
  EXPECT_FALSE(corollary27_condition(3, 2, {PLocalRational(3, 3)}).holds);
  EXPECT_TRUE(corollary27_condition(2, kZeroIdeal).holds);
  EXPECT_TRUE(corollary27_condition(2, 3, {}).holds);
  EXPECT_THROW(corollary27_condition(2, 1, {PLocalRational(2, 3)}), invalid_sample_error);
  EXPECT_THROW(corollary27_condition(2, 1, {PLocalRational(2, 0)}), invalid_sample_error);
}

TEST(WitnessSearch, Grid) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int k : {1, 2, 3}) {
      const auto w = pruefer_witness_search(p, k, kDefaultSearchBound);
      ASSERT_TRUE(w.has_value()) << p << " " << k;
      EXPECT_EQ(w->x, el(p, k, p, p));
      EXPECT_EQ(w->y, el(p, k, 0, ipow(p, k)));
      EXPECT_TRUE(w->x.is_regular());
      EXPECT_FALSE(divides_in_duplication(w->x, w->y));
      EXPECT_FALSE(divides_in_duplication(w->y, w->x));
      EXPECT_TRUE(check_thm22_instance(p, k).consistent);
    }
  }
  EXPECT_FALSE(pruefer_witness_search(2, kZeroIdeal, kDefaultSearchBound).has_value());
  EXPECT_TRUE(check_thm22_instance(2, kZeroIdeal).consistent);
}

TEST(ExactProp21, Examples) {
  const auto v = sampled_prop21_exact(8, 2, 50);
  EXPECT_TRUE(v.disagreements.empty());
  EXPECT_EQ(v.status, Status::pass);
  EXPECT_EQ(v.checked, 101U * 4);
  for (std::int64_t n : {4, 8, 12}) {
    for (std::int64_t g = 2; g < n; ++g) {
      if (n % g == 0) { EXPECT_TRUE(sampled_prop21_exact(n, g, 50).disagreements.empty()) << n << " " << g; }
    }
  }
  EXPECT_THROW(sampled_prop21_exact(8, 3, 50), improper_ideal_error);
}

TEST(ExactProp21, ZeroIdealIsInformational) {
  // With J = 0 the map is Z → Z/n; (n, 0) is regular yet lies in S2.
  const auto v = sampled_prop21_exact(4, 0, 10);
  EXPECT_EQ(v.status, Status::info);
  EXPECT_FALSE(v.nontrivial);
  EXPECT_NE(std::find(v.disagreements.begin(), v.disagreements.end(), std::pair<std::int64_t, std::int64_t>{4, 0}),
            v.disagreements.end());
}

TEST(Example28, Structural) {
  for (std::int64_t p : {2, 3, 5}) {
    const auto v = example28_structural(p);
    EXPECT_TRUE(v.holds) << p;
    EXPECT_TRUE(v.unit_image);
  }
}
