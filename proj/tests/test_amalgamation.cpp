#include <gtest/gtest.h>

#include "amalgam/amalgamation.hpp"
#include "amalgam/module.hpp"

using namespace amalgam;

namespace {

// Zero divisors of A ⋈^f J computed on (a, b) pairs with the component
// rings' operations only, independent of the amalgam's tables.
std::vector<std::pair<Element, Element>> pair_zero_divisors(const RingHom& f, const Ideal& j) {
  const auto& a = f.source();
  const auto& b = f.target();
  std::vector<std::pair<Element, Element>> carrier;
  for (auto x : a.elements()) {
    for (auto y : j.elements()) carrier.emplace_back(x, b.add(f(x), y));
  }
  std::vector<std::pair<Element, Element>> out;
  for (const auto& [x, y] : carrier) {
    for (const auto& [u, v] : carrier) {
      if ((u != a.zero() || v != b.zero()) && a.mul(x, u) == a.zero() && b.mul(y, v) == b.zero()) {
        out.emplace_back(x, y);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AmalgamRing dup(std::uint64_t n, Element g) {
  const auto r = make_zmod(n);
  return make_duplication(r, ideal_closure(r, {g}));
}

}  // namespace

TEST(Amalgamation, DuplicationShape) {
  const auto am = dup(8, 2);
  EXPECT_EQ(am.ring.order(), 32U);
  EXPECT_TRUE(verify_ring_axioms(am.ring).all_passed());
  // Elements sorted lexicographically by (a, b).
  EXPECT_EQ(am.ring.coords()[0], (std::pair<Element, Element>{0, 0}));
  EXPECT_EQ(am.ring.coords()[1], (std::pair<Element, Element>{0, 2}));
  EXPECT_EQ(*am.find(2, 0), 8U);
  EXPECT_FALSE(am.find(1, 2).has_value());
  EXPECT_EQ(am.element(3, 4), *am.find(3, 7));
}

TEST(Amalgamation, ProperIdealRequired) {
  const auto r = make_zmod(4);
  EXPECT_THROW(make_duplication(r, unit_ideal(r)), improper_ideal_error);
  EXPECT_THROW(make_amalgamation(identity_hom(r), ideal_closure(make_zmod(8), {2})), ring_mismatch_error);
}

TEST(Amalgamation, ZeroIdealCopiesBase) {
  const auto r = make_zmod(6);
  const auto am = make_duplication(r, zero_ideal(r));
  EXPECT_TRUE(find_isomorphism(am.ring, r).has_value());
}

TEST(Prop21, ZeroDivisorsMatchPairOracle) {
  std::vector<AmalgamRing> cases{dup(8, 2), dup(12, 2), dup(9, 3), dup(4, 2), dup(6, 3)};
  cases.push_back(make_amalgamation(canonical_hom(make_zmod(8), make_zmod(4)), ideal_closure(make_zmod(4), {2})));
  const auto b = make_product(make_zmod(3), make_zmod(3));
  cases.push_back(make_amalgamation(canonical_hom(make_zmod(3), b), ideal_closure(b, {3})));
  for (const auto& am : cases) {
    std::vector<std::pair<Element, Element>> got;
    for (auto x : to_vector(zero_divisors(am.ring))) got.push_back(am.ring.coords()[x]);
    EXPECT_EQ(got, pair_zero_divisors(am.hom, am.ideal)) << am.ring.label();
  }
}

TEST(Prop21, Hypotheses) {
  const auto v = check_prop21(dup(4, 2));
  EXPECT_TRUE(v.hyp_a);
  EXPECT_TRUE(v.hyp_c);
  EXPECT_TRUE(v.equal);
  EXPECT_EQ(v.status, Status::pass);

  const auto w = check_prop21(dup(8, 2));
  EXPECT_TRUE(w.hyp_a);
  EXPECT_FALSE(w.hyp_b);
  EXPECT_FALSE(w.hyp_c);
  EXPECT_TRUE(w.equal);

  // No hypothesis: the diagonal Z/3 → Z/3 × Z/3 along Z/3 × 0.
  const auto b = make_product(make_zmod(3), make_zmod(3));
  const auto x = check_prop21(make_amalgamation(canonical_hom(make_zmod(3), b), ideal_closure(b, {3})));
  EXPECT_FALSE(x.any_hypothesis());
  EXPECT_EQ(x.status, Status::info);
}

TEST(Prop21, ZeroIdealGivesBaseZeroDivisors) {
  const auto r = make_zmod(12);
  const auto am = make_duplication(r, zero_ideal(r));
  const auto rhs = prop21_rhs(am);
  ElementSet expected(am.ring.order());
  for (auto a : to_vector(zero_divisors(r))) expected.set(*am.find(a, a));
  EXPECT_EQ(rhs, expected);
}

TEST(Lemma23, LocalAndNonLocal) {
  EXPECT_TRUE(check_lemma23(dup(8, 2)).amalgam_local);
  EXPECT_TRUE(check_lemma23(dup(8, 2)).holds);

  const auto b = make_product(make_zmod(4), make_zmod(2));
  const auto am = make_amalgamation(canonical_hom(make_zmod(8), b), ideal_closure(b, {1}));
  const auto v = check_lemma23(am);
  EXPECT_TRUE(v.base_local);
  EXPECT_FALSE(v.j_in_radical);
  EXPECT_FALSE(v.amalgam_local);
  EXPECT_TRUE(v.holds);

  const auto m = max_spectrum_pattern(am);
  EXPECT_TRUE(m.holds);
  EXPECT_EQ(m.matched.size(), 2U);
  EXPECT_EQ(m.qbar_count, 1U);
}

TEST(Lemma23, MaxSpectrumOnDuplications) {
  for (std::uint64_t n : {6, 10, 12, 18}) {
    const auto am = dup(n, 2);
    EXPECT_TRUE(max_spectrum_pattern(am).holds) << am.ring.label();
    EXPECT_TRUE(check_lemma23(am).holds) << am.ring.label();
  }
}

TEST(QuotientIso, Holds) {
  EXPECT_TRUE(quotient_iso_check(dup(8, 2)).holds);
  const auto t = make_trivial_extension(make_zmod(2), regular_module(make_zmod(2)));
  EXPECT_TRUE(quotient_iso_check(make_amalgamation(canonical_hom(make_zmod(2), t), ideal_closure(t, {1}))).holds);
}
