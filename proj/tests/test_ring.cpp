#include <gtest/gtest.h>

#include "amalgam/hom.hpp"
#include "amalgam/module.hpp"
#include "amalgam/ring.hpp"

using namespace amalgam;

TEST(Ring, ZmodTables) {
  const auto r = make_zmod(8);
  EXPECT_EQ(r.order(), 8U);
  EXPECT_EQ(r.add(5, 6), 3U);
  EXPECT_EQ(r.mul(3, 6), 2U);
  EXPECT_EQ(r.neg(3), 5U);
  EXPECT_EQ(r.scale(11, 3), 1U);
  EXPECT_EQ(r.label(), "Z/8");
  EXPECT_TRUE(verify_ring_axioms(r).all_passed());
}

TEST(Ring, InvalidOrder) {
  EXPECT_THROW(make_zmod(1), invalid_order_error);
  EXPECT_THROW(make_zmod(0), invalid_order_error);
}

TEST(Ring, ProductIndexing) {
  const auto p = make_product(make_zmod(4), make_zmod(3));
  ASSERT_EQ(p.order(), 12U);
  // (r, s) has index r·3 + s.
  EXPECT_EQ(p.coords()[7], (std::pair<Element, Element>{2, 1}));
  EXPECT_EQ(p.add(7, 7), 4U * 0 + 3 * 0 + 2);  // (0, 2)
  EXPECT_EQ(p.mul(7, 11), 3U * 2 + 2);         // (2·3, 1·2) = (2, 2)
  EXPECT_EQ(p.one(), 4U);
  EXPECT_TRUE(verify_ring_axioms(p).all_passed());
}

TEST(Ring, AxiomWitness) {
  auto d = make_zmod(4).data();
  d.mul[2 * 4 + 3] = 1;  // break commutativity: 2·3 = 1 but 3·2 = 2
  const auto broken = FiniteRing::from_data(d);
  const auto rep = verify_ring_axioms(broken);
  EXPECT_FALSE(rep.all_passed());
  const auto* comm = rep.find("multiplicative_commutativity");
  ASSERT_NE(comm, nullptr);
  EXPECT_FALSE(comm->passed);
  EXPECT_EQ(comm->witness, (std::vector<Element>{2, 3}));
  EXPECT_TRUE(rep.find("additive_commutativity")->passed);
}

TEST(Ring, TableShapeRejected) {
  FiniteRing::Data d;
  d.order = 2;
  d.add = {0, 1, 1};
  EXPECT_THROW(FiniteRing::from_data(d), error);
}

TEST(Ring, FingerprintIsStable) {
  EXPECT_EQ(make_zmod(12).fingerprint(), make_zmod(12).fingerprint());
  EXPECT_NE(make_zmod(12).fingerprint(), make_zmod(13).fingerprint());
  EXPECT_EQ(make_zmod(6), make_zmod(6));
  EXPECT_FALSE(make_zmod(6) == make_product(make_zmod(2), make_zmod(3)));
}

TEST(Hom, VerifiedRejectsNonHom) {
  const auto z4 = make_zmod(4), z2 = make_zmod(2);
  EXPECT_NO_THROW(RingHom::verified(z4, z2, {0, 1, 0, 1}));
  try {
    RingHom::verified(z4, z2, {0, 0, 0, 0});
    FAIL() << "expected axiom_error";
  } catch (const axiom_error& e) {
    EXPECT_FALSE(e.witness().empty());
  }
  // Z/3 → Z/2 has no ring map: x ↦ x mod 2 is not additive.
  EXPECT_THROW(RingHom::verified(make_zmod(3), z2, {0, 1, 0}), axiom_error);
}

TEST(Hom, CanonicalAndProjection) {
  const auto f = canonical_hom(make_zmod(12), make_zmod(4));
  EXPECT_EQ(f(7), 3U);
  EXPECT_TRUE(f.is_surjective());
  EXPECT_EQ(to_vector(f.kernel()), (std::vector<Element>{0, 4, 8}));
  EXPECT_THROW(canonical_hom(make_zmod(4), make_zmod(3)), axiom_error);

  const auto p = make_product(make_zmod(4), make_zmod(2));
  const auto pr = projection_hom(p, 1);
  EXPECT_EQ(pr.target(), make_zmod(2));
  EXPECT_EQ(pr(5), 1U);  // (2, 1)
  EXPECT_THROW(projection_hom(make_zmod(4), 0), error);
}

TEST(Hom, ChineseRemainder) {
  // Z/mn ≅ Z/m × Z/n exactly when gcd(m, n) = 1.
  EXPECT_TRUE(find_isomorphism(make_zmod(6), make_product(make_zmod(2), make_zmod(3))).has_value());
  EXPECT_TRUE(find_isomorphism(make_zmod(12), make_product(make_zmod(4), make_zmod(3))).has_value());
  EXPECT_FALSE(find_isomorphism(make_zmod(4), make_product(make_zmod(2), make_zmod(2))).has_value());
  EXPECT_FALSE(find_isomorphism(make_zmod(8), make_product(make_zmod(4), make_zmod(2))).has_value());
}

TEST(Hom, Compose) {
  const auto f = canonical_hom(make_zmod(12), make_zmod(6));
  const auto g = canonical_hom(make_zmod(6), make_zmod(3));
  const auto h = compose(g, f);
  for (Element x = 0; x < 12; ++x) EXPECT_EQ(h(x), x % 3);
}

TEST(Module, TrivialExtension) {
  const auto z4 = make_zmod(4);
  const auto m = module_via(canonical_hom(z4, make_zmod(2)));
  const auto t = make_trivial_extension(z4, m);
  EXPECT_EQ(t.order(), 8U);
  EXPECT_TRUE(verify_ring_axioms(t).all_passed());
  // (0,1)² = (0,0).
  EXPECT_EQ(t.mul(1, 1), t.zero());
  // (1,1)·(3,0) = (3, 1·0 + 3·1) = (3,1).
  EXPECT_EQ(t.mul(3, 6), 7U);
  EXPECT_THROW(make_trivial_extension(make_zmod(8), m), ring_mismatch_error);
}

// Random small products and trivial extensions satisfy the axioms.
TEST(Property, ConstructionsAreRings) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(2, 9);
  for (int i = 0; i < 25; ++i) {
    const auto a = make_zmod(pick(rng)), b = make_zmod(pick(rng));
    EXPECT_TRUE(verify_ring_axioms(make_product(a, b)).all_passed());
    EXPECT_TRUE(verify_ring_axioms(make_trivial_extension(a, regular_module(a))).all_passed());
  }
}
