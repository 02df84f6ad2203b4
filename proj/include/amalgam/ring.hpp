#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with identity, stored as operation tables.
 *
 * Elements are opaque indices 0..order-1 into a canonical carrier
 * enumeration. Every constructor in this library fixes that enumeration
 * deterministically (lexicographic over component indices), so building the
 * same ring twice yields identical tables and identical witnesses.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/element_set.hpp"
#include "amalgam/error.hpp"

namespace amalgam {

/// Default bound on ring order for exhaustive algorithms.
inline constexpr std::size_t kDefaultCap = 256;

/// How a ring was built. Used by homomorphism factories that need to know
/// the component structure (projections, canonical maps).
enum class Construction {
  zmod,
  product,
  trivial_extension,
  quotient,
  amalgamation,
  factor,
  tables,
};

class FiniteRing {
 public:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> add;  // order * order
    std::vector<Element> mul;  // order * order
    std::vector<Element> neg;  // order
    Element zero = 0;
    Element one = 0;
    std::string label;
    std::vector<std::string> element_labels;
    Construction construction = Construction::tables;
    std::uint64_t modulus = 0;  // zmod only
    // Component rings for pair-structured carriers, and the per-element
    // component indices (product, trivial extension, amalgamation).
    std::vector<FiniteRing> components;
    std::vector<std::pair<Element, Element>> coords;
  };

  /// Wraps raw tables. Checks shapes and index ranges only; ring axioms are
  /// the job of verify_ring_axioms.
  static FiniteRing from_data(Data d) {
    const auto n = d.order;
    if (n < 2) throw invalid_order_error("ring order must be at least 2, got " + std::to_string(n));
    if (d.add.size() != n * n || d.mul.size() != n * n || d.neg.size() != n) {
      throw error("operation tables have the wrong shape for order " + std::to_string(n));
    }
    auto in_range = [n](Element e) { return e < n; };
    if (!std::ranges::all_of(d.add, in_range) || !std::ranges::all_of(d.mul, in_range) ||
        !std::ranges::all_of(d.neg, in_range) || !in_range(d.zero) || !in_range(d.one)) {
      throw error("operation table entry out of range");
    }
    if (d.element_labels.size() != n) {
      d.element_labels.resize(n);
      for (std::size_t i = 0; i < n; ++i) d.element_labels[i] = "#" + std::to_string(i);
    }
    FiniteRing r;
    r.data_ = std::make_shared<const Data>(std::move(d));
    return r;
  }

  std::size_t order() const noexcept { return data_->order; }
  Element zero() const noexcept { return data_->zero; }
  Element one() const noexcept { return data_->one; }

  Element add(Element x, Element y) const { return data_->add[x * order() + y]; }
  Element mul(Element x, Element y) const { return data_->mul[x * order() + y]; }
  Element neg(Element x) const { return data_->neg[x]; }
  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  /// n·x for a nonnegative integer n.
  Element scale(std::uint64_t n, Element x) const {
    Element acc = zero();
    Element base = x;
    while (n > 0) {
      if (n & 1U) acc = add(acc, base);
      base = add(base, base);
      n >>= 1U;
    }
    return acc;
  }

  auto elements() const {
    return std::views::iota(Element{0}, static_cast<Element>(order()));
  }

  const std::string& label() const noexcept { return data_->label; }
  const std::string& element_label(Element x) const { return data_->element_labels[x]; }

  /// "label [#index]", the form used in witnesses.
  std::string describe(Element x) const {
    return element_label(x) + " [#" + std::to_string(x) + "]";
  }

  Construction construction() const noexcept { return data_->construction; }
  std::uint64_t modulus() const noexcept { return data_->modulus; }
  const std::vector<FiniteRing>& components() const noexcept { return data_->components; }
  const std::vector<std::pair<Element, Element>>& coords() const noexcept { return data_->coords; }
  const Data& data() const noexcept { return *data_; }

  /// Identical tables (labels ignored).
  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    if (a.data_ == b.data_) return true;
    return a.order() == b.order() && a.zero() == b.zero() && a.one() == b.one() &&
           a.data_->add == b.data_->add && a.data_->mul == b.data_->mul;
  }

  /// FNV-1a digest of the operation tables; stable across runs and builds.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFFU;
        h *= 1099511628211ULL;
      }
    };
    mix(order());
    mix(zero());
    mix(one());
    for (auto e : data_->add) mix(e);
    for (auto e : data_->mul) mix(e);
    return h;
  }

 private:
  std::shared_ptr<const Data> data_;
};

inline void require_same_ring(const FiniteRing& a, const FiniteRing& b, const char* where) {
  if (!(a == b)) {
    throw ring_mismatch_error(std::string(where) + ": operands live in different rings (" +
                              a.label() + " vs " + b.label() + ")");
  }
}

/// Z/nZ with carrier {0..n-1}.
inline FiniteRing make_zmod(std::uint64_t n) {
  if (n < 2) throw invalid_order_error("Z/nZ needs n >= 2, got " + std::to_string(n));
  if (n > 65536) throw size_cap_error("Z/nZ with n = " + std::to_string(n) + " is too large to tabulate");
  FiniteRing::Data d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.neg.resize(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    d.neg[x] = static_cast<Element>((n - x) % n);
    for (std::uint64_t y = 0; y < n; ++y) {
      d.add[x * n + y] = static_cast<Element>((x + y) % n);
      d.mul[x * n + y] = static_cast<Element>((x * y) % n);
    }
  }
  d.zero = 0;
  d.one = 1;
  d.label = "Z/" + std::to_string(n);
  d.element_labels.resize(n);
  for (std::uint64_t x = 0; x < n; ++x) d.element_labels[x] = std::to_string(x);
  d.construction = Construction::zmod;
  d.modulus = n;
  return FiniteRing::from_data(std::move(d));
}

/// Componentwise ring on R × S; (r, s) has index r·|S| + s.
inline FiniteRing make_product(const FiniteRing& r, const FiniteRing& s) {
  const auto nr = r.order(), ns = s.order(), n = nr * ns;
  if (n > 65536) throw size_cap_error("product of order " + std::to_string(n) + " is too large to tabulate");
  FiniteRing::Data d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.neg.resize(n);
  d.coords.resize(n);
  d.element_labels.resize(n);
  auto idx = [ns](Element a, Element b) { return static_cast<Element>(a * ns + b); };
  for (Element a = 0; a < nr; ++a) {
    for (Element b = 0; b < ns; ++b) {
      const auto x = idx(a, b);
      d.coords[x] = {a, b};
      d.neg[x] = idx(r.neg(a), s.neg(b));
      d.element_labels[x] = "(" + r.element_label(a) + "," + s.element_label(b) + ")";
    }
  }
  for (Element x = 0; x < n; ++x) {
    const auto [a, b] = d.coords[x];
    for (Element y = 0; y < n; ++y) {
      const auto [c, e] = d.coords[y];
      d.add[x * n + y] = idx(r.add(a, c), s.add(b, e));
      d.mul[x * n + y] = idx(r.mul(a, c), s.mul(b, e));
    }
  }
  d.zero = idx(r.zero(), s.zero());
  d.one = idx(r.one(), s.one());
  d.label = "(" + r.label() + " x " + s.label() + ")";
  d.construction = Construction::product;
  d.components = {r, s};
  return FiniteRing::from_data(std::move(d));
}

// ---------------------------------------------------------------------------
// Axiom verification

/// Fixed sample for rings above the exhaustive cap.
inline constexpr std::uint64_t kAxiomSampleSeed = 0x5EED0001ULL;
inline constexpr std::size_t kAxiomSampleCount = 10000;

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;
};

struct AxiomReport {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<AxiomResult> axioms;

  bool all_passed() const {
    return std::ranges::all_of(axioms, [](const AxiomResult& a) { return a.passed; });
  }
  const AxiomResult* find(const std::string& name) const {
    for (const auto& a : axioms) {
      if (a.name == name) return &a;
    }
    return nullptr;
  }
};

/// Checks the commutative-ring-with-identity axioms. Exhaustive for order up
/// to kDefaultCap; above that, kAxiomSampleCount triples drawn with
/// kAxiomSampleSeed. The first violation of each axiom is kept as witness.
inline AxiomReport verify_ring_axioms(const FiniteRing& r) {
  AxiomReport rep;
  const auto n = r.order();
  rep.exhaustive = n <= kDefaultCap;
  rep.seed = rep.exhaustive ? 0 : kAxiomSampleSeed;

  AxiomResult nontrivial{"zero_ne_one", r.zero() != r.one(), {}};
  AxiomResult add_id{"additive_identity", true, {}};
  AxiomResult add_inv{"additive_inverse", true, {}};
  AxiomResult mul_id{"multiplicative_identity", true, {}};
  for (auto x : r.elements()) {
    if (add_id.passed && (r.add(x, r.zero()) != x || r.add(r.zero(), x) != x)) add_id = {add_id.name, false, {x}};
    if (add_inv.passed && r.add(x, r.neg(x)) != r.zero()) add_inv = {add_inv.name, false, {x}};
    if (mul_id.passed && (r.mul(x, r.one()) != x || r.mul(r.one(), x) != x)) mul_id = {mul_id.name, false, {x}};
  }

  AxiomResult add_comm{"additive_commutativity", true, {}};
  AxiomResult mul_comm{"multiplicative_commutativity", true, {}};
  for (auto x : r.elements()) {
    for (auto y : r.elements()) {
      if (add_comm.passed && r.add(x, y) != r.add(y, x)) add_comm = {add_comm.name, false, {x, y}};
      if (mul_comm.passed && r.mul(x, y) != r.mul(y, x)) mul_comm = {mul_comm.name, false, {x, y}};
    }
  }

  AxiomResult add_assoc{"additive_associativity", true, {}};
  AxiomResult mul_assoc{"multiplicative_associativity", true, {}};
  AxiomResult distrib{"distributivity", true, {}};
  auto triple = [&](Element x, Element y, Element z) {
    if (add_assoc.passed && r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) add_assoc = {add_assoc.name, false, {x, y, z}};
    if (mul_assoc.passed && r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) mul_assoc = {mul_assoc.name, false, {x, y, z}};
    if (distrib.passed && r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) distrib = {distrib.name, false, {x, y, z}};
  };
  if (rep.exhaustive) {
    for (auto x : r.elements())
      for (auto y : r.elements())
        for (auto z : r.elements()) triple(x, y, z);
  } else {
    std::mt19937_64 rng(kAxiomSampleSeed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < kAxiomSampleCount; ++i) {
      const auto x = pick(rng), y = pick(rng), z = pick(rng);
      triple(x, y, z);
    }
    rep.samples = kAxiomSampleCount;
  }
  rep.axioms = {nontrivial, add_id, add_inv, add_comm, add_assoc, mul_id, mul_comm, mul_assoc, distrib};
  return rep;
}

}  // namespace amalgam
