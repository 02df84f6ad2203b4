#pragma once

/**
 * @file exact_local.hpp
 * @brief Duplications Z_(p) ⋈ p^k Z_(p) and the exact amalgam Z ⋈ J over
 * Z → Z/nZ, handled with exact fractions instead of tables.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/plocal.hpp"
#include "amalgam/status.hpp"

namespace amalgam {

/// (a, second) in Z_(p) ⋈ p^k Z_(p), i.e. second − a ∈ p^k Z_(p).
struct DuplicationElement {
  int k = 1;
  PLocalRational a;
  PLocalRational second;

  DuplicationElement(int k_, PLocalRational a_, PLocalRational b_) : k(k_), a(a_), second(b_) {
    if (!in_power_ideal(second - a, k)) {
      throw error("(" + a.to_string() + ", " + second.to_string() + ") is not in the duplication along p^" +
                  exponent_to_string(k));
    }
  }

  std::int64_t prime() const { return a.prime(); }
  /// Nonzero in both coordinates; such elements are regular.
  bool is_regular() const { return !a.is_zero() && !second.is_zero(); }
  std::string to_string() const { return "(" + a.to_string() + "," + second.to_string() + ")"; }

  friend bool operator==(const DuplicationElement& x, const DuplicationElement& y) {
    return x.k == y.k && x.a == y.a && x.second == y.second;
  }
};

inline DuplicationElement operator*(const DuplicationElement& x, const DuplicationElement& y) {
  return {x.k, x.a * y.a, x.second * y.second};
}

// ---------------------------------------------------------------------------

struct Cor27Verdict {
  bool holds = true;
  std::optional<PLocalRational> witness;  // a with aI ≠ I
  int witness_product_exponent = 0;       // aI = p^(k + v(a)) Z_(p)
};

inline std::vector<PLocalRational> default_cor27_sample(std::int64_t p) {
  return {PLocalRational(p, p), PLocalRational(p, -p), PLocalRational(p, p * p), PLocalRational(p, p, p + 1)};
}

/// Evaluates I = aI for I = p^k Z_(p) over nonzero non-units a. Since
/// aI = p^(k + v(a)) Z_(p), each sample element fails unless I = (0).
inline Cor27Verdict corollary27_condition(std::int64_t p, int k, const std::vector<PLocalRational>& sample) {
  if (k < 1) throw error("ideal exponent must be at least 1");
  for (const auto& a : sample) {
    if (a.prime() != p) throw prime_mismatch_error("sample element " + a.to_string() + " is over another prime");
    if (a.is_zero() || a.is_unit()) {
      throw invalid_sample_error("sample element " + a.to_string() + " is not a nonzero non-unit");
    }
  }
  Cor27Verdict v;
  if (k == kZeroIdeal) return v;
  for (const auto& a : sample) {
    const int product = k + a.valuation();
    if (product != k) {
      v.holds = false;
      v.witness = a;
      v.witness_product_exponent = product;
      return v;
    }
  }
  return v;
}

inline Cor27Verdict corollary27_condition(std::int64_t p, int k) {
  return corollary27_condition(p, k, default_cor27_sample(p));
}

/// Some q in the duplication with x·q = y, if any.
inline std::optional<DuplicationElement> divides_in_duplication(const DuplicationElement& x,
                                                                const DuplicationElement& y) {
  if (x.prime() != y.prime()) throw prime_mismatch_error("elements over different primes");
  if (x.k != y.k) throw error("elements of different duplications");
  const auto p = x.prime();
  const PLocalRational zero(p, 0);
  const bool a0 = x.a.is_zero(), b0 = x.second.is_zero();
  if (a0 && b0) {
    if (y.a.is_zero() && y.second.is_zero()) return DuplicationElement(x.k, zero, zero);
    return std::nullopt;
  }
  if (a0 || b0) {
    // One coordinate of q is free; taking both equal keeps q in the ring.
    const auto& xs = a0 ? x.second : x.a;
    const auto& ys = a0 ? y.second : y.a;
    const auto& yz = a0 ? y.a : y.second;
    if (!yz.is_zero()) return std::nullopt;
    auto q = divide(ys, xs);
    if (!q) return std::nullopt;
    return DuplicationElement(x.k, *q, *q);
  }
  auto q1 = divide(y.a, x.a);
  auto q2 = divide(y.second, x.second);
  if (!q1 || !q2 || !in_power_ideal(*q2 - *q1, x.k)) return std::nullopt;
  return DuplicationElement(x.k, *q1, *q2);
}

struct PrueferWitness {
  DuplicationElement x;  // regular
  DuplicationElement y;
};

namespace detail {

/// Elements of Z_(p) with height at most bound, in search order.
inline std::vector<PLocalRational> bounded_rationals(std::int64_t p, std::int64_t bound) {
  std::vector<PLocalRational> out;
  for (std::int64_t den = 1; den <= bound; ++den) {
    if (den % p == 0) continue;
    for (std::int64_t num = -bound; num <= bound; ++num) {
      if (std::gcd(num, den) != 1) continue;
      out.emplace_back(p, num, den);
    }
  }
  std::ranges::sort(out, [](const auto& x, const auto& y) { return rational_key(x) < rational_key(y); });
  return out;
}

}  // namespace detail

/// Looks for a regular x and any y, neither dividing the other. Elements are
/// written (a, a + p^k·t) with a, t of height at most search_bound, and have
/// level max(height(a), height(t)). Pairs are visited by level, then by the
/// search order of (a, t) for x and then for y.
inline std::optional<PrueferWitness> pruefer_witness_search(std::int64_t p, int k, std::int64_t search_bound) {
  const auto rats = detail::bounded_rationals(p, search_bound);
  const PLocalRational zero(p, 0);
  struct Entry {
    std::int64_t level;
    std::size_t ia, it;
    DuplicationElement e;
  };
  std::vector<Entry> elems;
  const bool zero_ideal = k == kZeroIdeal;
  std::optional<PLocalRational> pk;
  if (!zero_ideal) pk = PLocalRational(p, ipow(p, k));
  for (std::size_t ia = 0; ia < rats.size(); ++ia) {
    for (std::size_t it = 0; it < rats.size(); ++it) {
      if (zero_ideal && !rats[it].is_zero()) continue;
      const auto& a = rats[ia];
      const auto second = zero_ideal ? a : a + *pk * rats[it];
      elems.push_back({std::max(a.height(), rats[it].height()), ia, it, DuplicationElement(k, a, second)});
    }
  }
  std::ranges::stable_sort(elems, [](const Entry& x, const Entry& y) {
    return std::tie(x.level, x.ia, x.it) < std::tie(y.level, y.ia, y.it);
  });

  std::int64_t level = 0;
  for (std::size_t end = 0; end < elems.size();) {
    level = elems[end].level;
    std::size_t next = end;
    while (next < elems.size() && elems[next].level == level) ++next;
    // Pairs with at least one member at this level.
    for (std::size_t i = 0; i < next; ++i) {
      const auto& x = elems[i].e;
      if (!x.is_regular()) continue;
      for (std::size_t j = (i < end ? end : 0); j < next; ++j) {
        const auto& y = elems[j].e;
        if (!divides_in_duplication(x, y) && !divides_in_duplication(y, x)) return PrueferWitness{x, y};
      }
    }
    end = next;
  }
  return std::nullopt;
}

inline constexpr std::int64_t kDefaultSearchBound = 20;

struct Thm22Verdict {
  std::int64_t p = 2;
  int k = 1;
  bool base_pruefer = true;  // Z_(p) is a valuation domain
  Cor27Verdict condition;
  std::optional<PrueferWitness> witness;
  bool consistent = false;  // condition fails ⇔ witness found
};

inline Thm22Verdict check_thm22_instance(std::int64_t p, int k, std::int64_t search_bound = kDefaultSearchBound) {
  Thm22Verdict v;
  v.p = p;
  v.k = k;
  v.condition = corollary27_condition(p, k);
  v.witness = pruefer_witness_search(p, k, search_bound);
  v.consistent = (!v.condition.holds) == v.witness.has_value();
  return v;
}

// ---------------------------------------------------------------------------
// Z ⋈^f J for the canonical map Z → Z/nZ

struct ExactProp21Verdict {
  std::int64_t n = 0;
  std::int64_t j_gen = 0;
  std::vector<std::int64_t> j_elements;
  bool nontrivial = true;  // J ≠ 0, so hypothesis (b) holds with content
  std::size_t checked = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> disagreements;  // (a, c) pairs
  Status status = Status::pass;
};

namespace detail {

inline std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace detail

/// Compares exact zero-divisor status against S1 ∪ S2 ∪ S3 ∪ S4 on every
/// (a, f(a) + j) with |a| ≤ bound and j ∈ J = (j_gen) ⊆ Z/nZ. J = (0) is
/// accepted but reported as info, since then the torsion hypothesis holds
/// only vacuously.
inline ExactProp21Verdict sampled_prop21_exact(std::int64_t n, std::int64_t j_gen, std::int64_t bound) {
  if (n < 2) throw invalid_order_error("Z/nZ needs n >= 2");
  ExactProp21Verdict v;
  v.n = n;
  v.j_gen = detail::mod(j_gen, n);
  const auto g = std::gcd(v.j_gen, n);
  if (g == 1) throw improper_ideal_error("(" + std::to_string(j_gen) + ") is all of Z/" + std::to_string(n));
  for (std::int64_t x = 0; x < n; x += g) v.j_elements.push_back(x);
  v.nontrivial = v.j_elements.size() > 1;
  auto in_j = [&](std::int64_t c) { return c % g == 0; };
  auto kills_j = [&](std::int64_t c) {
    return std::ranges::any_of(v.j_elements, [&](std::int64_t k) { return k != 0 && (c * k) % n == 0; });
  };

  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (auto j : v.j_elements) {
      const auto c = detail::mod(a + j, n);
      ++v.checked;
      // (a, c)·(a', c') = 0 forces a' = 0 when a ≠ 0, so then c' ∈ J; every
      // (0, c) is killed by (n, 0).
      const bool zero_divisor = a == 0 || kills_j(c);
      const bool s1 = a == 0;                         // Z(Z) = {0}
      const bool s2 = c == 0 && in_j(detail::mod(a, n));
      const bool s3 = a == 0 && in_j(c);
      const bool s4 = a != 0 && kills_j(c);
      if (zero_divisor != (s1 || s2 || s3 || s4)) v.disagreements.emplace_back(a, c);
    }
  }
  v.status = v.nontrivial ? status_of(v.disagreements.empty()) : Status::info;
  return v;
}

// ---------------------------------------------------------------------------
// Z_(p) → Z_(p) ⋉ F_p, a ↦ (a, 0), J = 0 × F_p

struct Example28Verdict {
  std::int64_t p = 2;
  bool image_meets_j_trivially = false;  // f(A) ∩ J = {(0,0)}
  bool j_not_in_image = false;           // (0,1) ∈ J \ f(A)
  bool regular_maps_to_zero_divisor = false;  // f(p)·(0,1) = 0 with p regular
  bool unit_image = false;                    // f(1) is a unit
  bool holds = false;
  std::string detail;
};

/// Element (a, e) of Z_(p) ⋉ F_p.
struct IdealizationElement {
  PLocalRational a;
  std::int64_t e;
};

inline IdealizationElement idealization_mul(const IdealizationElement& x, const IdealizationElement& y) {
  const auto p = x.a.prime();
  // The residue of a ∈ Z_(p) in F_p is num · den⁻¹ mod p.
  auto residue = [p](const PLocalRational& r) {
    std::int64_t inv = 1;
    const auto d = detail::mod(r.denominator(), p);
    for (std::int64_t t = 1; t < p; ++t) {
      if ((d * t) % p == 1) inv = t;
    }
    return detail::mod(detail::mod(r.numerator(), p) * inv, p);
  };
  return {x.a * y.a, detail::mod(residue(x.a) * y.e + residue(y.a) * x.e, p)};
}

inline Example28Verdict example28_structural(std::int64_t p, std::int64_t bound = kDefaultSearchBound) {
  Example28Verdict v;
  v.p = p;
  const PLocalRational zero(p, 0), one(p, 1), pp(p, p);
  auto f = [](const PLocalRational& a) { return IdealizationElement{a, 0}; };
  auto in_j = [](const IdealizationElement& x) { return x.a.is_zero(); };

  v.image_meets_j_trivially = true;
  for (const auto& a : detail::bounded_rationals(p, bound)) {
    if (in_j(f(a)) != a.is_zero()) {
      v.image_meets_j_trivially = false;
      v.detail = "f(" + a.to_string() + ") lies in J";
    }
  }
  // f(A) has second coordinate 0, so (0,1) is outside it.
  const IdealizationElement e01{zero, 1};
  v.j_not_in_image = in_j(e01) && e01.e != 0;

  const auto prod = idealization_mul(f(pp), e01);
  v.regular_maps_to_zero_divisor = !pp.is_zero() && prod.a.is_zero() && prod.e == 0;

  const auto sq = idealization_mul(f(one), f(one));
  v.unit_image = sq.a == one && sq.e == 0;
  v.holds = v.image_meets_j_trivially && v.j_not_in_image && v.regular_maps_to_zero_divisor && v.unit_image;
  return v;
}

}  // namespace amalgam
