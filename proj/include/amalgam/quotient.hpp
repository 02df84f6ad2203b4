#pragma once

#include <vector>

#include "amalgam/hom.hpp"
#include "amalgam/ideal.hpp"

namespace amalgam {

struct QuotientRing {
  FiniteRing ring;
  RingHom projection;
};

/// R/I with cosets enumerated by their smallest representative.
inline QuotientRing make_quotient(const FiniteRing& r, const Ideal& i) {
  require_same_ring(r, i.ring(), "quotient");
  if (i.is_whole()) throw improper_ideal_error("cannot form the quotient of " + r.label() + " by the whole ring");
  constexpr Element kNone = 0xFFFFFFFFU;
  std::vector<Element> coset_of(r.order(), kNone);
  std::vector<Element> reps;
  const auto members = i.elements();
  for (auto x : r.elements()) {
    if (coset_of[x] != kNone) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto m : members) coset_of[r.add(x, m)] = c;
  }
  const auto n = reps.size();
  FiniteRing::Data d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.neg.resize(n);
  d.element_labels.resize(n);
  for (Element a = 0; a < n; ++a) {
    d.neg[a] = coset_of[r.neg(reps[a])];
    d.element_labels[a] = "[" + r.element_label(reps[a]) + "]";
    for (Element b = 0; b < n; ++b) {
      d.add[a * n + b] = coset_of[r.add(reps[a], reps[b])];
      d.mul[a * n + b] = coset_of[r.mul(reps[a], reps[b])];
    }
  }
  d.zero = coset_of[r.zero()];
  d.one = coset_of[r.one()];
  d.label = r.label() + "/" + i.describe();
  d.construction = Construction::quotient;
  auto q = FiniteRing::from_data(std::move(d));
  auto proj = RingHom::verified(r, q, std::move(coset_of));
  return {std::move(q), std::move(proj)};
}

}  // namespace amalgam
