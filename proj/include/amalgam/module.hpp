#pragma once

#include <string>
#include <vector>

#include "amalgam/hom.hpp"
#include "amalgam/ring.hpp"

namespace amalgam {

/// A finite module over a finite ring: an abelian group with a bilinear,
/// unital, associative scalar action. Axioms are verified at construction.
class FiniteModule {
 public:
  struct Data {
    FiniteRing ring;
    std::size_t order = 0;
    std::vector<Element> add;     // order * order
    std::vector<Element> neg;     // order
    std::vector<Element> action;  // ring.order() * order
    Element zero = 0;
    std::string label;
    std::vector<std::string> element_labels;
  };

  static FiniteModule verified(Data d) {
    const auto n = d.order;
    const auto& r = d.ring;
    if (n == 0 || d.add.size() != n * n || d.neg.size() != n || d.action.size() != r.order() * n) {
      throw error("module tables have the wrong shape");
    }
    FiniteModule m;
    m.data_ = std::make_shared<const Data>(std::move(d));
    m.check_axioms();
    return m;
  }

  const FiniteRing& ring() const noexcept { return data_->ring; }
  std::size_t order() const noexcept { return data_->order; }
  Element zero() const noexcept { return data_->zero; }
  Element add(Element x, Element y) const { return data_->add[x * order() + y]; }
  Element neg(Element x) const { return data_->neg[x]; }
  Element act(Element r, Element x) const { return data_->action[r * order() + x]; }
  const std::string& label() const noexcept { return data_->label; }
  const std::string& element_label(Element x) const { return data_->element_labels[x]; }

 private:
  void check_axioms() const {
    const auto& r = ring();
    const auto n = order();
    auto fail = [](const std::string& what, std::vector<Element> w) { throw axiom_error("module: " + what, std::move(w)); };
    for (Element x = 0; x < n; ++x) {
      if (add(x, zero()) != x) fail("zero is not an additive identity", {x});
      if (add(x, neg(x)) != zero()) fail("neg is not an additive inverse", {x});
      if (act(r.one(), x) != x) fail("1 does not act as the identity", {x});
      for (Element y = 0; y < n; ++y) {
        if (add(x, y) != add(y, x)) fail("addition is not commutative", {x, y});
        for (Element z = 0; z < n; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) fail("addition is not associative", {x, y, z});
        }
      }
    }
    for (auto a : r.elements()) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (act(a, add(x, y)) != add(act(a, x), act(a, y))) fail("action is not additive in the module", {a, x, y});
        }
        for (auto b : r.elements()) {
          if (act(r.add(a, b), x) != add(act(a, x), act(b, x))) fail("action is not additive in the ring", {a, b, x});
          if (act(r.mul(a, b), x) != act(a, act(b, x))) fail("action is not associative", {a, b, x});
        }
      }
    }
  }

  std::shared_ptr<const Data> data_;
};

/// The target of f viewed as a module over its source: r·s := f(r)s.
inline FiniteModule module_via(const RingHom& f) {
  const auto& r = f.source();
  const auto& s = f.target();
  FiniteModule::Data d;
  d.ring = r;
  d.order = s.order();
  d.add = s.data().add;
  d.neg = s.data().neg;
  d.zero = s.zero();
  d.action.resize(r.order() * s.order());
  for (auto a : r.elements()) {
    for (auto x : s.elements()) d.action[a * s.order() + x] = s.mul(f(a), x);
  }
  d.label = s.label();
  d.element_labels = s.data().element_labels;
  return FiniteModule::verified(std::move(d));
}

/// A ring as a module over itself.
inline FiniteModule regular_module(const FiniteRing& r) { return module_via(identity_hom(r)); }

/// Idealization A ⋉ M on the carrier A × M, (a,e)(a',e') = (aa', ae' + a'e).
/// Element (a, e) has index a·|M| + e.
inline FiniteRing make_trivial_extension(const FiniteRing& a, const FiniteModule& m) {
  if (!(m.ring() == a)) {
    throw ring_mismatch_error("module " + m.label() + " is over " + m.ring().label() + ", not " + a.label());
  }
  const auto na = a.order(), nm = m.order(), n = na * nm;
  if (n > 65536) throw size_cap_error("trivial extension of order " + std::to_string(n) + " is too large");
  FiniteRing::Data d;
  d.order = n;
  d.add.resize(n * n);
  d.mul.resize(n * n);
  d.neg.resize(n);
  d.coords.resize(n);
  d.element_labels.resize(n);
  auto idx = [nm](Element x, Element e) { return static_cast<Element>(x * nm + e); };
  for (Element x = 0; x < na; ++x) {
    for (Element e = 0; e < nm; ++e) {
      const auto i = idx(x, e);
      d.coords[i] = {x, e};
      d.neg[i] = idx(a.neg(x), m.neg(e));
      d.element_labels[i] = "(" + a.element_label(x) + "," + m.element_label(e) + ")";
    }
  }
  for (Element i = 0; i < n; ++i) {
    const auto [x, e] = d.coords[i];
    for (Element j = 0; j < n; ++j) {
      const auto [y, f] = d.coords[j];
      d.add[i * n + j] = idx(a.add(x, y), m.add(e, f));
      d.mul[i * n + j] = idx(a.mul(x, y), m.add(m.act(x, f), m.act(y, e)));
    }
  }
  d.zero = idx(a.zero(), m.zero());
  d.one = idx(a.one(), m.zero());
  d.label = "(" + a.label() + " ⋉ " + m.label() + ")";
  d.construction = Construction::trivial_extension;
  // Component 1 is the module's additive group carried as a ring only for
  // labelling; projection onto it is not a homomorphism.
  d.components = {a};
  return FiniteRing::from_data(std::move(d));
}

}  // namespace amalgam
