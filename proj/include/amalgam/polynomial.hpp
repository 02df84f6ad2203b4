#pragma once

#include <string>
#include <vector>

#include "amalgam/ring.hpp"

namespace amalgam {

/// Polynomial over a finite ring as its coefficient list, constant term first.
using Coefficients = std::vector<Element>;

inline Coefficients poly_mul(const FiniteRing& r, const Coefficients& f, const Coefficients& g) {
  if (f.empty() || g.empty()) return {};
  Coefficients out(f.size() + g.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
  }
  return out;
}

inline bool is_zero_poly(const FiniteRing& r, const Coefficients& f) {
  for (auto c : f) {
    if (c != r.zero()) return false;
  }
  return true;
}

inline std::string describe_poly(const FiniteRing& r, const Coefficients& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " + ";
    s += r.element_label(f[i]);
    if (i == 1) s += "x";
    if (i > 1) s += "x^" + std::to_string(i);
  }
  return s.empty() ? r.element_label(r.zero()) : s;
}

}  // namespace amalgam
