#pragma once

/**
 * @file spec.hpp
 * @brief Ring-definition documents: a JSON tree of construction nodes.
 *
 *   {"kind":"zmod","n":8}
 *   {"kind":"product","left":R,"right":S}
 *   {"kind":"trivial_extension","base":A,"module":{"ring":M,"hom":H}}
 *   {"kind":"quotient","base":R,"ideal_gens":[...]}
 *   {"kind":"duplication","base":A,"ideal_gens":[...]}
 *   {"kind":"amalgamation","A":A,"B":B,"hom":H,"J_gens":[...]}
 *
 * Homomorphisms: {"kind":"identity"}, {"kind":"canonical"},
 * {"kind":"projection","component":0}, {"kind":"table","pairs":[[s,t],...]}.
 * Element references are carrier indices of the ring they belong to.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "amalgam/amalgamation.hpp"
#include "amalgam/hom.hpp"
#include "amalgam/module.hpp"
#include "amalgam/quotient.hpp"

namespace amalgam {

struct HomSpec {
  enum class Kind { identity, canonical, projection, table };
  Kind kind = Kind::identity;
  std::size_t component = 0;
  std::vector<std::pair<Element, Element>> pairs;

  friend bool operator==(const HomSpec&, const HomSpec&) = default;
};

struct RingSpec {
  enum class Kind { zmod, product, trivial_extension, quotient, duplication, amalgamation };
  Kind kind = Kind::zmod;
  std::uint64_t n = 0;
  // product: left/right; trivial_extension: base/module ring; quotient and
  // duplication: base; amalgamation: A/B.
  std::shared_ptr<RingSpec> first;
  std::shared_ptr<RingSpec> second;
  std::optional<HomSpec> hom;
  std::vector<Element> gens;

  friend bool operator==(const RingSpec& x, const RingSpec& y) {
    auto same = [](const std::shared_ptr<RingSpec>& a, const std::shared_ptr<RingSpec>& b) {
      if (!a || !b) return !a && !b;
      return *a == *b;
    };
    return x.kind == y.kind && x.n == y.n && same(x.first, y.first) && same(x.second, y.second) && x.hom == y.hom &&
           x.gens == y.gens;
  }
};

// ---------------------------------------------------------------------------
// Rendering

inline nlohmann::ordered_json to_json(const HomSpec& h) {
  nlohmann::ordered_json j;
  switch (h.kind) {
    case HomSpec::Kind::identity: j["kind"] = "identity"; break;
    case HomSpec::Kind::canonical: j["kind"] = "canonical"; break;
    case HomSpec::Kind::projection:
      j["kind"] = "projection";
      j["component"] = h.component;
      break;
    case HomSpec::Kind::table: {
      j["kind"] = "table";
      auto pairs = nlohmann::ordered_json::array();
      for (const auto& [s, t] : h.pairs) pairs.push_back({s, t});
      j["pairs"] = pairs;
      break;
    }
  }
  return j;
}

inline nlohmann::ordered_json to_json(const RingSpec& s) {
  nlohmann::ordered_json j;
  switch (s.kind) {
    case RingSpec::Kind::zmod:
      j["kind"] = "zmod";
      j["n"] = s.n;
      break;
    case RingSpec::Kind::product:
      j["kind"] = "product";
      j["left"] = to_json(*s.first);
      j["right"] = to_json(*s.second);
      break;
    case RingSpec::Kind::trivial_extension:
      j["kind"] = "trivial_extension";
      j["base"] = to_json(*s.first);
      j["module"] = {{"ring", to_json(*s.second)}, {"hom", to_json(*s.hom)}};
      break;
    case RingSpec::Kind::quotient:
    case RingSpec::Kind::duplication:
      j["kind"] = s.kind == RingSpec::Kind::quotient ? "quotient" : "duplication";
      j["base"] = to_json(*s.first);
      j["ideal_gens"] = s.gens;
      break;
    case RingSpec::Kind::amalgamation:
      j["kind"] = "amalgamation";
      j["A"] = to_json(*s.first);
      j["B"] = to_json(*s.second);
      j["hom"] = to_json(*s.hom);
      j["J_gens"] = s.gens;
      break;
  }
  return j;
}

inline std::string render(const RingSpec& s) { return to_json(s).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

using Json = nlohmann::json;

inline const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw parse_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(path + ": missing field \"" + key + "\"");
  return *it;
}

inline std::uint64_t uint_field(const Json& j, const char* key, const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw parse_error(path + "." + key + ": expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

inline std::vector<Element> element_list(const Json& j, const char* key, const std::string& path) {
  const auto& v = field(j, key, path);
  if (!v.is_array()) throw parse_error(path + "." + key + ": expected an array of element indices");
  std::vector<Element> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer() || v[i].get<std::int64_t>() < 0 || v[i].get<std::int64_t>() > 0xFFFFFFFE) {
      throw parse_error(path + "." + key + "[" + std::to_string(i) + "]: expected an element index");
    }
    out.push_back(v[i].get<Element>());
  }
  return out;
}

inline std::string kind_of(const Json& j, const std::string& path) {
  const auto& k = field(j, "kind", path);
  if (!k.is_string()) throw parse_error(path + ".kind: expected a string");
  return k.get<std::string>();
}

inline HomSpec hom_from_json(const Json& j, const std::string& path) {
  HomSpec h;
  const auto kind = kind_of(j, path);
  if (kind == "identity") {
    h.kind = HomSpec::Kind::identity;
  } else if (kind == "canonical") {
    h.kind = HomSpec::Kind::canonical;
  } else if (kind == "projection") {
    h.kind = HomSpec::Kind::projection;
    h.component = uint_field(j, "component", path);
    if (h.component > 1) throw parse_error(path + ".component: must be 0 or 1");
  } else if (kind == "table") {
    h.kind = HomSpec::Kind::table;
    const auto& pairs = field(j, "pairs", path);
    if (!pairs.is_array()) throw parse_error(path + ".pairs: expected an array of [source, target] pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
        throw parse_error(path + ".pairs[" + std::to_string(i) + "]: expected [source, target]");
      }
      h.pairs.emplace_back(p[0].get<Element>(), p[1].get<Element>());
    }
  } else {
    throw parse_error(path + ".kind: unknown homomorphism kind \"" + kind + "\"");
  }
  return h;
}

inline RingSpec spec_from_json(const Json& j, const std::string& path) {
  RingSpec s;
  const auto kind = kind_of(j, path);
  auto child = [&](const Json& parent, const char* key, const std::string& at) {
    return std::make_shared<RingSpec>(spec_from_json(field(parent, key, at), at + "." + key));
  };
  if (kind == "zmod") {
    s.kind = RingSpec::Kind::zmod;
    s.n = uint_field(j, "n", path);
  } else if (kind == "product") {
    s.kind = RingSpec::Kind::product;
    s.first = child(j, "left", path);
    s.second = child(j, "right", path);
  } else if (kind == "trivial_extension") {
    s.kind = RingSpec::Kind::trivial_extension;
    s.first = child(j, "base", path);
    const auto& m = field(j, "module", path);
    s.second = child(m, "ring", path + ".module");
    s.hom = hom_from_json(field(m, "hom", path + ".module"), path + ".module.hom");
  } else if (kind == "quotient" || kind == "duplication") {
    s.kind = kind == "quotient" ? RingSpec::Kind::quotient : RingSpec::Kind::duplication;
    s.first = child(j, "base", path);
    s.gens = element_list(j, "ideal_gens", path);
  } else if (kind == "amalgamation") {
    s.kind = RingSpec::Kind::amalgamation;
    s.first = child(j, "A", path);
    s.second = child(j, "B", path);
    s.hom = hom_from_json(field(j, "hom", path), path + ".hom");
    s.gens = element_list(j, "J_gens", path);
  } else {
    throw parse_error(path + ".kind: unknown ring kind \"" + kind + "\"");
  }
  return s;
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

/// Parses a ring-definition document. Syntax errors carry line and column;
/// structural errors name the JSON path of the offending field.
inline RingSpec parse_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_column(text, e.byte);
    throw parse_error("malformed ring definition", line, col);
  }
  return detail::spec_from_json(j, "$");
}

// ---------------------------------------------------------------------------
// Building

struct BuiltRing {
  FiniteRing ring;
  std::optional<AmalgamRing> amalgam;  // for duplication and amalgamation nodes
};

namespace detail {

inline Ideal ideal_in(const FiniteRing& r, const std::vector<Element>& gens, const std::string& what) {
  for (auto g : gens) {
    if (g >= r.order()) {
      throw error(what + ": generator " + std::to_string(g) + " is not an element of " + r.label() + " (order " +
                  std::to_string(r.order()) + ")");
    }
  }
  return ideal_closure(r, gens);
}

inline RingHom build_hom(const HomSpec& h, const FiniteRing& source, const FiniteRing& target) {
  switch (h.kind) {
    case HomSpec::Kind::identity:
      require_same_ring(source, target, "identity homomorphism");
      return identity_hom(source);
    case HomSpec::Kind::canonical:
      return canonical_hom(source, target);
    case HomSpec::Kind::projection: {
      auto p = projection_hom(source, h.component);
      require_same_ring(p.target(), target, "projection homomorphism");
      return RingHom::verified(source, target, p.table());
    }
    case HomSpec::Kind::table:
      for (const auto& [s, t] : h.pairs) {
        if (t >= target.order()) throw error("table entry target " + std::to_string(t) + " out of range");
      }
      return table_hom(source, target, h.pairs);
  }
  throw error("unknown homomorphism kind");
}

}  // namespace detail

inline BuiltRing build(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::zmod:
      return {make_zmod(s.n), std::nullopt};
    case RingSpec::Kind::product:
      return {make_product(build(*s.first).ring, build(*s.second).ring), std::nullopt};
    case RingSpec::Kind::trivial_extension: {
      const auto a = build(*s.first).ring;
      const auto m = build(*s.second).ring;
      return {make_trivial_extension(a, module_via(detail::build_hom(*s.hom, a, m))), std::nullopt};
    }
    case RingSpec::Kind::quotient: {
      const auto r = build(*s.first).ring;
      return {make_quotient(r, detail::ideal_in(r, s.gens, "quotient")).ring, std::nullopt};
    }
    case RingSpec::Kind::duplication: {
      const auto a = build(*s.first).ring;
      auto am = make_duplication(a, detail::ideal_in(a, s.gens, "duplication"));
      return {am.ring, am};
    }
    case RingSpec::Kind::amalgamation: {
      const auto a = build(*s.first).ring;
      const auto b = build(*s.second).ring;
      auto f = detail::build_hom(*s.hom, a, b);
      auto am = make_amalgamation(f, detail::ideal_in(b, s.gens, "amalgamation"));
      return {am.ring, am};
    }
  }
  throw error("unknown ring kind");
}

// Convenience constructors for specs written in code.

inline std::shared_ptr<RingSpec> share(RingSpec s) { return std::make_shared<RingSpec>(std::move(s)); }

inline RingSpec zmod_spec(std::uint64_t n) {
  RingSpec s;
  s.kind = RingSpec::Kind::zmod;
  s.n = n;
  return s;
}

inline RingSpec product_spec(RingSpec l, RingSpec r) {
  RingSpec s;
  s.kind = RingSpec::Kind::product;
  s.first = share(std::move(l));
  s.second = share(std::move(r));
  return s;
}

inline RingSpec duplication_spec(RingSpec base, std::vector<Element> gens) {
  RingSpec s;
  s.kind = RingSpec::Kind::duplication;
  s.first = share(std::move(base));
  s.gens = std::move(gens);
  return s;
}

inline RingSpec quotient_spec(RingSpec base, std::vector<Element> gens) {
  RingSpec s = duplication_spec(std::move(base), std::move(gens));
  s.kind = RingSpec::Kind::quotient;
  return s;
}

inline RingSpec trivial_extension_spec(RingSpec base, RingSpec module_ring, HomSpec hom) {
  RingSpec s;
  s.kind = RingSpec::Kind::trivial_extension;
  s.first = share(std::move(base));
  s.second = share(std::move(module_ring));
  s.hom = std::move(hom);
  return s;
}

inline RingSpec amalgamation_spec(RingSpec a, RingSpec b, HomSpec hom, std::vector<Element> j_gens) {
  RingSpec s;
  s.kind = RingSpec::Kind::amalgamation;
  s.first = share(std::move(a));
  s.second = share(std::move(b));
  s.hom = std::move(hom);
  s.gens = std::move(j_gens);
  return s;
}

inline HomSpec hom_spec(HomSpec::Kind kind, std::size_t component = 0) {
  HomSpec h;
  h.kind = kind;
  h.component = component;
  return h;
}

}  // namespace amalgam
