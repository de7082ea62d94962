#pragma once

#include <json.hpp>

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusters.hpp"
#include "lie.hpp"
#include "lieon.hpp"
#include "scheme.hpp"

namespace lieons {

using Json = nlohmann::json;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(what + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(what + ": " + e.what());
  }
}

inline int positive_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer '") + key + "'");
  int v = j.at(key).get<int>();
  if (v <= 0) throw ParseError(std::string("'") + key + "' must be positive");
  return v;
}

inline Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string or an integer");
}

}  // namespace detail

inline Json to_json(const LieStructure& g) {
  Json br = Json::array();
  for (const auto& [key, c] : g.constants())
    br.push_back({{"i", key[0]}, {"j", key[1]}, {"k", key[2]}, {"c", c.get_str()}});
  return {{"dim", g.dim()}, {"brackets", br}};
}

inline LieStructure structure_from_json(const Json& j) {
  return detail::guarded("structure", [&] {
    int n = detail::positive_int(j, "dim");
    LieStructure g(n);
    std::set<LieStructure::Key> seen;
    for (const auto& b : j.value("brackets", Json::array())) {
      int i = b.at("i").get<int>(), jj = b.at("j").get<int>(), k = b.at("k").get<int>();
      Rational c = detail::rational_field(b.at("c"));
      if (i >= jj) throw ParseError("bracket requires i < j");
      if (c == 0) throw ParseError("zero structure constant");
      if (!seen.insert({i, jj, k}).second) throw ParseError("duplicate bracket");
      g.add(i, jj, k, c);
    }
    return g;
  });
}

inline Json to_json(const AScheme& s) {
  Json children = Json::array();
  for (const auto& c : s.children) children.push_back(to_json(c));
  Json out{{"structure", to_json(s.node)}, {"label", s.label}, {"children", children}};
  if (s.flagged) out["abelian"] = true;
  return out;
}

inline AScheme scheme_from_json(const Json& j) {
  return detail::guarded("scheme", [&] {
    AScheme s{structure_from_json(j.at("structure")), {}, j.value("label", std::string{}), j.value("abelian", false)};
    for (const auto& c : j.value("children", Json::array())) s.children.push_back(scheme_from_json(c));
    return s;
  });
}

inline Json to_json(const BaseFamily& f) {
  Json tees = Json::array(), dees = Json::array(), coeffs = Json::array();
  bool unit = true;
  for (const auto& t : f.tees) {
    tees.push_back({t.i, t.j, t.k});
    coeffs.push_back(t.coeff.get_str());
    unit = unit && t.coeff == 1;
  }
  for (const auto& d : f.dees) {
    dees.push_back({d.p, d.q});
    coeffs.push_back(d.coeff.get_str());
    unit = unit && d.coeff == 1;
  }
  Json out{{"dim", f.dim}, {"tees", tees}, {"dees", dees}};
  if (!unit) out["coeffs"] = coeffs;
  return out;
}

// Tees as [i,j,k] (the order of i and j is kept as the sign), dees as [p,q]; optional coeffs in member order.
inline BaseFamily family_from_json(const Json& j) {
  return detail::guarded("family", [&] {
    BaseFamily f{detail::positive_int(j, "dim"), {}, {}};
    for (const auto& t : j.value("tees", Json::array())) {
      if (!t.is_array() || t.size() != 3) throw ParseError("tee must be [i,j,k]");
      f.tees.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
    }
    for (const auto& d : j.value("dees", Json::array())) {
      if (!d.is_array() || d.size() != 2) throw ParseError("dee must be [p,q]");
      f.dees.emplace_back(d[0].get<int>(), d[1].get<int>());
    }
    if (j.contains("coeffs")) {
      const auto& c = j.at("coeffs");
      if (!c.is_array() || c.size() != f.size()) throw ParseError("one coefficient per member required");
      for (std::size_t a = 0; a < f.tees.size(); ++a) f.tees[a].coeff *= detail::rational_field(c[a]);
      for (std::size_t a = 0; a < f.dees.size(); ++a) f.dees[a].coeff = detail::rational_field(c[f.tees.size() + a]);
    }
    f.validate();
    return f;
  });
}

inline std::vector<Rational> family_coeffs(const BaseFamily& f) {
  std::vector<Rational> c;
  for (const auto& t : f.tees) c.push_back(t.coeff);
  for (const auto& d : f.dees) c.push_back(d.coeff);
  return c;
}

inline Json to_json(const ClusterCard& c) {
  return {{"n_t", c.n_t}, {"n_e", c.n_e}, {"n_d", c.n_d}, {"n_tr", c.n_tr}, {"n_r", c.n_r},
          {"t", c.t},     {"p", c.p},     {"B", c.B},     {"D", c.D}};
}

// Graph of the family: tee ends joined to the center by plain edges, dees as dashed arrows.
inline std::string to_dot(const BaseFamily& f, const std::string& name = "F") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (int v : f.vertices()) os << "  e" << v << " [label=\"e" << v << "\"];\n";
  for (const auto& t : f.tees) {
    os << "  e" << t.i << " -> e" << t.k << " [dir=none];\n";
    os << "  e" << t.j << " -> e" << t.k << " [dir=none];\n";
  }
  for (const auto& d : f.dees) os << "  e" << d.p << " -> e" << d.q << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace lieons
