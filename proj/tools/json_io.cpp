#include "json_io.hpp"

namespace pencillab::io {

json to_json(const Rational& r) { return r.get_str(); }

json to_json(const Integer& n) { return n.get_str(); }

json to_json(const BivariatePoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"c", to_json(c)}, {"x", m.x}, {"y", m.y}});
  return {{"terms", terms}, {"text", to_string(p)}};
}

json to_json(const OneForm& w) { return {{"dx", to_json(w.a)}, {"dy", to_json(w.b)}}; }

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

json to_json(const lefschetz::Cycle& c) {
  json out = json::array();
  for (const auto& n : c) out.push_back(to_json(n));
  return out;
}

json to_json(const arrangement::Point& p) { return json::array({to_json(p.x), to_json(p.y)}); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational as a string or an integer, got " + j.dump());
}

BivariatePoly poly_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return BivariatePoly(rational_from_json(j));
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw InputError("polynomial must be an object with a \"terms\" array");
  BivariatePoly p;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("c")) throw InputError("polynomial term needs \"c\"");
    const int x = t.value("x", 0);
    const int y = t.value("y", 0);
    if (x < 0 || y < 0) throw InputError("negative exponent in polynomial term");
    p.add_term({x, y}, rational_from_json(t.at("c")));
  }
  return p;
}

OneForm form_from_json(const json& j) {
  if (!j.is_object()) throw InputError("1-form must be an object with \"dx\" and \"dy\"");
  OneForm w;
  if (j.contains("dx")) w.a = poly_from_json(j.at("dx"));
  if (j.contains("dy")) w.b = poly_from_json(j.at("dy"));
  return w;
}

arrangement::Arrangement arrangement_from_json(const json& j) {
  if (j.contains("canonical_d")) {
    if (!j.at("canonical_d").is_number_integer()) throw InputError("canonical_d must be an integer");
    return arrangement::canonical_arrangement(j.at("canonical_d").get<int>());
  }
  if (!j.contains("arrangement")) throw InputError("input needs \"canonical_d\" or \"arrangement\"");
  const json& a = j.at("arrangement");
  if (!a.is_object() || !a.contains("lines") || !a.at("lines").is_array())
    throw InputError("arrangement must be an object with a \"lines\" array");
  std::vector<std::array<Rational, 3>> coefficients;
  for (const auto& line : a.at("lines")) {
    if (!line.is_array() || line.size() != 3) throw InputError("each line is [a, b, c] for a*x + b*y + c");
    coefficients.push_back({rational_from_json(line[0]), rational_from_json(line[1]), rational_from_json(line[2])});
  }
  return arrangement::make_arrangement(coefficients);
}

}  // namespace pencillab::io
