// JSON encodings shared by the command-line front end and its tests.
// Rationals are strings ("3", "-1/2"); a polynomial is
// {"terms":[{"c":"1/2","x":2,"y":0},...]} and a 1-form is {"dx":...,"dy":...}.
#ifndef PENCILLAB_TOOLS_JSON_IO_HPP
#define PENCILLAB_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "pencillab/arrangement.hpp"
#include "pencillab/forms.hpp"
#include "pencillab/lefschetz.hpp"
#include "pencillab/univariate.hpp"

namespace pencillab::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Integer& n);
json to_json(const BivariatePoly& p);
json to_json(const OneForm& w);
json to_json(const RationalVector& v);
json to_json(const lefschetz::Cycle& c);
json to_json(const arrangement::Point& p);

/// Accepts a string "p/q" or an integer. Throws InputError otherwise.
Rational rational_from_json(const json& j);
BivariatePoly poly_from_json(const json& j);
OneForm form_from_json(const json& j);

/// {"canonical_d": d} or {"arrangement": {"lines": [[a, b, c], ...]}}.
arrangement::Arrangement arrangement_from_json(const json& j);

}  // namespace pencillab::io

#endif  // PENCILLAB_TOOLS_JSON_IO_HPP
