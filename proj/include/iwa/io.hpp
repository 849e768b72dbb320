#pragma once

#include <string>

#include "iwa/form.hpp"
#include "iwa/poly.hpp"

#include <json.hpp>

namespace iwa {

using Json = nlohmann::ordered_json;

// Accepts "0", a JSON object {"t11": "1/2+1/3i", ...}, or a comma list
// "t11=1/2,t22=-1/4i"; missing coordinates are zero.
ParamPoint parse_param_point(const std::string& text);
Json param_point_json(const ParamPoint& t);

std::string scalar_str(const GScalar& z);

// Form expressions in the rendering grammar: wedge monomials like
// "al^ga^al~", optional Gaussian-rational coefficients, joined by +/-.
FormQ parse_form_expr(const std::string& text);
Json form_json(const FormQ& u);

}  // namespace iwa
