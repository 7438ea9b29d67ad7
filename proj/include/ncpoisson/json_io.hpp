#pragma once

#include <json.hpp>

#include <string>

#include "ncpoisson/elliptic.hpp"

namespace ncp {

using Json = nlohmann::json;

/// Floats serialize as [re, im] pairs throughout to avoid locale issues.
Json to_json(Complex c);
Complex complex_from_json(const Json& j);

/// Parses `RE+IMi` / `RE-IMi` / `RE` / `IMi` literals, e.g. "0.3+1.1i".
Complex parse_complex(const std::string& text);

Json to_json(const EllipticParams& p);
EllipticParams params_from_json(const Json& j);

Json to_json(const CoeffMatrix& c);
CoeffMatrix coeff_matrix_from_json(const Json& j);

/// Sparse triplet list [{i, j, a, b, coeff}].
Json to_json(const RTensor& r);
RTensor r_tensor_from_json(const Json& j);

/// [{i, j, left_word, right_word, coeff}] with words in the text format.
Json to_json(const AffineBracket& b);
AffineBracket affine_from_json(const Json& j);

Json to_json(const Jac2Certificate& cert);

}  // namespace ncp
