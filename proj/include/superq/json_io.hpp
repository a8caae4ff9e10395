#pragma once

#include <json.hpp>

#include "superq/centralizer.hpp"
#include "superq/qdouble.hpp"
#include "superq/rmatrix.hpp"

namespace superq {

using nlohmann::json;

inline constexpr const char* kArtifactVersion = "superq 1.0.0";

// scalar: {"d": int, "coeffs": ["p/q", ...]}, lowest degree first
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// element: {"algebra": "ubar|bplus|bminus|x", "d": int,
//           "terms": [{"m": [exponents...], "c": scalar}]}
json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const json& j);

// tensor element: {"arity": k, "algebra": ..., "d": ...,
//                  "terms": [{"m": [[...],[...]], "c": scalar}]}
json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const json& j);

// matrix: {"dim": int, "entries": [{"row": int, "col": int, "c": scalar}]}
json matrix_to_json(const SparseMat& m);
SparseMat matrix_from_json(const json& j);
std::string matrix_to_csv(const SparseMat& m);

// R-matrix export: tensor plus {"d", "form", "terms"} metadata
json rmatrix_to_json(const RMatrix& r, const std::string& form);

// centralizer basis: {"n", "d", "mu", "words": [[indices...]], "dim"}
json basis_to_json(const CentralizerBasis& b, int d, long mu);

// report: {"suite", "params", "pass", "checks": [...], "first_failure"}
json report_to_json(const Report& r);

} // namespace superq
