#pragma once

#include <string>

#include <ehrkit/analysis.hpp>
#include <ehrkit/hstar.hpp>
#include <ehrkit/polytope.hpp>

namespace ehrkit::cli {

// Accepts {"vertices": [[...], ...]} with integer or "p/q" string entries;
// an optional "dim" key fixes the ambient dimension (required information
// when the vertex list is empty). Validation errors (ragged rows, redundant
// vertices, bad fractions) surface as ehrkit::Error.
Polytope parse_polytope(const std::string& json_text);

std::string polytope_to_json(const Polytope& p);

std::string hstar_to_json(const HStarResult& r);
std::string hstar_to_text(const HStarResult& r);

std::string series_to_json(const RatVec& coeffs);
std::string series_to_text(const RatVec& coeffs);

std::string poly_to_json(const Poly& p);

std::string matrix_to_json(const SymMatrix& m);
std::string matrix_to_text(const SymMatrix& m);

std::string read_file(const std::string& path);

}  // namespace ehrkit::cli
