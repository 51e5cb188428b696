#pragma once

#include <json.hpp>

#include <string>

#include "tcla/reducibility.hpp"
#include "tcla/shapovalov.hpp"

namespace tcla {

using Json = nlohmann::json;

/// Integer combination of lattice symbols: "a1+2a2", "2d", "0". Throws
/// WeightError on unknown symbols or malformed text.
RootVector parse_weight(const LieAlgebra& alg, const std::string& text);

/// "h_a1@1" -> the Cartan generator. Throws Error when the name is unknown or
/// the degree is out of range.
CartanGen parse_cartan_gen(const TruncatedAlgebra& alg, const std::string& text);
std::string cartan_gen_name(const TruncatedAlgebra& alg, CartanGen g);

/// {"values": {"h_a1@1": "3/2", ...}}.
Functional parse_lambda(const TruncatedAlgebra& alg, const Json& doc);
Json lambda_to_json(const TruncatedAlgebra& alg, const Functional& lam);

/// Canonical form: a list of {coeff: "p/q", monomial: [[name, degree], ...]}
/// in term order, each generator repeated by its exponent.
Json poly_to_json(const TruncatedAlgebra& alg, const CartanPoly& p);
CartanPoly poly_from_json(const TruncatedAlgebra& alg, const Json& doc);

/// Polynomial expression with +, -, *, ^, parentheses, rationals p/q,
/// generators name@degree, H(root, degree) for h_root at a degree and
/// T(m, degree) for H(m·δ, degree) on rank-one algebras.
CartanPoly parse_expression(const TruncatedAlgebra& alg, const std::string& text);

/// "{(a1,0),(a2,1)}" with optional braces; "a1#1" selects a root-space
/// slot. Throws ParseError on malformed text.
Partition parse_partition(const TruncatedAlgebra& alg, const std::string& text);

Json partition_to_json(const TruncatedAlgebra& alg, const Partition& p);
Partition partition_from_json(const TruncatedAlgebra& alg, const Json& doc);

/// {chi, variant, basis, entries}.
Json matrix_to_json(const TruncatedAlgebra& alg, const FormMatrix& m);
FormMatrix matrix_from_json(const TruncatedAlgebra& alg, const Json& doc);
std::string matrix_to_latex(const TruncatedAlgebra& alg, const FormMatrix& m);
std::string matrix_to_text(const TruncatedAlgebra& alg, const FormMatrix& m);
std::string poly_to_latex(const TruncatedAlgebra& alg, const CartanPoly& p);

/// {reducible, witness: {root, label} | null, window: n | null}.
Json verdict_to_json(const LieAlgebra& alg, const ReducibilityVerdict& v);
ReducibilityVerdict verdict_from_json(const Json& doc);

Json hyperplanes_to_json(const HyperplaneSet& set);

}  // namespace tcla
