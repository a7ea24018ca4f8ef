#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "wreathcert/field_matrix.hpp"
#include "wreathcert/permutation.hpp"
#include "wreathcert/rational.hpp"
#include "wreathcert/sofic_approx.hpp"

namespace wreathcert {

using Json = nlohmann::ordered_json;

/// Rationals as "p/q" strings (integers as "p"); doubles as JSON numbers, which the
/// serializer writes with round-trip precision; complex numbers as [re, im].
Json to_json(const Rational& r);
Json to_json(double d);
Json to_json(const std::complex<double>& z);
Json to_json(const Permutation& p);
Json to_json(const FpMatrix& m);  // list of rows

/// Accepts "p/q" strings and JSON integers. Throws ParseError otherwise.
Rational rational_from_json(const Json& j);
std::complex<double> complex_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
FpMatrix fp_matrix_from_json(const PrimeField& f, const Json& j);

/// A finite sofic map as {"degree": n, "images": {name: [image array]}}.
Json sofic_map_to_json(const SoficMap& sigma, const std::vector<Elem>& domain);
SoficMap sofic_map_from_json(const GroupPtr& domain, const Json& j);

}  // namespace wreathcert
