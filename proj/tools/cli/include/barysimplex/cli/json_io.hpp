#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "barysimplex/matrix.hpp"
#include "barysimplex/rational.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "barysimplex/1";

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Json to_json(const Matrix& m);
// 0-based indices in, 1-based out.
Json one_based(const std::vector<std::size_t>& indices);

// Reads a JSON array of fraction strings (integers are also accepted). Floats
// are rejected since they cannot carry exact fractions. Errors name the field
// and the offending element.
Vector parse_fraction_array(const Json& value, std::string_view field);
Matrix parse_fraction_matrix(const Json& value, std::string_view field);

}  // namespace barysimplex::cli
