#include "barysimplex/cli/json_io.hpp"

#include <string>

#include "barysimplex/error.hpp"

namespace barysimplex::cli {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json one_based(const std::vector<std::size_t>& indices) {
  Json a = Json::array();
  for (auto i : indices) a.push_back(i + 1);
  return a;
}

Vector parse_fraction_array(const Json& value, std::string_view field) {
  const std::string name(field);
  if (!value.is_array()) throw Error(ErrorCode::ParseError, name + ": expected an array of fractions");
  Vector out;
  out.reserve(value.size());
  for (std::size_t k = 0; k < value.size(); ++k) {
    const Json& item = value[k];
    const std::string where = name + "[" + std::to_string(k + 1) + "]";
    if (item.is_string()) {
      try {
        out.push_back(Rational::parse(item.get<std::string>()));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, where + ": " + e.detail());
      }
    } else if (item.is_number_integer()) {
      out.emplace_back(item.get<long>());
    } else if (item.is_number_float()) {
      throw Error(ErrorCode::ParseError, where + ": floating-point number " + item.dump() +
                                             " is not exact; write it as a fraction string");
    } else {
      throw Error(ErrorCode::ParseError, where + ": expected a fraction string");
    }
  }
  return out;
}

Matrix parse_fraction_matrix(const Json& value, std::string_view field) {
  const std::string name(field);
  if (!value.is_array()) throw Error(ErrorCode::ParseError, name + ": expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < value.size(); ++i) {
    rows.push_back(parse_fraction_array(value[i], name + "[" + std::to_string(i + 1) + "]"));
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, name + ": " + e.detail());
  }
}

}  // namespace barysimplex::cli
