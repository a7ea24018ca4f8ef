#include "wreathcert/approx_io.hpp"

#include <map>

#include "wreathcert/errors.hpp"

namespace wreathcert {

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(double d) { return d; }

Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Permutation& p) { return Json(std::vector<std::uint32_t>(p.images().begin(), p.images().end())); }

Json to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational \"p/q\", got " + j.dump());
}

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected a complex number [re, im], got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an image array, got " + j.dump());
  std::vector<std::uint32_t> img;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("permutation images must be non-negative integers");
    img.push_back(v.get<std::uint32_t>());
  }
  try {
    return Permutation(std::move(img));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

FpMatrix fp_matrix_from_json(const PrimeField& f, const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols != j.size()) throw ParseError("matrix is not square");
  FpMatrix m(j.size(), cols, 0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number_integer()) throw ParseError("matrix entries must be integers");
      m(i, c) = f.from_int(j[i][c].get<std::int64_t>());
    }
  }
  return m;
}

Json sofic_map_to_json(const SoficMap& sigma, const std::vector<Elem>& domain) {
  Json images = Json::object();
  for (Elem g : domain) images[sigma.domain()->name(g)] = to_json(sigma(g));
  return Json{{"degree", sigma.target().degree()}, {"images", std::move(images)}};
}

SoficMap sofic_map_from_json(const GroupPtr& domain, const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("images"))
    throw ParseError("sofic map needs \"degree\" and \"images\"");
  const auto degree = j.at("degree").get<std::size_t>();
  std::map<Elem, Permutation> table;
  for (const auto& [name, img] : j.at("images").items()) {
    auto p = permutation_from_json(img);
    if (p.degree() != degree) throw ParseError("image of " + name + " has the wrong degree");
    table.emplace(domain->parse(name), std::move(p));
  }
  return SoficMap::from_table(domain, SymGroup(degree), std::move(table));
}

}  // namespace wreathcert
