#include "gmm/io.hpp"

#include "gmm/errors.hpp"
#include "gmm/map_format.hpp"
#include "gmm/resultant.hpp"

namespace gmm::io {

Json to_json(const Integer& x) {
  if (fits_int64(x)) return x.convert_to<std::int64_t>();
  return x.str();
}

Json to_json(const Rational& x) {
  if (is_integer(x)) return to_json(Integer(numerator(x)));
  return to_string(x);
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ReductionReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["prime"] = to_json(r.prime.value());
    row["input_valuation"] = r.input_valuation;
    row["best_valuation"] = r.best_valuation;
    row["good_reduction"] = r.good_reduction;
    row["radius_exhausted"] = r.radius_exhausted;
    rows.push_back(std::move(row));
  }
  Json out;
  out["radius"] = report.radius;
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const Model& model, const std::vector<std::string>& coords) {
  Json out = Json::parse(render_map(model.lift(), coords));
  out["resultant"] = to_json(resultant(model.lift()));
  out["conjugator"] = to_json(model.conjugator());
  out["scalar"] = to_json(model.scalar());
  return out;
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>())
                                      : Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError("expected an integer or a rational string, got " + value.dump());
}

RationalMatrix matrix_from_json(const Json& value) {
  if (!value.is_array() || value.empty() || !value[0].is_array())
    throw ParseError("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(value.size());
  const auto cols = static_cast<Eigen::Index>(value[0].size());
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = value[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix rows must have equal length");
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = rational_from_json(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

AdeleMatrix read_adele_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed adele file: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n"))
      throw ParseError("adele file needs \"n\"");
    const int n = doc.at("n").get<int>();
    if (n < 1) throw ParseError("n must be positive");
    RationalMatrix fallback = doc.contains("default") ? matrix_from_json(doc.at("default"))
                                                      : RationalMatrix::Identity(n, n);
    LocalData support;
    if (doc.contains("components")) {
      for (const auto& entry : doc.at("components")) {
        const Rational p = rational_from_json(entry.at("prime"));
        if (!is_integer(p)) throw ParseError("prime must be an integer");
        Prime prime{Integer(numerator(p))};
        if (!support.emplace(prime, matrix_from_json(entry.at("matrix"))).second)
          throw ParseError("prime " + prime.str() + " listed twice");
      }
    }
    if (fallback.rows() != n) throw ParseError("default matrix has the wrong size");
    return AdeleMatrix(std::move(fallback), std::move(support));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed adele file: ") + e.what());
  }
}

}  // namespace gmm::io
