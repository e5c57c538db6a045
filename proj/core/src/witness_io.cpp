#include "orthodeg/witness_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace orthodeg::numeric {

using nlohmann::json;

namespace {
json complex_pair(Complex c) { return json::array({c.real(), c.imag()}); }

Complex parse_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("witness json: expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}
}  // namespace

std::string witness_to_json(const WitnessSet& ws, int indent) {
  json coeffs = json::array();
  for (const Complex& c : ws.slice.coefficients()) coeffs.push_back(complex_pair(c));
  json points = json::array();
  for (const auto& p : ws.points) {
    json row = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) row.push_back(complex_pair(p[i]));
    points.push_back(std::move(row));
  }
  json doc;
  doc["n"] = ws.n;
  doc["slice"] = {{"seed", ws.slice.seed}, {"coefficients", std::move(coeffs)}};
  doc["points"] = std::move(points);
  doc["tolerance"] = ws.tolerance;
  return doc.dump(indent);
}

WitnessSet witness_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    WitnessSet ws;
    ws.n = doc.at("n").get<int>();
    std::vector<Complex> coeffs;
    for (const auto& c : doc.at("slice").at("coefficients")) coeffs.push_back(parse_pair(c));
    ws.slice = Slice::from_coefficients(ws.n, doc.at("slice").at("seed").get<std::uint64_t>(), coeffs);
    const auto dim = static_cast<Eigen::Index>(ws.n * ws.n);
    for (const auto& row : doc.at("points")) {
      if (static_cast<Eigen::Index>(row.size()) != dim) throw std::invalid_argument("witness json: point has wrong length");
      CVector p(dim);
      for (Eigen::Index i = 0; i < dim; ++i) p[i] = parse_pair(row[static_cast<std::size_t>(i)]);
      ws.points.push_back(std::move(p));
    }
    ws.tolerance = doc.at("tolerance").get<double>();
    return ws;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("witness json: ") + e.what());
  }
}

}  // namespace orthodeg::numeric
