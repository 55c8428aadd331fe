#include "io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ehrkit::cli {

using nlohmann::json;

Polytope parse_polytope(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("polytope: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error("polytope: expected an object with a \"vertices\" array");

  std::vector<RatVec> vertices;
  for (const json& row : doc["vertices"]) {
    if (!row.is_array()) throw Error("polytope: vertex rows must be arrays");
    RatVec v;
    for (const json& entry : row) {
      if (entry.is_number_integer())
        v.push_back(Rat(entry.get<long>()));
      else if (entry.is_string())
        v.push_back(parse_rat(entry.get<std::string>()));
      else
        throw Error("polytope: coordinates must be integers or \"p/q\" strings");
    }
    vertices.push_back(std::move(v));
  }
  std::size_t dim = vertices.empty() ? 0 : vertices.front().size();
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) throw Error("polytope: bad \"dim\"");
    dim = doc["dim"].get<std::size_t>();
  }
  for (const RatVec& v : vertices)
    if (v.size() != dim) throw Error("polytope: ragged vertex rows");
  return Polytope(dim, std::move(vertices));
}

std::string polytope_to_json(const Polytope& p) {
  json rows = json::array();
  for (const RatVec& v : p.vertices()) {
    json row = json::array();
    for (const Rat& x : v) row.push_back(x.get_str());
    rows.push_back(std::move(row));
  }
  json doc;
  doc["vertices"] = std::move(rows);
  doc["dim"] = p.ambient_dim();
  return doc.dump();
}

namespace {

json rat_list(const RatVec& coeffs) {
  json out = json::array();
  for (const Rat& c : coeffs) out.push_back(c.get_str());
  return out;
}

}  // namespace

std::string hstar_to_json(const HStarResult& r) {
  json doc;
  doc["numerator"] = rat_list(r.numerator.coeffs());
  doc["period"] = r.period;
  doc["exponent"] = r.exponent;
  return doc.dump();
}

std::string hstar_to_text(const HStarResult& r) {
  std::ostringstream out;
  out << "h*(t) = " << r.numerator.str() << "\n";
  out << "denominator: (1 - t";
  if (r.period != 1) out << "^" << r.period;
  out << ")^" << r.exponent;
  return out.str();
}

std::string series_to_json(const RatVec& coeffs) {
  json doc;
  doc["coefficients"] = rat_list(coeffs);
  return doc.dump();
}

std::string series_to_text(const RatVec& coeffs) {
  std::ostringstream out;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n) out << "\n";
    out << n << ": " << coeffs[n].get_str();
  }
  return out.str();
}

std::string poly_to_json(const Poly& p) {
  json doc;
  doc["coefficients"] = rat_list(p.coeffs());
  return doc.dump();
}

std::string matrix_to_json(const SymMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

std::string matrix_to_text(const SymMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.n; ++i) {
    if (i) out << "\n";
    out << "[";
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j) out << ", ";
      out << m.at(i, j).get_str();
    }
    out << "]";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ehrkit::cli
