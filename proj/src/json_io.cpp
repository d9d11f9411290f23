#include "octadet/json_io.hpp"

#include <limits>

namespace octadet {

namespace {

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw parse_error("element: bad integer string '" +
                        j.get<std::string>() + "'");
    }
  }
  throw parse_error("element: expected an integer or decimal string, got " +
                    j.dump());
}

}  // namespace

json element_to_json(const Element& e) {
  if (e.ring().kind() == Ring::Kind::Poly) {
    json arr = json::array();
    for (const auto& c : e.as_poly()) arr.push_back(element_to_json(c));
    return arr;
  }
  return int_to_json(e.as_int());
}

Element element_from_json(const RingPtr& ring, const json& j) {
  if (ring->kind() == Ring::Kind::Poly) {
    if (!j.is_array())
      throw parse_error("element: polynomial payload must be an array, got " +
                        j.dump());
    std::vector<Element> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(element_from_json(ring->inner(), c));
    return ring->make_poly(std::move(coeffs));
  }
  return ring->from_Int(int_from_json(j));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"ring", m.ring()->spec()},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, RingPtr ring_override) {
  // A bare array of rows is accepted when the ring comes from elsewhere.
  if (j.is_array())
    return matrix_from_json(json{{"entries", j}}, std::move(ring_override));
  if (!j.is_object()) throw parse_error("matrix: expected a JSON object");
  RingPtr ring = std::move(ring_override);
  if (j.contains("ring")) {
    RingPtr file_ring = Ring::parse(j.at("ring").get<std::string>());
    if (ring && !ring->same(*file_ring))
      throw parse_error("matrix: ring '" + file_ring->spec() +
                        "' conflicts with requested ring '" + ring->spec() +
                        "'");
    ring = file_ring;
  }
  if (!ring) throw parse_error("matrix: no ring given in file or flags");
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw parse_error("matrix: missing 'entries' array");
  const json& entries = j.at("entries");
  int rows = j.value("rows", int(entries.size()));
  if (rows != int(entries.size()))
    throw parse_error("matrix: 'rows' disagrees with entry row count");
  int cols = 0;
  if (rows > 0) {
    if (!entries[0].is_array())
      throw parse_error("matrix: entries must be an array of rows");
    cols = int(entries[0].size());
  }
  cols = j.value("cols", cols);
  Matrix m(ring, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = entries[r];
    if (!row.is_array() || int(row.size()) != cols)
      throw parse_error("matrix: row " + std::to_string(r + 1) +
                        " has the wrong length");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = element_from_json(ring, row[c]);
  }
  return m;
}

json coeffs_to_json(const CharPolyCoeffs& c) {
  json arr = json::array();
  for (const auto& e : c.coeffs) arr.push_back(element_to_json(e));
  return json{{"ring", c.ring->spec()},
              {"degree", c.degree()},
              {"coeffs", std::move(arr)}};
}

CharPolyCoeffs coeffs_from_json(const json& j, RingPtr ring_override) {
  RingPtr ring = std::move(ring_override);
  if (j.contains("ring")) {
    RingPtr file_ring = Ring::parse(j.at("ring").get<std::string>());
    if (ring && !ring->same(*file_ring))
      throw parse_error("coeffs: ring conflict");
    ring = file_ring;
  }
  if (!ring) throw parse_error("coeffs: no ring given");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw parse_error("coeffs: missing 'coeffs' array");
  std::vector<Element> coeffs;
  for (const auto& e : j.at("coeffs"))
    coeffs.push_back(element_from_json(ring, e));
  if (coeffs.empty()) throw parse_error("coeffs: empty coefficient vector");
  return CharPolyCoeffs{ring, std::move(coeffs)};
}

json subset_to_json(const Subset& s) {
  return json{{"n", s.ambient}, {"members", s.members}};
}

Subset subset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("members"))
    throw parse_error("subset: expected {\"n\": ..., \"members\": [...]}");
  return Subset(j.at("n").get<int>(), j.at("members").get<std::vector<int>>());
}

json permutation_to_json(const Permutation& p) {
  return json{{"image", p.image}};
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("image"))
    throw parse_error("permutation: expected {\"image\": [...]}");
  return perm_from_image(j.at("image").get<std::vector<int>>());
}

}  // namespace octadet
