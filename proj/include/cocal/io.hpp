#ifndef COCAL_IO_HPP
#define COCAL_IO_HPP

// JSON records for forms, matrices, Lie algebras and certificates. Scalars
// are always strings in the "p/q" / "p/q+r/s*i" encoding.

#include <cocal/certificate.hpp>
#include <cocal/exterior.hpp>
#include <cocal/liealg.hpp>
#include <cocal/matrix.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cocal {

using json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

inline std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw FormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline Scalar scalar_from(const json& v) {
  if (!v.is_string()) throw FormatError("scalars must be strings");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError("bad scalar '" + v.get<std::string>() + "': " + e.what());
  }
}

inline Field field_from(const json& j) {
  std::string f = require_string(j, "field");
  if (f == "rational") return Field::rational;
  if (f == "gaussian_rational") return Field::gaussian_rational;
  throw FormatError("unknown field '" + f + "'");
}

inline void check_in_field(const Scalar& s, Field f) {
  if (f == Field::rational && !s.is_real()) throw FormatError("non-real scalar " + s.str() + " in a rational record");
}

}  // namespace detail

inline json to_json(const Multivector& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.sorted_terms()) terms.push_back({{"indices", indices_of(m)}, {"coeff", c.str()}});
  return {{"dim", x.dim()}, {"grade", x.grade()}, {"variance", to_string(x.variance())}, {"terms", terms}};
}

inline Multivector form_from_json(const json& j) {
  const int dim = detail::require_int(j, "dim");
  const int grade = detail::require_int(j, "grade");
  if (dim < 0 || dim > 31 || grade < 0 || grade > dim) throw FormatError("dim/grade out of range");
  std::string var = detail::require_string(j, "variance");
  if (var != "form" && var != "vector") throw FormatError("variance must be 'form' or 'vector'");
  Multivector x(dim, grade, var == "form" ? Variance::form : Variance::vector);
  const json& terms = detail::require(j, "terms");
  if (!terms.is_array()) throw FormatError("terms must be a list");
  for (const auto& t : terms) {
    const json& idx = detail::require(t, "indices");
    if (!idx.is_array() || static_cast<int>(idx.size()) != grade) throw FormatError("term has the wrong number of indices");
    std::vector<int> ind;
    for (const auto& i : idx) {
      if (!i.is_number_integer()) throw FormatError("indices must be integers");
      int v = i.get<int>();
      if (v < 1 || v > dim) throw FormatError("index out of range");
      if (!ind.empty() && v <= ind.back()) throw FormatError("indices must be strictly ascending");
      ind.push_back(v);
    }
    x.add(mask_of(ind), detail::scalar_from(detail::require(t, "coeff")));
  }
  return x;
}

struct MatrixRecord {
  Field field = Field::rational;
  Matrix m;

  friend bool operator==(const MatrixRecord&, const MatrixRecord&) = default;
};

inline json matrix_entries(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).str());
    rows.push_back(r);
  }
  return rows;
}

inline Matrix matrix_from_entries(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw FormatError("rows must be a nonempty list");
  std::size_t cols = 0;
  std::vector<Vector> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw FormatError("each row must be a list");
    if (out.empty()) cols = r.size();
    if (r.size() != cols || cols == 0) throw FormatError("ragged matrix");
    Vector v;
    for (const auto& s : r) v.push_back(detail::scalar_from(s));
    out.push_back(v);
  }
  return Matrix::from_rows(out);
}

inline json to_json(const MatrixRecord& r) { return {{"field", to_string(r.field)}, {"rows", matrix_entries(r.m)}}; }

inline MatrixRecord matrix_from_json(const json& j) {
  MatrixRecord r;
  r.field = detail::field_from(j);
  r.m = matrix_from_entries(detail::require(j, "rows"));
  if (!r.m.is_square()) throw FormatError("matrix must be square");
  for (std::size_t i = 0; i < r.m.rows(); ++i)
    for (std::size_t k = 0; k < r.m.cols(); ++k) detail::check_in_field(r.m(i, k), r.field);
  return r;
}

inline json to_json(const LieAlgebra& g) {
  const int n = g.dim();
  json basis = json::array();
  for (int i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
  json brackets = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector& b = g.bracket_basis(i, j);
      json coeffs = json::array();
      for (int k = 0; k < n; ++k)
        if (!b[static_cast<std::size_t>(k)].is_zero()) coeffs.push_back({basis[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)].str()});
      if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  return {{"field", to_string(g.field())}, {"dim", n}, {"basis", basis}, {"brackets", brackets}};
}

inline LieAlgebra lie_from_json(const json& j) {
  const Field field = detail::field_from(j);
  const int n = detail::require_int(j, "dim");
  if (n < 1 || n > 31) throw FormatError("dim out of range");
  const json& basis = detail::require(j, "basis");
  if (!basis.is_array() || static_cast<int>(basis.size()) != n) throw FormatError("basis must list dim names");
  std::map<std::string, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!basis[k].is_string()) throw FormatError("basis names must be strings");
    if (!index.emplace(basis[k].get<std::string>(), static_cast<int>(k)).second) throw FormatError("duplicate basis name");
  }
  LieAlgebra g(n, field);
  std::set<std::pair<int, int>> seen;
  const json& brackets = detail::require(j, "brackets");
  if (!brackets.is_array()) throw FormatError("brackets must be a list");
  for (const auto& b : brackets) {
    const int i = detail::require_int(b, "i"), k = detail::require_int(b, "j");
    if (i < 1 || k > n || i >= k) throw FormatError("bracket indices must satisfy 1 <= i < j <= dim");
    if (!seen.emplace(i, k).second) throw FormatError("bracket listed twice");
    Vector v(static_cast<std::size_t>(n));
    const json& coeffs = detail::require(b, "coeffs");
    if (!coeffs.is_array()) throw FormatError("coeffs must be a list");
    for (const auto& c : coeffs) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string()) throw FormatError("coeff entries are [name, scalar]");
      auto it = index.find(c[0].get<std::string>());
      if (it == index.end()) throw FormatError("unknown basis name '" + c[0].get<std::string>() + "'");
      Scalar s = detail::scalar_from(c[1]);
      detail::check_in_field(s, field);
      v[static_cast<std::size_t>(it->second)] += s;
    }
    g.set_bracket(i - 1, k - 1, v);
  }
  return g;
}

inline json to_json(const Certificate& c) {
  return {{"kind", to_string(c.kind)},
          {"path", c.path},
          {"psi", to_json(c.psi)},
          {"omega_part", to_json(c.omega_part)},
          {"cross", to_json(c.cross)},
          {"exhibited_basis", {{"scalar_system", c.scalar_system}, {"entries", matrix_entries(c.exhibited_basis)}}},
          {"epsilon", c.epsilon},
          {"scale", c.scale.str()},
          {"witness_scale", c.witness_scale.str()},
          {"checks", c.checks}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  try {
    c.kind = parse_kind(detail::require_string(j, "kind"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  c.path = j.contains("path") ? detail::require_string(j, "path") : "";
  c.psi = form_from_json(detail::require(j, "psi"));
  if (c.psi.dim() != 7 || c.psi.grade() != 4) throw FormatError("psi must be a four-form on a 7-space");
  c.omega_part = j.contains("omega_part") ? form_from_json(j.at("omega_part")) : Multivector(6, 4, Variance::form);
  c.cross = j.contains("cross") ? form_from_json(j.at("cross")) : Multivector(6, 3, Variance::form);
  const json& eb = detail::require(j, "exhibited_basis");
  c.scalar_system = detail::require_string(eb, "scalar_system");
  if (c.scalar_system != "rational" && c.scalar_system != "gaussian_rational")
    throw FormatError("unsupported scalar system '" + c.scalar_system + "'");
  c.exhibited_basis = matrix_from_entries(detail::require(eb, "entries"));
  c.epsilon = detail::require_int(j, "epsilon");
  if (c.epsilon != 1 && c.epsilon != -1) throw FormatError("epsilon must be 1 or -1");
  c.scale = detail::scalar_from(detail::require(j, "scale"));
  if (j.contains("witness_scale")) c.witness_scale = detail::scalar_from(j.at("witness_scale"));
  const json& checks = detail::require(j, "checks");
  if (!checks.is_array()) throw FormatError("checks must be a list");
  for (const auto& s : checks) {
    if (!s.is_string()) throw FormatError("checks must be strings");
    c.checks.push_back(s.get<std::string>());
  }
  return c;
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace cocal

#endif  // COCAL_IO_HPP
