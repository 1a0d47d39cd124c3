#include "hnc/json_io.hpp"

#include <stdexcept>

namespace hnc {

namespace {

mpq_class parse_rational(const json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (!v.is_string()) throw std::invalid_argument("coefficient must be an integer or rational string");
  mpq_class q;
  if (q.set_str(v.get<std::string>(), 10) != 0)
    throw std::invalid_argument("malformed rational '" + v.get<std::string>() + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j.at(key).get<std::int64_t>();
}

}  // namespace

json to_json(const GroupElement& g) { return {{"p", g.p}, {"q", g.q}, {"r", g.r}}; }

GroupElement group_element_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("group element must be an object");
  return {require_int(j, "p"), require_int(j, "q"), require_int(j, "r")};
}

json to_json(const Gaussian& z) { return {{"re", z.re().get_str()}, {"im", z.im().get_str()}}; }

json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back({{"p", g.p}, {"q", g.q}, {"r", g.r}, {"re", c.re().get_str()},
                     {"im", c.im().get_str()}});
  return {{"terms", terms}};
}

AlgebraElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("element must be an object with a 'terms' array");
  AlgebraElement x;
  for (const auto& t : j.at("terms")) {
    GroupElement g = group_element_from_json(t);
    mpq_class re = t.contains("re") ? parse_rational(t.at("re")) : mpq_class(0);
    mpq_class im = t.contains("im") ? parse_rational(t.at("im")) : mpq_class(0);
    x.add_term(g, Gaussian(re, im));
  }
  return x;
}

json to_json(const AlgebraMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.dim(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return {{"matrix", rows}};
}

AlgebraMatrix algebra_matrix_from_json(const json& j) {
  if (j.is_object() && j.contains("terms")) return AlgebraMatrix::scalar(element_from_json(j));
  if (!j.is_object() || !j.contains("matrix") || !j.at("matrix").is_array())
    throw std::invalid_argument("expected an element or {\"matrix\": [...]}");
  const auto& rows = j.at("matrix");
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  AlgebraMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix over the algebra must be square");
    for (int k = 0; k < n; ++k) m(i, k) = element_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back({{"re", m(i, k).real()}, {"im", m(i, k).imag()}});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hnc
