#include "quivergrass/io.hpp"

#include <fstream>
#include <limits>

#include "quivergrass/error.hpp"

namespace quivergrass {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::parse_error, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::size_t as_count(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw Error(ErrorKind::parse_error, what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorKind::parse_error, "not an integer: '" + j.get<std::string>() + "'");
    }
    return z;
  }
  throw Error(ErrorKind::parse_error, "expected an integer, got " + j.dump());
}

Representation representation_from_json(const json& j) {
  try {
    const std::size_t n = as_count(require(j, "vertices"), "vertices");
    std::vector<Arrow> arrows;
    for (const json& a : require(j, "arrows")) {
      if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::parse_error, "arrow must be [src, tgt]");
      const std::size_t s = as_count(a[0], "arrow source");
      const std::size_t t = as_count(a[1], "arrow target");
      if (s < 1 || s > n || t < 1 || t > n) {
        throw Error(ErrorKind::parse_error, "arrow " + a.dump() + " leaves vertices 1.." + std::to_string(n));
      }
      arrows.push_back({s - 1, t - 1});
    }
    std::vector<int> dims;
    for (const json& d : require(j, "dims")) dims.push_back(static_cast<int>(as_count(d, "dims entry")));
    if (dims.size() != n) throw Error(ErrorKind::parse_error, "dims must have one entry per vertex");

    Quiver q(n, std::move(arrows));
    const json& mats_json = require(j, "matrices");
    if (!mats_json.is_array() || mats_json.size() != q.num_arrows()) {
      throw Error(ErrorKind::parse_error, "need exactly one matrix per arrow");
    }
    std::vector<Matrix<Scalar>> mats;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      const json& rows = mats_json[a];
      if (!rows.is_array()) throw Error(ErrorKind::parse_error, "matrix must be a list of rows");
      const std::size_t cols = rows.empty() ? static_cast<std::size_t>(dims[q.arrows()[a].source]) : rows[0].size();
      Matrix<Scalar> m(rows.size(), cols);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != cols) {
          throw Error(ErrorKind::shape_mismatch, "ragged matrix for arrow " + std::to_string(a + 1),
                      static_cast<std::int64_t>(a));
        }
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(integer_from_json(rows[r][c]));
      }
      mats.push_back(std::move(m));
    }
    Representation rep(std::move(q), DimensionVector(std::move(dims)), std::move(mats));
    validate_representation(rep);
    return rep;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

Representation read_representation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
  }
  return representation_from_json(j);
}

json representation_to_json(const Representation& rep) {
  validate_representation(rep);
  if (!(rep.domain() == ScalarDomain::integers())) {
    throw Error(ErrorKind::domain_mismatch, "only integer representations serialize to files");
  }
  json arrows = json::array();
  for (const Arrow& a : rep.quiver().arrows()) arrows.push_back({a.source + 1, a.target + 1});
  json mats = json::array();
  for (const auto& m : rep.matrices()) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c).to_rational().get_num()));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return json{{"vertices", rep.quiver().num_vertices()},
              {"arrows", std::move(arrows)},
              {"dims", rep.dims().entries()},
              {"matrices", std::move(mats)}};
}

json fpolynomial_to_json(const FPolynomial& f) {
  json terms = json::array();
  for (const auto& [exp, c] : f.terms()) terms.push_back({{"exp", exp}, {"coef", integer_to_json(c)}});
  return json{{"vars", f.num_vars()}, {"terms", std::move(terms)}};
}

FPolynomial fpolynomial_from_json(const json& j) {
  try {
    FPolynomial f(as_count(require(j, "vars"), "vars"));
    for (const json& t : require(j, "terms")) {
      auto exp = require(t, "exp").get<Exponent>();
      if (exp.size() != f.num_vars()) throw Error(ErrorKind::parse_error, "exponent length differs from vars");
      f.add_term(exp, integer_from_json(require(t, "coef")));
    }
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

}  // namespace quivergrass
