#include "numrad/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace numrad {

Json matrix_to_json(const CMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      row.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = static_cast<int>(a.rows());
  out["entries"] = std::move(rows);
  return out;
}

namespace {

Complex entry_from_json(const nlohmann::json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw ParseError("matrix entry must be a [re, im] number pair");
  }
  return Complex(e[0].get<double>(), e[1].get<double>());
}

}  // namespace

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw ParseError("matrix JSON must be an object with \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kDimCap) {
    throw ParseError("matrix dimension " + std::to_string(n) +
                     " outside [1, " + std::to_string(kDimCap) + "]");
  }
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw ParseError("\"entries\" must be an array of " + std::to_string(n) + " rows");
  }
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (int jj = 0; jj < n; ++jj) a(i, jj) = entry_from_json(row[jj]);
  }
  validate_matrix(a);
  return a;
}

Json vector_to_json(const CVector& v) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    entries.push_back(Json::array({v(i).real(), v(i).imag()}));
  }
  Json out;
  out["n"] = static_cast<int>(v.size());
  out["entries"] = std::move(entries);
  return out;
}

CVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw ParseError("vector JSON must be an object with \"n\" and \"entries\"");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kDimCap) throw ParseError("bad vector dimension");
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw ParseError("\"entries\" must be an array of " + std::to_string(n) +
                     " pairs");
  }
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = entry_from_json(entries[i]);
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) {
      throw ParseError("vector entry " + std::to_string(i) + " is not finite");
    }
  }
  return v;
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.12g", x);
  return buf;
}

std::string boundary_csv(const std::vector<BoundaryPoint>& points) {
  std::string out = "theta,re,im\n";
  char buf[128];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.theta, p.z.real(),
                  p.z.imag());
    out += buf;
  }
  return out;
}

Json expansion_to_json(const BinomialExpansion& e, double residual_norm) {
  Json terms = Json::array();
  for (size_t k = 0; k < e.terms.size(); ++k) {
    Json t;
    t["k"] = static_cast<int>(k);
    t["coefficient"] = e.coefficients[k];
    t["matrix"] = matrix_to_json(e.terms[k]);
    terms.push_back(std::move(t));
  }
  Json out;
  out["n"] = e.n;
  out["terms"] = std::move(terms);
  out["sum"] = matrix_to_json(e.sum);
  out["residual_norm"] = residual_norm;
  return out;
}

}  // namespace numrad
