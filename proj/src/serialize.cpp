#include "strongconv/serialize.hpp"

#include "strongconv/errors.hpp"

#include <fstream>
#include <sstream>

namespace strongconv {

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rrow = Json::array();
    Json irow = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  Json out;
  if (m.rows() == m.cols()) out["dim"] = m.rows();
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

namespace {

std::vector<std::vector<double>> read_grid(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("matrix JSON is missing \"") + key + "\"");
  const Json& grid = j.at(key);
  if (!grid.is_array() || grid.empty()) throw ParseError(std::string("\"") + key + "\" must be a non-empty array");
  std::vector<std::vector<double>> rows;
  for (const auto& row : grid) {
    if (!row.is_array()) throw ParseError(std::string("\"") + key + "\" rows must be arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError(std::string("\"") + key + "\" entries must be numbers");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size() || r.empty()) throw ParseError(std::string("\"") + key + "\" is ragged");
  }
  return rows;
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  const auto re = read_grid(j, "re");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = read_grid(j, "im");
    if (im.size() != re.size() || im.front().size() != re.front().size()) {
      throw ParseError("\"re\" and \"im\" differ in shape");
    }
  }
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = static_cast<Eigen::Index>(re.front().size());
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer()) throw ParseError("\"dim\" must be an integer");
    const auto d = j.at("dim").get<Eigen::Index>();
    if (d != rows || d != cols) throw ParseError("\"dim\" disagrees with the matrix shape");
  }
  Matrix m(rows, cols);
  for (Eigen::Index a = 0; a < rows; ++a) {
    for (Eigen::Index b = 0; b < cols; ++b) {
      const double i = im.empty() ? 0.0 : im[a][b];
      m(a, b) = cplx(re[a][b], i);
    }
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho) {
  return matrix_to_json(rho.matrix());
}

DensityMatrix state_from_json(const Json& j) {
  const Matrix m = matrix_from_json(j);
  if (m.rows() != m.cols()) throw ParseError("state matrix must be square");
  return DensityMatrix(m);
}

Json channel_to_json(const QuantumChannel& channel) {
  Json out;
  out["dim_in"] = channel.dim_in();
  out["dim_out"] = channel.dim_out();
  Json kraus = Json::array();
  for (const auto& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  out["kraus"] = std::move(kraus);
  return out;
}

QuantumChannel channel_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("channel JSON must be an object");
  for (const char* key : {"dim_in", "dim_out", "kraus"}) {
    if (!j.contains(key)) throw ParseError(std::string("channel JSON is missing \"") + key + "\"");
  }
  if (!j.at("dim_in").is_number_integer() || !j.at("dim_out").is_number_integer()) {
    throw ParseError("channel dimensions must be integers");
  }
  if (!j.at("kraus").is_array()) throw ParseError("\"kraus\" must be an array");
  std::vector<Matrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  return QuantumChannel(j.at("dim_in").get<int>(), j.at("dim_out").get<int>(), std::move(kraus));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace strongconv
