#include "unigate/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "unigate/errors.hpp"

namespace unigate {

using nlohmann::json;

json matrix_to_json(const Matrix& m) { return matrix_to_json(ComplexMatrix{m, std::nullopt}); }

json matrix_to_json(const ComplexMatrix& m) {
  json j;
  j["rows"] = m.values.rows();
  j["cols"] = m.values.cols();
  if (m.dims) j["dims"] = {m.dims->a, m.dims->b};
  json data = json::array();
  for (Eigen::Index r = 0; r < m.values.rows(); ++r)
    for (Eigen::Index c = 0; c < m.values.cols(); ++c)
      data.push_back({m.values(r, c).real(), m.values(r, c).imag()});
  j["data"] = std::move(data);
  return j;
}

namespace {

std::size_t positive_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("matrix: missing integer field '") + key + "'");
  }
  const auto v = j[key].get<long long>();
  if (v <= 0) throw ParseError(std::string("matrix: '") + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

double finite_number(const json& j) {
  if (!j.is_number()) throw ParseError("matrix: entries must be numbers");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError("matrix: NaN or Inf entry");
  return v;
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  const auto rows = positive_size(j, "rows");
  const auto cols = positive_size(j, "cols");
  if (!j.contains("data") || !j["data"].is_array()) throw ParseError("matrix: missing 'data' array");
  const auto& data = j["data"];
  if (data.size() != rows * cols) {
    throw ParseError("matrix: data has " + std::to_string(data.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  ComplexMatrix out;
  out.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto& e = data[k];
    if (!e.is_array() || e.size() != 2) throw ParseError("matrix: entries must be [re, im] pairs");
    out.values(static_cast<Eigen::Index>(k / cols), static_cast<Eigen::Index>(k % cols)) =
        cplx(finite_number(e[0]), finite_number(e[1]));
  }
  if (j.contains("dims") && !j["dims"].is_null()) {
    const auto& d = j["dims"];
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer() ||
        d[0].get<long long>() <= 0 || d[1].get<long long>() <= 0) {
      throw ParseError("matrix: 'dims' must be two positive integers");
    }
    out.dims = Dims{d[0].get<std::size_t>(), d[1].get<std::size_t>()};
  }
  try {
    out.validate();
  } catch (const DimensionError& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << text;
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  write_text_file(path, matrix_to_json(m).dump(2) + "\n");
}

}  // namespace unigate
