#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "unigate/tensor.hpp"

namespace unigate {

// Matrix file format:
//   {"rows":R,"cols":C,"dims":[dA,dB],"data":[[re,im],...]}
// with data row-major of length R*C. "dims" is optional.

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError on malformed input, including NaN/Inf entries.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

/// Reads a whole file; throws std::ios_base::failure when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace unigate
