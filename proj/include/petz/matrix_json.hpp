#pragma once

// Matrix interchange format used by the CLI:
//   {"dim": n, "re": [[...], ...], "im": [[...], ...]}
// Row-major n x n arrays of real and imaginary parts. "im" may be omitted for
// real matrices.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "petz/linalg.hpp"

namespace petz {

class MatrixFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ComplexMatrix matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Reads and parses a matrix file; errors name the file and the reason.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace petz
