#include "petz/matrix_json.hpp"

#include <fstream>
#include <sstream>

namespace petz {
namespace {

void read_part(const nlohmann::json& doc, const char* key, std::size_t n, std::vector<cplx>& out, bool imag) {
  const auto& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != n) {
    throw MatrixFormatError(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " rows");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw MatrixFormatError(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
                              std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw MatrixFormatError(std::string("\"") + key + "\" entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") is not a number");
      }
      const double v = row[j].get<double>();
      if (imag)
        out[i * n + j].imag(v);
      else
        out[i * n + j].real(v);
    }
  }
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw MatrixFormatError("matrix document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    throw MatrixFormatError("\"dim\" must be a positive integer");
  }
  if (!doc.contains("re")) throw MatrixFormatError("missing \"re\"");
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());
  std::vector<cplx> entries(n * n);
  read_part(doc, "re", n, entries, false);
  if (doc.contains("im")) read_part(doc, "im", n, entries, true);
  try {
    return ComplexMatrix(n, std::move(entries));
  } catch (const ValidationError& e) {
    throw MatrixFormatError(e.what());
  }
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json rr = nlohmann::json::array(), ir = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return {{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MatrixFormatError(path.string() + ": cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MatrixFormatError(path.string() + ": parse error: " + e.what());
  }
  try {
    return matrix_from_json(doc);
  } catch (const MatrixFormatError& e) {
    throw MatrixFormatError(path.string() + ": " + e.what());
  }
}

}  // namespace petz
