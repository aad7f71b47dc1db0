#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polymod/geometry.hpp"
#include "polymod/pentomino.hpp"
#include "polymod/tetromino.hpp"

namespace polymod {

using NamedValue = std::pair<std::string, double>;

// One solved shape, flattened for output. fields follow the solution in
// symbol order; diag holds residuals and consistency gaps.
struct OutputRecord {
  Shape shape;
  double H;
  std::vector<NamedValue> fields;
  std::vector<NamedValue> diag;
};

OutputRecord make_record(const PentominoSolution& sol);
OutputRecord make_record(const TetrominoSolution& sol);

// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

std::string to_json(const OutputRecord& rec);
std::string to_json(const std::vector<OutputRecord>& recs);

// RFC 4180 with diag columns prefixed "diag_".
std::string csv_header(const OutputRecord& rec);
std::string csv_row(const OutputRecord& rec);
std::string csv_quote(const std::string& field);

std::string to_table(const OutputRecord& rec);
std::string to_table(const std::vector<OutputRecord>& recs);

}  // namespace polymod
