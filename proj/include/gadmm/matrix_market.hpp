// Copyright 2026 The gadmm Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Minimal Matrix Market I/O for dense real fixtures. Reads the `array` and
// `coordinate` formats with `general` or `symmetric` symmetry; writes `array
// real general` with round-trip precision.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gadmm/errors.hpp"

namespace gadmm {

class MatrixMarketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void write_matrix_market(std::ostream& out, const Matrix& m) {
  out << "%%MatrixMarket matrix array real general\n";
  out << m.rows() << ' ' << m.cols() << '\n';
  char buf[64];
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g\n", m(i, j));
      out << buf;
    }
  }
}

inline Matrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw MatrixMarketError("matrix market: empty input");
  std::string lower = line;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  std::istringstream banner(lower);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%matrixmarket" || object != "matrix") {
    throw MatrixMarketError("matrix market: missing or unsupported banner");
  }
  if (field != "real" && field != "double" && field != "integer") {
    throw MatrixMarketError("matrix market: unsupported field '" + field + "'");
  }
  const bool symmetric = symmetry == "symmetric";
  if (!symmetric && symmetry != "general") {
    throw MatrixMarketError("matrix market: unsupported symmetry '" + symmetry + "'");
  }

  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream size_line(line);
  Index rows = 0, cols = 0;
  if (!(size_line >> rows >> cols) || rows < 0 || cols < 0) {
    throw MatrixMarketError("matrix market: bad size line");
  }
  Matrix m = Matrix::Zero(rows, cols);

  if (format == "array") {
    for (Index j = 0; j < cols; ++j) {
      for (Index i = symmetric ? j : 0; i < rows; ++i) {
        double value = 0.0;
        if (!(in >> value)) throw MatrixMarketError("matrix market: truncated array data");
        m(i, j) = value;
        if (symmetric) m(j, i) = value;
      }
    }
  } else if (format == "coordinate") {
    Index entries = 0;
    if (!(size_line >> entries)) throw MatrixMarketError("matrix market: missing entry count");
    for (Index e = 0; e < entries; ++e) {
      Index i = 0, j = 0;
      double value = 0.0;
      if (!(in >> i >> j >> value)) throw MatrixMarketError("matrix market: truncated coordinate data");
      if (i < 1 || i > rows || j < 1 || j > cols) {
        throw MatrixMarketError("matrix market: entry index out of range");
      }
      m(i - 1, j - 1) = value;
      if (symmetric) m(j - 1, i - 1) = value;
    }
  } else {
    throw MatrixMarketError("matrix market: unsupported format '" + format + "'");
  }
  return m;
}

inline void save_matrix_market(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw MatrixMarketError("matrix market: cannot open " + path + " for writing");
  write_matrix_market(out, m);
}

inline Matrix load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixMarketError("matrix market: cannot open " + path);
  return read_matrix_market(in);
}

}  // namespace gadmm
