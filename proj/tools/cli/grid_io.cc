// Copyright 2026 The SOAV Authors. All Rights Reserved.
//
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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "soav/errors.h"

namespace soav::cli {

Eigen::MatrixXd ReadBinaryGrid(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    while (fields >> token) {
      if (token != "0" && token != "1") {
        throw InputError("binary grid holds '" + token + "', expected 0 or 1");
      }
      row.push_back(token == "1" ? 1.0 : 0.0);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("binary grid is not rectangular");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("binary grid is empty");
  Eigen::MatrixXd grid(rows.size(), rows.front().size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) grid(r, c) = rows[r][c];
  }
  return grid;
}

Eigen::MatrixXd ReadBinaryGrid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return ReadBinaryGrid(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void WriteBinaryGrid(std::ostream& out, const Eigen::MatrixXd& grid) {
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index c = 0; c < grid.cols(); ++c) {
      if (c > 0) out << ' ';
      out << (grid(r, c) != 0.0 ? 1 : 0);
    }
    out << '\n';
  }
}

void WritePgm(std::ostream& out, const Eigen::MatrixXd& image) {
  out << "P2\n" << image.cols() << ' ' << image.rows() << "\n255\n";
  for (Eigen::Index r = 0; r < image.rows(); ++r) {
    for (Eigen::Index c = 0; c < image.cols(); ++c) {
      if (c > 0) out << ' ';
      const double v =
          std::isfinite(image(r, c)) ? std::clamp(image(r, c), 0.0, 1.0) : 0.0;
      out << static_cast<int>(std::lround(255.0 * v));
    }
    out << '\n';
  }
}

}  // namespace soav::cli
