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

#ifndef SOAV_MATRIX_IO_H_
#define SOAV_MATRIX_IO_H_

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace soav {

// Text formats. Matrices are CSV without a header, one row per line, decimal
// point only. Complex entries are written "a+bi" / "a-bi". Vectors are
// column matrices (one entry per line); a single-row file is also accepted
// when reading a vector. Index lists hold one integer per line. All readers
// throw InputError on malformed input.

// Shortest decimal text that round-trips to the same double.
std::string FormatDouble(double value);
std::string FormatComplex(std::complex<double> value);

double ParseReal(std::string_view token);
// Accepts "a", "a+bi", "a-bi", "bi" with optional exponents.
std::complex<double> ParseComplex(std::string_view token);

// Matrix read from CSV. is_complex is true when any token carries an
// imaginary part.
struct CsvMatrix {
  Eigen::MatrixXcd values;
  bool is_complex = false;
};

CsvMatrix ReadMatrixCsv(std::istream& in);
CsvMatrix ReadMatrixCsv(const std::filesystem::path& path);

// Flattens a single-row or single-column file.
Eigen::VectorXcd ReadVectorCsv(const std::filesystem::path& path);

Eigen::MatrixXd ReadRealMatrixCsv(const std::filesystem::path& path);

void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& m);
void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXcd& m);
void WriteMatrixCsv(const std::filesystem::path& path, const Eigen::MatrixXd& m);
void WriteMatrixCsv(const std::filesystem::path& path,
                    const Eigen::MatrixXcd& m);

std::vector<int> ReadIndexList(const std::filesystem::path& path);
void WriteIndexList(const std::filesystem::path& path,
                    const std::vector<int>& indices);

}  // namespace soav

#endif  // SOAV_MATRIX_IO_H_
