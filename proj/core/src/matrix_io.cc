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

#include "soav/matrix_io.h"

#include <charconv>
#include <cmath>
#include <type_traits>
#include <fstream>
#include <sstream>

#include "soav/errors.h"

namespace soav {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  return out;
}

template <typename Matrix>
void WriteRows(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      if constexpr (std::is_same_v<typename Matrix::Scalar, double>) {
        out << FormatDouble(m(i, j));
      } else {
        out << FormatComplex(m(i, j));
      }
    }
    out << '\n';
  }
}

}  // namespace

std::string FormatDouble(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string FormatComplex(std::complex<double> value) {
  std::string out = FormatDouble(value.real());
  const double imag = value.imag() == 0.0 ? 0.0 : value.imag();
  if (!std::signbit(imag)) out += '+';
  out += FormatDouble(imag);
  out += 'i';
  return out;
}

double ParseReal(std::string_view token) {
  token = Trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw InputError("cannot parse number '" + std::string(token) + "'");
  }
  return value;
}

std::complex<double> ParseComplex(std::string_view token) {
  token = Trim(token);
  if (token.empty() || (token.back() != 'i' && token.back() != 'j')) {
    return {ParseReal(token), 0.0};
  }
  token.remove_suffix(1);
  // The imaginary part starts at the last sign that is not the leading sign
  // and not part of an exponent.
  size_t split = std::string_view::npos;
  for (size_t i = token.size(); i-- > 1;) {
    if ((token[i] == '+' || token[i] == '-') && token[i - 1] != 'e' &&
        token[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (token.empty() || token == "+" || token == "-") {
      return {0.0, token == "-" ? -1.0 : 1.0};
    }
    return {0.0, ParseReal(token)};
  }
  const double real = ParseReal(token.substr(0, split));
  std::string_view imag_text = token.substr(split);
  double imag = 0.0;
  if (imag_text == "+" || imag_text == "-") {
    imag = imag_text == "-" ? -1.0 : 1.0;
  } else {
    imag = ParseReal(imag_text);
  }
  return {real, imag};
}

CsvMatrix ReadMatrixCsv(std::istream& in) {
  std::vector<std::vector<std::complex<double>>> rows;
  bool is_complex = false;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) continue;
    std::vector<std::complex<double>> row;
    std::string_view rest = trimmed;
    while (true) {
      const size_t comma = rest.find(',');
      const std::string_view token = Trim(rest.substr(0, comma));
      if (!token.empty() && (token.back() == 'i' || token.back() == 'j')) {
        is_complex = true;
      }
      row.push_back(ParseComplex(token));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("ragged CSV: row " + std::to_string(rows.size() + 1) +
                       " has " + std::to_string(row.size()) +
                       " entries, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("CSV contains no rows");
  CsvMatrix out;
  out.is_complex = is_complex;
  out.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) out.values(i, j) = rows[i][j];
  }
  if (!out.values.allFinite()) throw InputError("CSV has non-finite entries");
  return out;
}

CsvMatrix ReadMatrixCsv(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  try {
    return ReadMatrixCsv(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Eigen::VectorXcd ReadVectorCsv(const std::filesystem::path& path) {
  const CsvMatrix m = ReadMatrixCsv(path);
  if (m.values.cols() == 1) return m.values.col(0);
  if (m.values.rows() == 1) return m.values.row(0).transpose();
  throw InputError(path.string() + ": expected a single row or column");
}

Eigen::MatrixXd ReadRealMatrixCsv(const std::filesystem::path& path) {
  const CsvMatrix m = ReadMatrixCsv(path);
  if (m.is_complex) throw InputError(path.string() + ": expected real entries");
  return m.values.real();
}

void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& m) {
  WriteRows(out, m);
}

void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXcd& m) {
  WriteRows(out, m);
}

void WriteMatrixCsv(const std::filesystem::path& path,
                    const Eigen::MatrixXd& m) {
  auto out = OpenForWrite(path);
  WriteRows(out, m);
}

void WriteMatrixCsv(const std::filesystem::path& path,
                    const Eigen::MatrixXcd& m) {
  auto out = OpenForWrite(path);
  WriteRows(out, m);
}

std::vector<int> ReadIndexList(const std::filesystem::path& path) {
  auto in = OpenForRead(path);
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view token = Trim(line);
    if (token.empty()) continue;
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError(path.string() + ": bad index '" + std::string(token) +
                       "'");
    }
    out.push_back(value);
  }
  return out;
}

void WriteIndexList(const std::filesystem::path& path,
                    const std::vector<int>& indices) {
  auto out = OpenForWrite(path);
  for (int idx : indices) out << idx << '\n';
}

}  // namespace soav
