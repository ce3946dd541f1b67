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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"
#include "soav/errors.h"

namespace soav {
namespace {

using Complex = std::complex<double>;

TEST(FormatTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1.0), "1");
  EXPECT_EQ(FormatDouble(-0.0), "0");
  EXPECT_EQ(FormatDouble(1e-20), "1e-20");
  for (double v : {M_PI, -1.0 / 3.0, 6.02214076e23, 5e-324}) {
    EXPECT_EQ(ParseReal(FormatDouble(v)), v);
  }
  EXPECT_EQ(FormatComplex(Complex(1, -2)), "1-2i");
  EXPECT_EQ(FormatComplex(Complex(0.5, 0.25)), "0.5+0.25i");
}

TEST(ParseTest, ComplexForms) {
  EXPECT_EQ(ParseComplex("3"), Complex(3, 0));
  EXPECT_EQ(ParseComplex("-1.5+2i"), Complex(-1.5, 2));
  EXPECT_EQ(ParseComplex("1e-3-4e2i"), Complex(1e-3, -400));
  EXPECT_EQ(ParseComplex("2i"), Complex(0, 2));
  EXPECT_EQ(ParseComplex("-i"), Complex(0, -1));
  EXPECT_EQ(ParseComplex("1+2j"), Complex(1, 2));
  EXPECT_THROW(ParseComplex("1+2"), InputError);
  EXPECT_THROW(ParseComplex("abc"), InputError);
  EXPECT_THROW(ParseReal("1,5"), InputError);
  EXPECT_THROW(ParseReal(""), InputError);
}

TEST(CsvTest, RealRoundTrip) {
  Eigen::MatrixXd m(2, 3);
  m << 1, -2.5, 1.0 / 3.0, 0, 1e10, -1e-10;
  std::stringstream ss;
  WriteMatrixCsv(ss, m);
  const CsvMatrix back = ReadMatrixCsv(ss);
  EXPECT_FALSE(back.is_complex);
  EXPECT_EQ(back.values.real(), m);
}

TEST(CsvTest, ComplexRoundTrip) {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(1, 2), Complex(0, -1), Complex(3, 0), Complex(-0.5, 0.125);
  std::stringstream ss;
  WriteMatrixCsv(ss, m);
  const CsvMatrix back = ReadMatrixCsv(ss);
  EXPECT_TRUE(back.is_complex);
  EXPECT_EQ(back.values, m);
}

TEST(CsvTest, RejectsRaggedRows) {
  std::stringstream ss("1,2\n3\n");
  EXPECT_THROW(ReadMatrixCsv(ss), InputError);
  std::stringstream empty("");
  EXPECT_THROW(ReadMatrixCsv(empty), InputError);
}

TEST(CsvTest, FilesAndVectors) {
  const auto dir = std::filesystem::temp_directory_path() / "soav_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "row.csv") << "1,2,3\n";
    std::ofstream(dir / "col.csv") << "1\n2\n3\n";
    std::ofstream(dir / "mat.csv") << "1,2\n3,4\n";
  }
  EXPECT_EQ(ReadVectorCsv(dir / "row.csv").real(), Eigen::Vector3d(1, 2, 3));
  EXPECT_EQ(ReadVectorCsv(dir / "col.csv").real(), Eigen::Vector3d(1, 2, 3));
  EXPECT_THROW(ReadVectorCsv(dir / "mat.csv"), InputError);
  EXPECT_THROW(ReadMatrixCsv(dir / "missing.csv"), InputError);

  WriteIndexList(dir / "idx.txt", {0, 5, 9});
  EXPECT_EQ(ReadIndexList(dir / "idx.txt"), (std::vector<int>{0, 5, 9}));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace soav
