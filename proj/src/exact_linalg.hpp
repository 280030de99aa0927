// Copyright 2026 The holotoric Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace holotoric::exact {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;  // row-major

/// Fraction-free (Bareiss) row reduction. Returns the original indices of the
/// pivot rows in the order they were chosen; their count is the rank.
std::vector<std::size_t> pivot_rows(Matrix m);

std::size_t rank(const Matrix& m);

/// Determinant of a square matrix via Bareiss elimination.
BigInt determinant(Matrix m);

/// Adjugate: adj(A) * A == det(A) * I.
Matrix adjugate(const Matrix& a);

struct Solution {
  BigInt denominator;               // nonzero
  std::vector<BigInt> numerators;   // x_i = numerators[i] / denominator
};

/// Solves A x = b for A with full column rank (rows >= cols). Returns nullopt
/// when b is outside the column space.
std::optional<Solution> solve_full_column_rank(const Matrix& a, const std::vector<BigInt>& b);

}  // namespace holotoric::exact
