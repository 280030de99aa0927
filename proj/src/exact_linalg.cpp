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

#include "exact_linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace holotoric::exact {

namespace {

// Bareiss step over the whole matrix. `order` tracks original row indices.
// Returns the number of pivots found and the sign flips from swaps.
std::pair<std::size_t, int> bareiss(Matrix& m, std::vector<std::size_t>& order) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  order.resize(rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  BigInt prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      std::swap(order[p], order[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return {r, sign};
}

}  // namespace

std::vector<std::size_t> pivot_rows(Matrix m) {
  std::vector<std::size_t> order;
  const auto [r, sign] = bareiss(m, order);
  (void)sign;
  order.resize(r);
  return order;
}

std::size_t rank(const Matrix& m) { return pivot_rows(m).size(); }

BigInt determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  }
  if (n == 0) return 1;
  std::vector<std::size_t> order;
  const auto [r, sign] = bareiss(m, order);
  if (r < n) return 0;
  return sign * m[n - 1][n - 1];
}

Matrix adjugate(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix adj(n, std::vector<BigInt>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor;
      minor.reserve(n - 1);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<BigInt> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      BigInt cof = determinant(std::move(minor));
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;
    }
  }
  return adj;
}

std::optional<Solution> solve_full_column_rank(const Matrix& a, const std::vector<BigInt>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
  const auto picked = pivot_rows(a);
  if (picked.size() != cols) throw std::invalid_argument("matrix lacks full column rank");

  // Square system on the independent rows, solved by Cramer's rule.
  Matrix square;
  std::vector<BigInt> rhs;
  for (std::size_t r : picked) {
    square.push_back(a[r]);
    rhs.push_back(b[r]);
  }
  Solution sol;
  sol.denominator = determinant(square);
  sol.numerators.resize(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    Matrix replaced = square;
    for (std::size_t r = 0; r < cols; ++r) replaced[r][k] = rhs[r];
    sol.numerators[k] = determinant(std::move(replaced));
  }

  // The remaining rows must agree: A * num == den * b.
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt lhs = 0;
    for (std::size_t k = 0; k < cols; ++k) lhs += a[r][k] * sol.numerators[k];
    if (lhs != sol.denominator * b[r]) return std::nullopt;
  }
  return sol;
}

}  // namespace holotoric::exact
