#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "weq/types.hpp"

namespace weq {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

namespace detail {

inline Integer exact_div(const Integer& a, const Integer& b)
{
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("Bareiss elimination: inexact division");
  return q;
}

} // namespace detail

/*
 * Fraction-free (Bareiss) forward elimination.
 *
 * After k pivot steps every entry below the pivot rows is a k+1 minor of the
 * input, so the division by the previous pivot is exact. Columns without a
 * pivot are skipped; the rank is the number of rows returned.
 */
inline IntMatrix bareiss_echelon(IntMatrix m, int* swap_sign = nullptr)
{
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m) require_same_size(row.size(), cols, "bareiss_echelon");

  int sign = 1;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = detail::exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  m.resize(r);
  if (swap_sign) *swap_sign = sign;
  return m;
}

inline std::size_t matrix_rank(const IntMatrix& m) { return bareiss_echelon(m).size(); }

inline Integer determinant(const IntMatrix& m)
{
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) require_same_size(row.size(), n, "determinant");
  int sign = 1;
  IntMatrix e = bareiss_echelon(m, &sign);
  if (e.size() < n) return 0;
  // The last Bareiss pivot is the determinant of the row-permuted matrix.
  return sign * e[n - 1][n - 1];
}

/// True iff the rows of `a` and `b` span the same subspace of Q^n.
inline bool same_row_space(const IntMatrix& a, const IntMatrix& b)
{
  const std::size_t ra = matrix_rank(a);
  const std::size_t rb = matrix_rank(b);
  if (ra != rb) return false;
  IntMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  return matrix_rank(both) == ra;
}

/// Generalized cross product of n-1 rows in Q^n: v_j = (-1)^j det(rows without column j).
/// Orthogonal to every row; zero iff the rows are dependent.
inline IntRow cofactor_normal(const IntMatrix& rows)
{
  const std::size_t n = rows.size() + 1;
  for (const auto& row : rows) require_same_size(row.size(), n, "cofactor_normal");
  IntRow v(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    minor.reserve(rows.size());
    for (const auto& row : rows) {
      IntRow r;
      r.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    Integer d = determinant(minor);
    v[j] = (j % 2 == 0) ? d : Integer(-d);
  }
  return v;
}

} // namespace weq
