#ifndef GZKIT_LINALG_HPP
#define GZKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "gzkit/exactalg.hpp"

namespace gzkit {

inline bool field_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool field_is_zero(const RationalFunction& x) { return x.is_zero(); }

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Reduced row echelon form over an exact field. Rows are independent; the
// matrix must be rectangular.
template <typename T>
struct Echelon {
  Matrix<T> rows;          // reduced rows, one per pivot
  std::vector<int> pivots;  // pivot column per row
  int columns = 0;
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <typename T>
Echelon<T> row_reduce(Matrix<T> m, int columns) {
  Echelon<T> e;
  e.columns = columns;
  std::size_t next = 0;
  for (int c = 0; c < columns && next < m.size(); ++c) {
    std::size_t p = next;
    while (p < m.size() && field_is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[next]);
    T inv = T(1) / m[next][c];
    for (int k = c; k < columns; ++k)
      if (!field_is_zero(m[next][k])) m[next][k] = m[next][k] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || field_is_zero(m[r][c])) continue;
      T factor = m[r][c];
      for (int k = c; k < columns; ++k)
        if (!field_is_zero(m[next][k])) m[r][k] = m[r][k] - factor * m[next][k];
    }
    e.pivots.push_back(c);
    ++next;
  }
  m.resize(next);
  e.rows = std::move(m);
  return e;
}

template <typename T>
int rank(const Matrix<T>& m) {
  if (m.empty()) return 0;
  return row_reduce(m, static_cast<int>(m[0].size())).rank();
}

// Basis of {x : m x = 0}.
template <typename T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m, int columns) {
  Echelon<T> e = row_reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(columns, T(0));
    x[free] = T(1);
    for (int r = 0; r < e.rank(); ++r) x[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

// Solve m x = b; nullopt if inconsistent. Free variables are set to zero.
template <typename T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b, int columns) {
  Matrix<T> aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  Echelon<T> e = row_reduce(std::move(aug), columns + 1);
  std::vector<T> x(columns, T(0));
  for (int r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == columns) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][columns];
  }
  return x;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m, int columns) {
  Matrix<T> t(columns, std::vector<T>(m.size(), T(0)));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (int c = 0; c < columns; ++c) t[c][r] = m[r][c];
  return t;
}

}  // namespace gzkit

#endif
