#include "lvint/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace lvint {

int exact_rank(RationalMatrix matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix[0].size();
  for (const auto& row : matrix)
    if (row.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");

  // One-step fraction-free elimination: every 2x2 cross product is divided
  // by the previous pivot, which is an exact division.
  Rational previous_pivot(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[rank], matrix[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        Rational value = matrix[r][c] * matrix[rank][col] - matrix[r][col] * matrix[rank][c];
        matrix[r][c] = value / previous_pivot;
      }
      matrix[r][col] = 0;
    }
    previous_pivot = matrix[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

void check_poly_matrix(const PolyMatrix& a, const char* op) {
  if (a.empty()) throw std::invalid_argument(std::string(op) + ": empty matrix");
  const std::size_t cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument(std::string(op) + ": ragged matrix");
}

}  // namespace

PolyMatrix poly_matrix(int rows, int cols, int nvars) {
  return PolyMatrix(rows, std::vector<LaurentPolynomial>(cols, LaurentPolynomial(nvars)));
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  check_poly_matrix(a, "multiply");
  check_poly_matrix(b, "multiply");
  const std::size_t n = a.size(), inner = a[0].size(), m = b[0].size();
  if (inner != b.size()) throw std::invalid_argument("multiply: dimension mismatch");
  const int nvars = a[0][0].nvars();
  PolyMatrix result = poly_matrix(static_cast<int>(n), static_cast<int>(m), nvars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        result[i][j] += a[i][k] * b[k][j];
      }
    }
  return result;
}

PolyMatrix subtract(const PolyMatrix& a, const PolyMatrix& b) {
  check_poly_matrix(a, "subtract");
  if (a.size() != b.size() || a[0].size() != b[0].size())
    throw std::invalid_argument("subtract: dimension mismatch");
  PolyMatrix result = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) result[i][j] -= b[i][j];
  return result;
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
  return subtract(multiply(a, b), multiply(b, a));
}

PolyMatrix matrix_power(const PolyMatrix& a, int exponent) {
  check_poly_matrix(a, "matrix_power");
  if (exponent < 0) throw std::invalid_argument("matrix_power: negative exponent");
  const int n = static_cast<int>(a.size());
  const int nvars = a[0][0].nvars();
  PolyMatrix result = poly_matrix(n, n, nvars);
  for (int i = 0; i < n; ++i) result[i][i] = LaurentPolynomial::constant(nvars, 1);
  for (int e = 0; e < exponent; ++e) result = multiply(result, a);
  return result;
}

bool is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& entry : row)
      if (!entry.is_zero()) return false;
  return true;
}

namespace {

struct DeterminantState {
  const PolyMatrix* matrix;
  int size;
  std::vector<bool> used;
  std::vector<int> chosen;
  LaurentPolynomial total;

  void expand(int row, const LaurentPolynomial& product, int inversions) {
    if (row == size) {
      if (inversions & 1)
        total -= product;
      else
        total += product;
      return;
    }
    for (int col = 0; col < size; ++col) {
      if (used[col]) continue;
      const LaurentPolynomial& entry = (*matrix)[row][col];
      if (entry.is_zero()) continue;
      int added_inversions = 0;
      for (int c : chosen)
        if (c > col) ++added_inversions;
      used[col] = true;
      chosen.push_back(col);
      expand(row + 1, product * entry, inversions + added_inversions);
      chosen.pop_back();
      used[col] = false;
    }
  }
};

}  // namespace

LaurentPolynomial sparse_determinant(const PolyMatrix& a) {
  check_poly_matrix(a, "sparse_determinant");
  if (a.size() != a[0].size())
    throw std::invalid_argument("sparse_determinant: matrix not square");
  const int n = static_cast<int>(a.size());
  const int nvars = a[0][0].nvars();
  DeterminantState state{&a, n, std::vector<bool>(n, false), {}, LaurentPolynomial(nvars)};
  state.chosen.reserve(n);
  state.expand(0, LaurentPolynomial::constant(nvars, 1), 0);
  return state.total;
}

}  // namespace lvint
