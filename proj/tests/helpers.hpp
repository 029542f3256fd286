#pragma once

#include <cmath>
#include <random>

#include "framepath/decomp.hpp"
#include "framepath/diagonal.hpp"
#include "framepath/matrix.hpp"

namespace fptest {

using namespace framepath;

inline Matrix random_matrix(int rows, int cols, Field field, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols, field);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = field == Field::R ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng));
  return m;
}

inline Matrix random_hermitian(int n, Field field, std::mt19937_64& rng) {
  Matrix m = random_matrix(n, n, field, rng);
  return 0.5 * (m + m.adjoint());
}

inline Matrix random_unitary(int n, Field field, std::mt19937_64& rng) {
  return hermitian_eig(random_hermitian(n, field, rng)).vectors;
}

/// Random rank-r orthogonal projection.
inline Matrix random_projection(int n, int r, Field field, std::mt19937_64& rng) {
  Matrix v = random_unitary(n, field, rng);
  Matrix p(n, n, field);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) += v(i, k) * std::conj(v(j, k));
  return 0.5 * (p + p.adjoint());
}

/// Random diagonal unitary (conjugation by it preserves diagonals).
inline Matrix random_diagonal_unitary(int n, Field field, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979323846);
  std::bernoulli_distribution sign(0.5);
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i)
    m(i, i) = field == Field::R ? cplx(sign(rng) ? 1.0 : -1.0, 0.0) : std::exp(cplx(0.0, u(rng)));
  return m;
}

inline Matrix permutation_matrix(const std::vector<int>& perm, Field field) {
  const int n = static_cast<int>(perm.size());
  Matrix p(n, n, field);
  for (int i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = 1.0;
  return p;
}

inline bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return distance(a, b) <= tol;
}

}  // namespace fptest
