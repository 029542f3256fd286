#pragma once

#include <optional>
#include <vector>

#include "framepath/matrix.hpp"

namespace framepath {

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  Matrix vectors;                   // unitary, i-th column pairs with eigenvalues[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Deterministic sweep order; iterates until the off-diagonal Frobenius norm
/// drops below 1e-13 * ||a||_F. Real input yields real eigenvectors.
HermitianEig hermitian_eig(const Matrix& a, const ToleranceConfig& cfg = {});

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-residual_tol * scale, 0) are clamped to zero; below that throws NotPSD.
Matrix psd_sqrt(const Matrix& a, const ToleranceConfig& cfg = {});

struct PolarDecomposition {
  Matrix partial_isometry;  // initial space (ker b)^perp, final space (ker b*)^perp
  Matrix abs;               // |b| = sqrt(b* b)
  int kernel_dim = 0;       // dim ker b
  int cokernel_dim = 0;     // dim ker b*
};

/// b = partial_isometry * abs with the partial isometry vanishing on ker b.
PolarDecomposition polar_partial_isometry(const Matrix& b, const ToleranceConfig& cfg = {});

/// Completes a square partial isometry to a unitary by pairing an orthonormal
/// basis of its kernel with one of its cokernel (Gram-Schmidt over the residual
/// standard basis). For field R a determinant sign may be requested; reaching
/// it requires at least one kernel pair unless the input already matches.
Matrix extend_to_unitary(const Matrix& u_restricted, std::optional<int> det_target = {},
                         const ToleranceConfig& cfg = {});

/// Spectral data of a unitary u = v exp(i Theta) v*, angles in (-pi, pi].
/// at(t) evaluates v exp(i t Theta) v*; real inputs give real outputs because
/// angles come in conjugate pairs (eigenvalue -1 is paired into pi-rotation
/// blocks, which requires det u = +1 when the field is R).
struct UnitaryLogPath {
  Matrix vectors;
  std::vector<double> angles;
  Field field = Field::C;

  Matrix at(double t) const;
};

UnitaryLogPath unitary_log_path(const Matrix& u, const ToleranceConfig& cfg = {});

/// Single-sample form of the path above: u_t at parameter t in [0, 1].
Matrix principal_unitary_log_path(const Matrix& u, double t, const ToleranceConfig& cfg = {});

/// Number of singular values above tol * sigma_max.
int rank(const Matrix& a, double tol);

cplx determinant(const Matrix& a);

/// Solves a x = rhs by LU with partial pivoting; throws SingularMatrix.
Matrix solve_linear(const Matrix& a, const Matrix& rhs);
Matrix inverse(const Matrix& a);

}  // namespace framepath
