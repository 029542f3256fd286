#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace framepath {

using cplx = std::complex<double>;

/// Base field tag. Matrices tagged R must have vanishing imaginary parts.
enum class Field : std::uint8_t { R, C };

const char* field_name(Field f);

/// Error taxonomy shared by the whole library. Each value corresponds to a
/// contract violation or obstruction documented on the operation that throws it.
enum class Err : std::uint16_t {
  // core / linear algebra
  InvalidArgument,
  DimensionMismatch,
  NotHermitian,
  NotPSD,
  SingularMatrix,
  NotConverged,
  DetUnreachable,
  WrongComponent,
  // operator checks
  NotProjection,
  NotIdempotent,
  BlockLawViolated,
  SingularPencil,
  // diagonals of idempotents
  InfeasibleDiagonal,
  Infeasible,
  SolverBreakdown,
  TooLarge,
  ComplexUnsupported,
  RigidityViolation,
  // paths
  NotHalfDiagonal,
  KernelDimMismatch,
  RealM2Disconnected,
  NotAmplifiedDiagonal,
  BadParameters,
  RealFullFamilyEmpty,
  SignConstraintViolated,
  TrivialIdempotent,
  GenericityExhausted,
  RankMismatch,
  NotIrreducible,
  DiagonalMismatch,
  // frames
  NotTight,
  NotConstantDiagonal,
  WrongRedundancy,
  RealFiberObstruction,
  // io
  ParseError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg);
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

/// Numerical thresholds used across the library.
///   zero_tol        entry-nonzero threshold (sparsity pattern, singular values)
///   residual_tol    algebraic residuals (idempotency, self-adjointness, diagonals)
///   integrality_tol distance-to-integer tests on traces and diagonal entries
struct ToleranceConfig {
  double zero_tol = 1e-10;
  double residual_tol = 1e-8;
  double integrality_tol = 1e-8;

  void validate() const;
};

/// Dense row-major matrix over R or C. Entries are always stored as complex
/// doubles; the field tag records whether imaginary parts are meaningful.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Field field);
  Matrix(Field field, std::initializer_list<std::initializer_list<cplx>> rows);

  static Matrix zero(int rows, int cols, Field field);
  static Matrix identity(int n, Field field);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  /// Promotes the field tag (R stays R only if both operands are R).
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conjugate() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// Drops imaginary parts below `tol` and retags as R; throws WrongComponent
  /// if any imaginary part exceeds `tol`.
  Matrix real_part_checked(double tol) const;

  /// True when all imaginary parts vanish to `tol`.
  bool imag_below(double tol) const;

  void require_finite() const;

  Matrix submatrix(int row0, int col0, int nrows, int ncols) const;
  void set_submatrix(int row0, int col0, const Matrix& block);

 private:
  int rows_ = 0;
  int cols_ = 0;
  Field field_ = Field::R;
  std::vector<cplx> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);
Matrix operator*(Matrix a, cplx s);

/// Frobenius distance.
double distance(const Matrix& a, const Matrix& b);

Field join_fields(Field a, Field b);

/// Residual helpers (raw Frobenius norms, no thresholds applied).
double hermitian_residual(const Matrix& a);
double idempotent_residual(const Matrix& a);
double projection_residual(const Matrix& a);

void require_square(const Matrix& a, const char* who);
void require_projection(const Matrix& p, double tol, const char* who);
void require_idempotent(const Matrix& q, double tol, const char* who);

/// Element of the diagonal algebra D_n.
struct DiagonalVector {
  std::vector<cplx> entries;
  Field field = Field::R;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  cplx trace() const;
  double max_abs_diff(const DiagonalVector& o) const;

  static DiagonalVector constant(int n, cplx value, Field field);
};

Matrix embed_diagonal(const DiagonalVector& d);

}  // namespace framepath
