#include "framepath/matrix.hpp"

#include <cmath>

namespace framepath {

const char* field_name(Field f) { return f == Field::R ? "R" : "C"; }

const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotHermitian: return "NotHermitian";
    case Err::NotPSD: return "NotPSD";
    case Err::SingularMatrix: return "SingularMatrix";
    case Err::NotConverged: return "NotConverged";
    case Err::DetUnreachable: return "DetUnreachable";
    case Err::WrongComponent: return "WrongComponent";
    case Err::NotProjection: return "NotProjection";
    case Err::NotIdempotent: return "NotIdempotent";
    case Err::BlockLawViolated: return "BlockLawViolated";
    case Err::SingularPencil: return "SingularPencil";
    case Err::InfeasibleDiagonal: return "InfeasibleDiagonal";
    case Err::Infeasible: return "Infeasible";
    case Err::SolverBreakdown: return "SolverBreakdown";
    case Err::TooLarge: return "TooLarge";
    case Err::ComplexUnsupported: return "ComplexUnsupported";
    case Err::RigidityViolation: return "RigidityViolation";
    case Err::NotHalfDiagonal: return "NotHalfDiagonal";
    case Err::KernelDimMismatch: return "KernelDimMismatch";
    case Err::RealM2Disconnected: return "RealM2Disconnected";
    case Err::NotAmplifiedDiagonal: return "NotAmplifiedDiagonal";
    case Err::BadParameters: return "BadParameters";
    case Err::RealFullFamilyEmpty: return "RealFullFamilyEmpty";
    case Err::SignConstraintViolated: return "SignConstraintViolated";
    case Err::TrivialIdempotent: return "TrivialIdempotent";
    case Err::GenericityExhausted: return "GenericityExhausted";
    case Err::RankMismatch: return "RankMismatch";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::DiagonalMismatch: return "DiagonalMismatch";
    case Err::NotTight: return "NotTight";
    case Err::NotConstantDiagonal: return "NotConstantDiagonal";
    case Err::WrongRedundancy: return "WrongRedundancy";
    case Err::RealFiberObstruction: return "RealFiberObstruction";
    case Err::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

void ToleranceConfig::validate() const {
  if (!(zero_tol > 0.0) || !(residual_tol > 0.0) || !(integrality_tol > 0.0))
    fail(Err::InvalidArgument, "tolerances must be strictly positive");
  if (!(zero_tol < 1.0)) fail(Err::InvalidArgument, "zero_tol must be < 1");
}

Matrix::Matrix(int rows, int cols, Field field)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) fail(Err::InvalidArgument, "negative matrix dimensions");
}

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<cplx>> rows)
    : Matrix(static_cast<int>(rows.size()),
             rows.size() ? static_cast<int>(rows.begin()->size()) : 0, field) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      fail(Err::InvalidArgument, "ragged initializer list");
    int j = 0;
    for (const cplx& v : row) (*this)(i, j++) = v;
    ++i;
  }
}

Matrix Matrix::zero(int rows, int cols, Field field) { return Matrix(rows, cols, field); }

Matrix Matrix::identity(int n, Field field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Field join_fields(Field a, Field b) {
  return (a == Field::C || b == Field::C) ? Field::C : Field::R;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Err::DimensionMismatch, "matrix addition shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  field_ = join_fields(field_, o.field_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(Err::DimensionMismatch, "matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  field_ = join_fields(field_, o.field_);
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  if (s.imag() != 0.0) field_ = Field::C;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conjugate() const {
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = std::conj(r(i, j));
  return r;
}

cplx Matrix::trace() const {
  require_square(*this, "trace");
  cplx t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

Matrix Matrix::real_part_checked(double tol) const {
  Matrix r = *this;
  for (auto i = 0; i < rows_; ++i)
    for (auto j = 0; j < cols_; ++j) {
      cplx& v = r(i, j);
      if (std::abs(v.imag()) > tol)
        fail(Err::WrongComponent, "matrix has non-real entries beyond tolerance");
      v = cplx(v.real(), 0.0);
    }
  r.field_ = Field::R;
  return r;
}

bool Matrix::imag_below(double tol) const {
  for (const auto& v : a_)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

void Matrix::require_finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(Err::InvalidArgument, "matrix has non-finite entries");
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    fail(Err::DimensionMismatch, "submatrix out of range");
  Matrix r(nrows, ncols, field_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
  return r;
}

void Matrix::set_submatrix(int row0, int col0, const Matrix& block) {
  if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_)
    fail(Err::DimensionMismatch, "set_submatrix out of range");
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) (*this)(row0 + i, col0 + j) = block(i, j);
  field_ = join_fields(field_, block.field());
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(Err::DimensionMismatch, "matrix product shape mismatch");
  Matrix r(a.rows(), b.cols(), join_fields(a.field(), b.field()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(cplx s, Matrix a) { return a *= s; }
Matrix operator*(Matrix a, cplx s) { return a *= s; }

double distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Err::DimensionMismatch, "distance shape mismatch");
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

double hermitian_residual(const Matrix& a) { return distance(a, a.adjoint()); }

double idempotent_residual(const Matrix& a) { return distance(a * a, a); }

double projection_residual(const Matrix& a) {
  return idempotent_residual(a) + hermitian_residual(a);
}

void require_square(const Matrix& a, const char* who) {
  if (!a.is_square()) fail(Err::DimensionMismatch, std::string(who) + ": matrix must be square");
}

void require_projection(const Matrix& p, double tol, const char* who) {
  require_square(p, who);
  if (projection_residual(p) > tol)
    fail(Err::NotProjection, std::string(who) + ": input is not a projection within tolerance");
}

void require_idempotent(const Matrix& q, double tol, const char* who) {
  require_square(q, who);
  if (idempotent_residual(q) > tol)
    fail(Err::NotIdempotent, std::string(who) + ": input is not idempotent within tolerance");
}

cplx DiagonalVector::trace() const {
  cplx t = 0.0;
  for (const cplx& v : entries) t += v;
  return t;
}

double DiagonalVector::max_abs_diff(const DiagonalVector& o) const {
  if (entries.size() != o.entries.size())
    fail(Err::DimensionMismatch, "diagonal length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i)
    m = std::max(m, std::abs(entries[i] - o.entries[i]));
  return m;
}

DiagonalVector DiagonalVector::constant(int n, cplx value, Field field) {
  DiagonalVector d;
  d.entries.assign(static_cast<std::size_t>(n), value);
  d.field = field;
  return d;
}

Matrix embed_diagonal(const DiagonalVector& d) {
  Matrix m(d.size(), d.size(), d.field);
  for (int i = 0; i < d.size(); ++i) m(i, i) = d.entries[static_cast<std::size_t>(i)];
  return m;
}

}  // namespace framepath
