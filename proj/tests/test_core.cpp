#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace framepath;
using fptest::approx_equal;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("hermitian_eig identity and diagonal inputs") {
  auto id3 = Matrix::identity(3, Field::R);
  auto e = hermitian_eig(id3);
  for (double lam : e.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(distance(e.vectors.adjoint() * e.vectors, id3) < 1e-10);

  Matrix d(Field::R, {{2.0, 0.0}, {0.0, -1.0}});
  auto ed = hermitian_eig(d);
  CHECK(ed.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(ed.eigenvalues[1] == doctest::Approx(2.0));
  // Already diagonal: eigenvectors reduce to a signed permutation.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK((std::abs(ed.vectors(i, j)) < 1e-12 || std::abs(std::abs(ed.vectors(i, j)) - 1.0) < 1e-12));
}

TEST_CASE("hermitian_eig rank-one half projection") {
  // Characteristic polynomial x^2 - x gives eigenvalues 0 and 1.
  Matrix p(Field::R, {{0.5, 0.5}, {0.5, 0.5}});
  auto e = hermitian_eig(p);
  CHECK(e.eigenvalues[0] == doctest::Approx(0.0).epsilon(0.0).scale(1.0));
  CHECK(std::abs(e.eigenvalues[0]) < 1e-12);
  CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig reconstruction and unitarity on random input") {
  std::mt19937_64 rng(11);
  for (int n : {2, 5, 9, 12}) {
    for (Field f : {Field::R, Field::C}) {
      for (int rep = 0; rep < 12; ++rep) {
        Matrix a = fptest::random_hermitian(n, f, rng);
        auto e = hermitian_eig(a);
        Matrix lam(n, n, f);
        for (int i = 0; i < n; ++i) lam(i, i) = e.eigenvalues[static_cast<std::size_t>(i)];
        CHECK(distance(e.vectors * lam * e.vectors.adjoint(), a) <=
              1e-9 * std::max(1.0, a.frobenius_norm()));
        CHECK(distance(e.vectors.adjoint() * e.vectors, Matrix::identity(n, f)) <= 1e-9);
        if (f == Field::R) CHECK(e.vectors.imag_below(0.0));
      }
    }
  }
}

TEST_CASE("hermitian_eig rejects asymmetric input") {
  Matrix a(Field::R, {{0.0, 1.0}, {0.0, 0.0}});
  CHECK_THROWS_WITH_AS(hermitian_eig(a), doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("psd_sqrt on fixed cases") {
  auto z = Matrix::zero(3, 3, Field::R);
  CHECK(psd_sqrt(z).frobenius_norm() == doctest::Approx(0.0));

  Matrix d(Field::R, {{4.0, 0.0}, {0.0, 9.0}});
  Matrix expect(Field::R, {{2.0, 0.0}, {0.0, 3.0}});
  CHECK(approx_equal(psd_sqrt(d), expect, 1e-12));

  // Rank-one: a = (1/2) * projection, so sqrt(a) = (1/sqrt 2) * projection.
  Matrix a(Field::R, {{0.25, -0.25}, {-0.25, 0.25}});
  const double c = 1.0 / (2.0 * kSqrt2);
  Matrix s(Field::R, {{c, -c}, {-c, c}});
  CHECK(approx_equal(psd_sqrt(a), s, 1e-12));
}

TEST_CASE("psd_sqrt properties on random PSD matrices") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Field f = (rep % 2 == 0) ? Field::R : Field::C;
    Matrix b = fptest::random_matrix(n, n, f, rng);
    Matrix a = b * b.adjoint();
    Matrix s = psd_sqrt(a);
    const double scale = 1e-9 * (1.0 + a.frobenius_norm());
    CHECK(distance(s * s, a) <= scale);
    CHECK(distance(s * a, a * s) <= scale);
    CHECK(hermitian_residual(s) <= 1e-10);
  }
  Matrix neg(Field::R, {{-1.0, 0.0}, {0.0, 1.0}});
  CHECK_THROWS_WITH_AS(psd_sqrt(neg), doctest::Contains("NotPSD"), Error);
}

TEST_CASE("polar_partial_isometry fixed cases") {
  Matrix half = 0.5 * Matrix::identity(2, Field::R);
  auto p = polar_partial_isometry(half);
  CHECK(approx_equal(p.partial_isometry, Matrix::identity(2, Field::R), 1e-10));
  CHECK(approx_equal(p.abs, half, 1e-10));
  CHECK(p.kernel_dim == 0);
  CHECK(p.cokernel_dim == 0);

  auto z = polar_partial_isometry(Matrix::zero(3, 3, Field::R));
  CHECK(z.partial_isometry.frobenius_norm() == doctest::Approx(0.0));
  CHECK(z.kernel_dim == 3);
  CHECK(z.cokernel_dim == 3);

  // 2x2 shift: |b| = diag(0,1), one-dimensional kernel and cokernel.
  Matrix b(Field::R, {{0.0, 1.0}, {0.0, 0.0}});
  auto pb = polar_partial_isometry(b);
  Matrix absb(Field::R, {{0.0, 0.0}, {0.0, 1.0}});
  CHECK(approx_equal(pb.abs, absb, 1e-10));
  CHECK(pb.kernel_dim == 1);
  CHECK(pb.cokernel_dim == 1);
  CHECK(approx_equal(pb.partial_isometry * pb.abs, b, 1e-10));
}

TEST_CASE("polar partial isometry spans the kernel complement") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const int n = 2 + static_cast<int>(rng() % 5);
    Field f = (rep % 2 == 0) ? Field::R : Field::C;
    Matrix b = fptest::random_matrix(m, n, f, rng);
    auto p = polar_partial_isometry(b);
    CHECK(distance(p.partial_isometry * p.abs, b) <= 1e-9 * (1.0 + b.frobenius_norm()));
    // u*u is the projection onto (ker b)^perp = range of b*.
    Matrix init = p.partial_isometry.adjoint() * p.partial_isometry;
    CHECK(projection_residual(init) <= 1e-9);
    CHECK(rank(init, 1e-8) == n - p.kernel_dim);
    CHECK(distance(init * b.adjoint(), b.adjoint()) <= 1e-9 * (1.0 + b.frobenius_norm()));
  }
}

TEST_CASE("extend_to_unitary") {
  std::mt19937_64 rng(14);
  // Full isometry passes through unchanged.
  Matrix u = fptest::random_unitary(3, Field::C, rng);
  CHECK(approx_equal(extend_to_unitary(u), u, 1e-9));

  // Zero partial isometry completes to some unitary.
  Matrix z = extend_to_unitary(Matrix::zero(2, 2, Field::R));
  CHECK(distance(z * z.adjoint(), Matrix::identity(2, Field::R)) <= 1e-10);

  // Rank-one e11 over R with determinant target -1 yields diag(1,-1).
  Matrix e11(Field::R, {{1.0, 0.0}, {0.0, 0.0}});
  Matrix ext = extend_to_unitary(e11, -1);
  Matrix expect(Field::R, {{1.0, 0.0}, {0.0, -1.0}});
  CHECK(approx_equal(ext, expect, 1e-12));
  CHECK(determinant(ext).real() == doctest::Approx(-1.0));

  // Determinant target +1 keeps the natural completion.
  Matrix ext1 = extend_to_unitary(e11, 1);
  CHECK(determinant(ext1).real() == doctest::Approx(1.0));
  CHECK(approx_equal(ext1 * e11.adjoint() * e11, e11, 1e-10));

  // No kernel freedom: the target is unreachable.
  Matrix rot(Field::R, {{0.0, -1.0}, {1.0, 0.0}});
  CHECK_THROWS_WITH_AS(extend_to_unitary(rot, -1), doctest::Contains("DetUnreachable"), Error);
}

TEST_CASE("principal_unitary_log_path fixed cases") {
  // Identity stays put.
  Matrix id = Matrix::identity(3, Field::C);
  CHECK(approx_equal(principal_unitary_log_path(id, 0.7), id, 1e-10));

  // diag(i, -i) at t = 1/2.
  Matrix u(2, 2, Field::C);
  u(0, 0) = cplx(0.0, 1.0);
  u(1, 1) = cplx(0.0, -1.0);
  Matrix ut = principal_unitary_log_path(u, 0.5);
  Matrix expect(2, 2, Field::C);
  expect(0, 0) = std::exp(cplx(0.0, kPi / 4.0));
  expect(1, 1) = std::exp(cplx(0.0, -kPi / 4.0));
  CHECK(approx_equal(ut, expect, 1e-10));

  // Rotation by pi/2 at t = 1/2 is rotation by pi/4, and stays real.
  Matrix rot(Field::R, {{0.0, -1.0}, {1.0, 0.0}});
  Matrix half = principal_unitary_log_path(rot, 0.5);
  const double c = std::cos(kPi / 4.0), s = std::sin(kPi / 4.0);
  Matrix expect_r(Field::R, {{c, -s}, {s, c}});
  CHECK(approx_equal(half, expect_r, 1e-10));
  CHECK(half.field() == Field::R);

  // Real unitary with det -1 is rejected.
  Matrix refl(Field::R, {{1.0, 0.0}, {0.0, -1.0}});
  CHECK_THROWS_WITH_AS(unitary_log_path(refl), doctest::Contains("WrongComponent"), Error);
}

TEST_CASE("unitary log path endpoints, unitarity, Lipschitz bound") {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Field f = (rep % 2 == 0) ? Field::C : Field::R;
    Matrix u = fptest::random_unitary(n, f, rng);
    if (f == Field::R && determinant(u).real() < 0.0) {
      // Flip into SO(n) by negating a column.
      for (int i = 0; i < n; ++i) u(i, 0) = -u(i, 0);
    }
    auto path = unitary_log_path(u);
    CHECK(distance(path.at(0.0), Matrix::identity(n, f)) <= 1e-9);
    CHECK(distance(path.at(1.0), u) <= 1e-9);
    double prev_t = 0.0;
    Matrix prev = path.at(0.0);
    for (int k = 1; k <= 16; ++k) {
      const double t = static_cast<double>(k) / 16;
      Matrix cur = path.at(t);
      CHECK(distance(cur.adjoint() * cur, Matrix::identity(n, f)) <= 1e-9);
      CHECK(distance(cur, prev) <= kPi * n * (t - prev_t) + 1e-9);
      if (f == Field::R) CHECK(cur.imag_below(0.0));
      prev = cur;
      prev_t = t;
    }
  }
}

TEST_CASE("real unitary path pairs eigenvalue -1 into pi rotations") {
  // diag(-1,-1) lies in SO(2); the path has to sweep a genuine rotation.
  Matrix u(Field::R, {{-1.0, 0.0}, {0.0, -1.0}});
  auto path = unitary_log_path(u);
  Matrix mid = path.at(0.5);
  CHECK(mid.field() == Field::R);
  CHECK(distance(mid.adjoint() * mid, Matrix::identity(2, Field::R)) <= 1e-9);
  CHECK(distance(path.at(1.0), u) <= 1e-9);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::zero(4, 4, Field::R), 1e-10) == 0);
  CHECK(rank(Matrix::identity(5, Field::C), 1e-10) == 5);
  Matrix p(Field::R, {{0.5, 0.5}, {0.5, 0.5}});
  CHECK(rank(p, 1e-10) == 1);
}

TEST_CASE("determinant and linear solve") {
  Matrix a(Field::R, {{2.0, 1.0}, {1.0, 3.0}});
  CHECK(determinant(a).real() == doctest::Approx(5.0));
  Matrix inv = inverse(a);
  CHECK(approx_equal(a * inv, Matrix::identity(2, Field::R), 1e-12));

  std::mt19937_64 rng(16);
  Matrix m = fptest::random_matrix(6, 6, Field::C, rng);
  Matrix rhs = fptest::random_matrix(6, 2, Field::C, rng);
  Matrix x = solve_linear(m, rhs);
  CHECK(distance(m * x, rhs) <= 1e-9 * (1.0 + rhs.frobenius_norm()));

  Matrix sing(Field::R, {{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_WITH_AS(inverse(sing), doctest::Contains("SingularMatrix"), Error);
}

TEST_CASE("tolerance config validation") {
  ToleranceConfig bad;
  bad.zero_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  ToleranceConfig good;
  CHECK_NOTHROW(good.validate());
}
