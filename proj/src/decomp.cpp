#include "framepath/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace framepath {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

void sort_eigenpairs(std::vector<double>& vals, Matrix& vecs) {
  const int n = static_cast<int>(vals.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return vals[static_cast<std::size_t>(i)] <
                                              vals[static_cast<std::size_t>(j)]; });
  std::vector<double> sv(static_cast<std::size_t>(n));
  Matrix sm(n, n, vecs.field());
  for (int k = 0; k < n; ++k) {
    sv[static_cast<std::size_t>(k)] = vals[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    for (int i = 0; i < n; ++i) sm(i, k) = vecs(i, order[static_cast<std::size_t>(k)]);
  }
  vals = std::move(sv);
  vecs = std::move(sm);
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& a, const ToleranceConfig& cfg) {
  require_square(a, "hermitian_eig");
  a.require_finite();
  const int n = a.rows();
  const double scale = a.frobenius_norm();
  if (hermitian_residual(a) > cfg.residual_tol * (1.0 + scale))
    fail(Err::NotHermitian, "hermitian_eig: symmetry residual above tolerance");

  // Work on the Hermitian part so roundoff asymmetry cannot drift.
  Matrix w(n, n, a.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  Matrix v = Matrix::identity(n, a.field());
  const double target = 1e-13 * std::max(scale, 1e-300);
  const int max_sweeps = 100;

  int sweep = 0;
  while (off_diagonal_norm(w) > target) {
    if (++sweep > max_sweeps)
      fail(Err::NotConverged, "hermitian_eig: Jacobi sweeps exhausted");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = w(p, q);
        const double mag = std::abs(apq);
        if (mag <= target / n) continue;
        const cplx phase = apq / mag;
        const double app = w(p, p).real();
        const double aqq = w(q, q).real();
        const double tau = (app - aqq) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;              // J(p,q) = -s*phase, J(q,p) = s*conj(phase)
        const cplx spc = s * std::conj(phase);
        // Column update: w <- w J, v <- v J.
        for (int k = 0; k < n; ++k) {
          const cplx wp = w(k, p), wq = w(k, q);
          w(k, p) = c * wp + spc * wq;
          w(k, q) = -sp * wp + c * wq;
          const cplx vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp + spc * vq;
          v(k, q) = -sp * vp + c * vq;
        }
        // Row update: w <- J* w.
        for (int k = 0; k < n; ++k) {
          const cplx wp = w(p, k), wq = w(q, k);
          w(p, k) = c * wp + sp * wq;
          w(q, k) = -spc * wp + c * wq;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        w(p, p) = cplx(w(p, p).real(), 0.0);
        w(q, q) = cplx(w(q, q).real(), 0.0);
      }
  }

  HermitianEig out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = w(i, i).real();
  out.vectors = std::move(v);
  sort_eigenpairs(out.eigenvalues, out.vectors);
  return out;
}

Matrix psd_sqrt(const Matrix& a, const ToleranceConfig& cfg) {
  HermitianEig eig = hermitian_eig(a, cfg);
  const int n = a.rows();
  const double scale = std::max(1.0, a.frobenius_norm());
  Matrix r(n, n, a.field());
  for (int k = 0; k < n; ++k) {
    double lam = eig.eigenvalues[static_cast<std::size_t>(k)];
    if (lam < -cfg.residual_tol * scale)
      fail(Err::NotPSD, "psd_sqrt: negative eigenvalue beyond tolerance");
    lam = std::max(lam, 0.0);
    const double s = std::sqrt(lam);
    if (s == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const cplx vi = s * eig.vectors(i, k);
      for (int j = 0; j < n; ++j) r(i, j) += vi * std::conj(eig.vectors(j, k));
    }
  }
  // Symmetrize away rank-one accumulation noise.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const cplx m = 0.5 * (r(i, j) + std::conj(r(j, i)));
      r(i, j) = m;
      r(j, i) = std::conj(m);
    }
  return r;
}

namespace {

// Singular values come from eigenvalues of b*b, so noise-floor them at the
// eigensolver accuracy (~1e-13 * ||b*b||) before taking square roots.
double gram_sigma_cutoff(const std::vector<double>& gram_eigs, double tol) {
  double lam_max = 0.0;
  for (double lam : gram_eigs) lam_max = std::max(lam_max, lam);
  const double sigma_max = std::sqrt(std::max(lam_max, 0.0));
  const double rel = tol * std::max(1.0, sigma_max);
  return std::sqrt(std::max(rel * rel, 1e-12 * lam_max));
}

}  // namespace

PolarDecomposition polar_partial_isometry(const Matrix& b, const ToleranceConfig& cfg) {
  b.require_finite();
  const int m = b.rows(), n = b.cols();
  HermitianEig eig = hermitian_eig(b.adjoint() * b, cfg);
  std::vector<double> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    sigma[static_cast<std::size_t>(i)] =
        std::sqrt(std::max(eig.eigenvalues[static_cast<std::size_t>(i)], 0.0));
  const double cutoff = gram_sigma_cutoff(eig.eigenvalues, cfg.zero_tol);

  PolarDecomposition out;
  out.partial_isometry = Matrix::zero(m, n, b.field());
  out.abs = Matrix::zero(n, n, b.field());
  int r = 0;
  for (int k = 0; k < n; ++k) {
    const double s = sigma[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i) {
      const cplx vi = s * eig.vectors(i, k);
      for (int j = 0; j < n; ++j) out.abs(i, j) += vi * std::conj(eig.vectors(j, k));
    }
    if (s <= cutoff) continue;
    ++r;
    // Column of b applied to the eigenvector, normalized by sigma.
    std::vector<cplx> bw(static_cast<std::size_t>(m), cplx(0.0, 0.0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) bw[static_cast<std::size_t>(i)] += b(i, j) * eig.vectors(j, k);
    for (int i = 0; i < m; ++i) {
      const cplx ui = bw[static_cast<std::size_t>(i)] / s;
      for (int j = 0; j < n; ++j)
        out.partial_isometry(i, j) += ui * std::conj(eig.vectors(j, k));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const cplx v = 0.5 * (out.abs(i, j) + std::conj(out.abs(j, i)));
      out.abs(i, j) = v;
      out.abs(j, i) = std::conj(v);
    }
  out.kernel_dim = n - r;
  out.cokernel_dim = m - r;
  return out;
}

namespace {

/// Orthonormal basis of the range of (id - proj) via Gram-Schmidt over the
/// standard basis, falling back to the eigenvectors of proj when the count
/// disagrees with round(n - tr proj).
std::vector<std::vector<cplx>> complement_basis(const Matrix& proj, const ToleranceConfig& cfg) {
  const int n = proj.rows();
  const int expected = static_cast<int>(std::llround(n - proj.trace().real()));
  std::vector<std::vector<cplx>> basis;
  const double gs_tol = 1e-6;
  for (int e = 0; e < n && static_cast<int>(basis.size()) < expected; ++e) {
    std::vector<cplx> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<std::size_t>(i)] = (i == e ? cplx(1.0, 0.0) : cplx(0.0, 0.0)) - proj(i, e);
    for (const auto& u : basis) {
      cplx ip = 0.0;
      for (int i = 0; i < n; ++i) ip += std::conj(u[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= ip * u[static_cast<std::size_t>(i)];
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm > gs_tol) {
      for (auto& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
  }
  if (static_cast<int>(basis.size()) != expected) {
    basis.clear();
    HermitianEig eig = hermitian_eig(proj, cfg);
    for (int k = 0; k < n; ++k)
      if (eig.eigenvalues[static_cast<std::size_t>(k)] < 0.5) {
        std::vector<cplx> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = eig.vectors(i, k);
        basis.push_back(std::move(v));
      }
  }
  return basis;
}

}  // namespace

Matrix extend_to_unitary(const Matrix& u_restricted, std::optional<int> det_target,
                         const ToleranceConfig& cfg) {
  if (!u_restricted.is_square())
    fail(Err::DimensionMismatch, "extend_to_unitary: kernel and cokernel dimensions differ");
  const int n = u_restricted.rows();
  const Matrix init = u_restricted.adjoint() * u_restricted;
  const Matrix fin = u_restricted * u_restricted.adjoint();
  if (distance(u_restricted * init, u_restricted) > cfg.residual_tol * (1.0 + n))
    fail(Err::InvalidArgument, "extend_to_unitary: input is not a partial isometry");
  if (det_target && u_restricted.field() == Field::C)
    fail(Err::InvalidArgument, "extend_to_unitary: det_target only applies over R");
  if (det_target && *det_target != 1 && *det_target != -1)
    fail(Err::InvalidArgument, "extend_to_unitary: det_target must be +1 or -1");

  auto kernel = complement_basis(init, cfg);
  auto cokernel = complement_basis(fin, cfg);
  if (kernel.size() != cokernel.size())
    fail(Err::DimensionMismatch, "extend_to_unitary: kernel/cokernel dimension mismatch");

  Matrix u = u_restricted;
  for (std::size_t k = 0; k < kernel.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        u(i, j) += cokernel[k][static_cast<std::size_t>(i)] *
                   std::conj(kernel[k][static_cast<std::size_t>(j)]);

  if (det_target) {
    const double det = determinant(u).real();
    if ((det > 0.0 ? 1 : -1) != *det_target) {
      if (kernel.empty())
        fail(Err::DetUnreachable, "extend_to_unitary: no kernel freedom to adjust determinant");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          u(i, j) -= 2.0 * cokernel[0][static_cast<std::size_t>(i)] *
                     std::conj(kernel[0][static_cast<std::size_t>(j)]);
    }
  }
  return u;
}

UnitaryLogPath unitary_log_path(const Matrix& u, const ToleranceConfig& cfg) {
  require_square(u, "unitary_log_path");
  const int n = u.rows();
  if (distance(u.adjoint() * u, Matrix::identity(n, u.field())) > cfg.residual_tol * (1.0 + n))
    fail(Err::InvalidArgument, "unitary_log_path: input is not unitary");
  if (u.field() == Field::R && determinant(u).real() < 0.0)
    fail(Err::WrongComponent, "unitary_log_path: real unitary outside SO(n)");

  // u = H + iS with commuting Hermitian H, S. Diagonalize H, then refine each
  // eigenvalue cluster with the restriction of S; angles follow from atan2.
  Matrix h(n, n, u.field());
  Matrix s(n, n, Field::C);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx uij = u(i, j), uji = std::conj(u(j, i));
      h(i, j) = 0.5 * (uij + uji);
      s(i, j) = cplx(0.0, -0.5) * (uij - uji);
    }

  HermitianEig eh = hermitian_eig(h, cfg);
  Matrix v = eh.vectors;
  std::vector<double> cosv = eh.eigenvalues;
  std::vector<double> sinv(static_cast<std::size_t>(n), 0.0);

  const double cluster_tol = 1e-8;
  int lo = 0;
  while (lo < n) {
    int hi = lo + 1;
    while (hi < n && cosv[static_cast<std::size_t>(hi)] - cosv[static_cast<std::size_t>(hi - 1)] <= cluster_tol)
      ++hi;
    const int m = hi - lo;
    if (m == 1) {
      cplx val = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          val += std::conj(v(i, lo)) * s(i, j) * v(j, lo);
      sinv[static_cast<std::size_t>(lo)] = val.real();
    } else {
      Matrix vb = v.submatrix(0, lo, n, m);
      Matrix sb = vb.adjoint() * (s * vb);
      HermitianEig es = hermitian_eig(sb, cfg);
      Matrix rotated = vb * es.vectors;
      v.set_submatrix(0, lo, rotated);
      for (int k = 0; k < m; ++k)
        sinv[static_cast<std::size_t>(lo + k)] = es.eigenvalues[static_cast<std::size_t>(k)];
    }
    lo = hi;
  }

  UnitaryLogPath out;
  out.field = u.field();
  out.angles.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double th = std::atan2(sinv[static_cast<std::size_t>(k)], cosv[static_cast<std::size_t>(k)]);
    if (th <= -3.14159265358979309) th = 3.14159265358979323846;  // principal branch (-pi, pi]
    out.angles[static_cast<std::size_t>(k)] = th;
  }

  if (u.field() == Field::R) {
    // Eigenvalue -1 carries sign-ambiguous zero angles; rebuild those vectors
    // as conjugate pairs with angles +pi / -pi so evaluations stay real.
    std::vector<int> flat;
    for (int k = 0; k < n; ++k)
      if (cosv[static_cast<std::size_t>(k)] < 0.0 &&
          std::abs(sinv[static_cast<std::size_t>(k)]) <= 1e-12)
        flat.push_back(k);
    if (!flat.empty()) {
      if (flat.size() % 2 != 0)
        fail(Err::WrongComponent, "unitary_log_path: odd multiplicity at eigenvalue -1");
      const int m = static_cast<int>(flat.size());
      Matrix proj(n, n, Field::C);
      for (int idx : flat)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) proj(i, j) += v(i, idx) * std::conj(v(j, idx));
      proj = proj.real_part_checked(1e-9);
      HermitianEig ep = hermitian_eig(proj, cfg);
      std::vector<int> top;
      for (int k = n - 1; k >= 0 && static_cast<int>(top.size()) < m; --k) top.push_back(k);
      const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
      for (int pair = 0; pair < m / 2; ++pair) {
        const int c1 = top[static_cast<std::size_t>(2 * pair)];
        const int c2 = top[static_cast<std::size_t>(2 * pair + 1)];
        const int d1 = flat[static_cast<std::size_t>(2 * pair)];
        const int d2 = flat[static_cast<std::size_t>(2 * pair + 1)];
        for (int i = 0; i < n; ++i) {
          const cplx r1 = ep.vectors(i, c1), r2 = ep.vectors(i, c2);
          v(i, d1) = inv_sqrt2 * (r1 - cplx(0.0, 1.0) * r2);
          v(i, d2) = inv_sqrt2 * (r1 + cplx(0.0, 1.0) * r2);
        }
        out.angles[static_cast<std::size_t>(d1)] = 3.14159265358979323846;
        out.angles[static_cast<std::size_t>(d2)] = -3.14159265358979323846;
      }
    }
  }
  out.vectors = std::move(v);
  return out;
}

Matrix UnitaryLogPath::at(double t) const {
  const int n = vectors.rows();
  Matrix r(n, n, Field::C);
  for (int k = 0; k < n; ++k) {
    const cplx phase = std::exp(cplx(0.0, t * angles[static_cast<std::size_t>(k)]));
    for (int i = 0; i < n; ++i) {
      const cplx vi = phase * vectors(i, k);
      for (int j = 0; j < n; ++j) r(i, j) += vi * std::conj(vectors(j, k));
    }
  }
  if (field == Field::R) return r.real_part_checked(1e-9);
  return r;
}

Matrix principal_unitary_log_path(const Matrix& u, double t, const ToleranceConfig& cfg) {
  return unitary_log_path(u, cfg).at(t);
}

int rank(const Matrix& a, double tol) {
  HermitianEig eig = hermitian_eig(a.adjoint() * a);
  const double cutoff = gram_sigma_cutoff(eig.eigenvalues, tol);
  int r = 0;
  for (double lam : eig.eigenvalues)
    if (std::sqrt(std::max(lam, 0.0)) > cutoff) ++r;
  return r;
}

namespace {

struct Lu {
  Matrix lu;
  std::vector<int> perm;
  int swaps = 0;
  bool singular = false;
};

Lu lu_factor(const Matrix& a) {
  Lu f{a, {}, 0, false};
  const int n = a.rows();
  f.perm.resize(static_cast<std::size_t>(n));
  std::iota(f.perm.begin(), f.perm.end(), 0);
  const double tiny = 1e-300;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(f.lu(k, k));
    for (int i = k + 1; i < n; ++i)
      if (std::abs(f.lu(i, k)) > best) {
        best = std::abs(f.lu(i, k));
        piv = i;
      }
    if (best < tiny) {
      f.singular = true;
      return f;
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[static_cast<std::size_t>(k)], f.perm[static_cast<std::size_t>(piv)]);
      ++f.swaps;
    }
    for (int i = k + 1; i < n; ++i) {
      const cplx m = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = m;
      for (int j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

}  // namespace

cplx determinant(const Matrix& a) {
  require_square(a, "determinant");
  Lu f = lu_factor(a);
  if (f.singular) return 0.0;
  cplx det = (f.swaps % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

Matrix solve_linear(const Matrix& a, const Matrix& rhs) {
  require_square(a, "solve_linear");
  if (rhs.rows() != a.rows()) fail(Err::DimensionMismatch, "solve_linear: rhs shape mismatch");
  Lu f = lu_factor(a);
  if (f.singular) fail(Err::SingularMatrix, "solve_linear: matrix numerically singular");
  const int n = a.rows(), m = rhs.cols();
  Matrix x(n, m, join_fields(a.field(), rhs.field()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = rhs(f.perm[static_cast<std::size_t>(i)], j);
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i)
      for (int j = 0; j < m; ++j) x(i, j) -= f.lu(i, k) * x(k, j);
  for (int k = n - 1; k >= 0; --k) {
    for (int j = 0; j < m; ++j) x(k, j) /= f.lu(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < m; ++j) x(i, j) -= f.lu(i, k) * x(k, j);
  }
  return x;
}

Matrix inverse(const Matrix& a) { return solve_linear(a, Matrix::identity(a.rows(), a.field())); }

}  // namespace framepath
