#include "adjspec/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "adjspec/errors.hpp"
#include "adjspec/operators.hpp"

namespace adjspec {

namespace {

std::complex<double> to_complex(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }

Eigen::MatrixXcd dense(const SparseOperator& op) {
  const auto n = static_cast<Eigen::Index>(op.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t r = 0; r < op.dim(); ++r) {
    for (const auto& e : op.row(r)) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col)) = to_complex(e.value);
  }
  return m;
}

Eigen::VectorXcd dense(std::span<const GaussianRational> f) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t k = 0; k < f.size(); ++k) v(static_cast<Eigen::Index>(k)) = to_complex(f[k]);
  return v;
}

}  // namespace

SpectrumResult spectrum(const SparseOperator& op, double zero_tolerance) {
  if (!op.is_hermitian()) throw Error(Errc::NotHermitian, "spectrum needs a hermitian operator");
  const auto n = static_cast<Eigen::Index>(op.dim());
  SpectrumResult result;
  result.tolerance = zero_tolerance;
  if (n == 0) return result;

  std::vector<double> values;
  if (op.is_real()) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t r = 0; r < op.dim(); ++r) {
      for (const auto& e : op.row(r)) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e.col)) = e.value.re().get_d();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  } else {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (std::size_t r = 0; r < op.dim(); ++r) {
      const auto i = static_cast<Eigen::Index>(r);
      for (const auto& e : op.row(r)) {
        const auto j = static_cast<Eigen::Index>(e.col);
        const double re = e.value.re().get_d();
        const double im = e.value.im().get_d();
        m(i, j) = re;
        m(n + i, n + j) = re;
        m(i, n + j) = -im;
        m(n + i, j) = im;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    // Sorted eigenvalues come in equal pairs; keep one of each.
    for (Eigen::Index k = 0; k < 2 * n; k += 2) values.push_back(solver.eigenvalues()(k));
  }
  std::sort(values.begin(), values.end());

  const double scale = std::max(1.0, schur_bound(op).get_d());
  result.zero_multiplicity = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v) <= zero_tolerance * scale; }));
  result.eigenvalues = std::move(values);
  return result;
}

std::string spectrum_csv(const SpectrumResult& s) {
  std::string out;
  char buf[64];
  for (double v : s.eigenvalues) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out += buf;
  }
  return out;
}

double f_norm(std::span<const GaussianRational> f, const SparseOperator& k, std::span<const Rational> phi) {
  if (f.size() != k.dim() || phi.size() != k.dim()) {
    throw Error(Errc::DimensionMismatch, "f, K and Phi must live on the same window");
  }
  if (!k.is_hermitian()) throw Error(Errc::NotHermitian, "K must be hermitian");

  std::vector<std::size_t> all(k.dim());
  for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
  const OperatorKernel kernel = exact_nullspace(k, all);
  for (std::size_t b = 0; b < kernel.basis.size(); ++b) {
    GaussianRational inner;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (!kernel.basis[b][x].is_zero()) inner += kernel.basis[b][x].conj() * f[x];
    }
    if (!inner.is_zero()) {
      throw Error(Errc::NotInRange, "f has a component along kernel vector " + std::to_string(b) + " of K");
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense(k));
  const Eigen::VectorXcd coeffs = solver.eigenvectors().adjoint() * dense(f);
  const double cutoff = kZeroTolerance * std::max(1.0, schur_bound(k).get_d());
  double sq = 0;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    const double lambda = solver.eigenvalues()(j);
    if (std::abs(lambda) > cutoff) sq += std::norm(coeffs(j)) / (lambda * lambda);
  }
  double phi_sq = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    const double p = phi[x].get_d();
    phi_sq += p * p * std::norm(to_complex(f[x]));
  }
  return std::sqrt(sq) + std::sqrt(phi_sq);
}

std::vector<ResolventSample> resolvent_probe(const SparseOperator& h, std::span<const GaussianRational> f,
                                             const std::vector<double>& lambdas, const std::vector<double>& mus,
                                             const SparseOperator* k, std::span<const Rational> phi) {
  if (f.size() != h.dim()) throw Error(Errc::DimensionMismatch, "f and H must live on the same window");
  for (double mu : mus) {
    if (!(mu > 0)) throw Error(Errc::BadParams, "resolvent probe needs mu > 0");
  }
  std::optional<double> fn;
  if (k != nullptr) fn = f_norm(f, *k, phi);

  const Eigen::MatrixXcd hm = dense(h);
  const Eigen::VectorXcd fv = dense(f);
  const auto n = hm.rows();
  std::vector<ResolventSample> samples;
  for (double lambda : lambdas) {
    for (double mu : mus) {
      for (int sign : {+1, -1}) {
        const std::complex<double> z(lambda, sign * mu);
        Eigen::MatrixXcd m = hm - z * Eigen::MatrixXcd::Identity(n, n);
        const Eigen::VectorXcd x = m.partialPivLu().solve(fv);
        const std::complex<double> value = fv.dot(x);  // conjugates the first argument
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
          throw Error(Errc::SingularSystem, "resolvent solve broke down at lambda=" + std::to_string(lambda));
        }
        ResolventSample s{lambda, mu, sign, value, fn, std::nullopt};
        if (fn && *fn > 0) s.ratio = std::abs(value) / (*fn * *fn);
        samples.push_back(s);
      }
    }
  }
  return samples;
}

}  // namespace adjspec
