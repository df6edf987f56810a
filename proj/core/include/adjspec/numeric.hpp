#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adjspec/rational.hpp"
#include "adjspec/sparse_operator.hpp"

namespace adjspec {

inline constexpr double kZeroTolerance = 1e-9;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  std::size_t zero_multiplicity = 0;
  double tolerance = kZeroTolerance;
};

/// Dense self-adjoint eigensolver. Complex hermitian matrices go through the
/// real embedding [Re -Im; Im Re], whose spectrum is each eigenvalue twice.
/// An eigenvalue counts as zero when |lambda| <= tol * max(1, schur bound).
/// Throws NotHermitian.
SpectrumResult spectrum(const SparseOperator& op, double zero_tolerance = kZeroTolerance);

// One eigenvalue per line, 17 significant digits.
std::string spectrum_csv(const SpectrumResult& s);

/// ||K^+ f|| + ||Φ f|| with the pseudo-inverse taken on the range of K.
/// Throws NotInRange unless f is exactly orthogonal to ker K.
double f_norm(std::span<const GaussianRational> f, const SparseOperator& k, std::span<const Rational> phi);

struct ResolventSample {
  double lambda = 0;
  double mu = 0;
  int sign = +1;  // value uses lambda + sign * i mu
  std::complex<double> value;
  std::optional<double> f_norm;
  std::optional<double> ratio;  // |value| / f_norm^2
};

/// <f, (H - lambda -+ i mu)^{-1} f> for every lambda, mu and both signs.
/// When k is given the samples also carry f_norm(f) and the ratio.
/// Throws BadParams for mu <= 0, SingularSystem if a solve breaks down.
std::vector<ResolventSample> resolvent_probe(const SparseOperator& h, std::span<const GaussianRational> f,
                                             const std::vector<double>& lambdas, const std::vector<double>& mus,
                                             const SparseOperator* k = nullptr, std::span<const Rational> phi = {});

}  // namespace adjspec
