#include "hqf/toeplitz.hpp"

#include <cmath>

namespace hqf {

ToeplitzSpec::ToeplitzSpec(Kind k, std::vector<cplx> row)
    : kind(k), first_row(std::move(row)) {
  if (first_row.empty()) throw ValidationError("ToeplitzSpec: empty first row");
  for (const cplx& z : first_row)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("ToeplitzSpec: non-finite entry");
  if (kind == Kind::real_symmetric) {
    for (const cplx& z : first_row)
      if (z.imag() != 0.0)
        throw ValidationError("ToeplitzSpec: real kind requires real entries");
  } else if (first_row.front().imag() != 0.0) {
    throw ValidationError("ToeplitzSpec: Hermitian kind requires a real diagonal entry");
  }
}

SquareMatrix toeplitz_dense(const ToeplitzSpec& spec) {
  const int n = spec.dim();
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j >= i)
        m.at(i, j) = spec.first_row[static_cast<size_t>(j - i)];
      else
        m.at(i, j) = spec.kind == ToeplitzSpec::Kind::real_symmetric
                         ? spec.first_row[static_cast<size_t>(i - j)]
                         : std::conj(spec.first_row[static_cast<size_t>(i - j)]);
    }
  return m;
}

double eval_toeplitz_real(const ToeplitzSpec& spec, const SpinVector& x) {
  if (spec.kind != ToeplitzSpec::Kind::real_symmetric)
    throw ValidationError("eval_toeplitz_real: spec kind is not real_symmetric");
  const int n = spec.dim();
  if (x.size() != n) throw ValidationError("eval_toeplitz_real: dimension mismatch");
  double acc = n * spec.first_row[0].real();
  for (int k = 1; k < n; ++k) {
    long long corr = 0;
    for (int i = 0; i + k < n; ++i) corr += x[i] * x[i + k];
    acc += 2.0 * spec.first_row[static_cast<size_t>(k)].real() * static_cast<double>(corr);
  }
  return acc;
}

double eval_toeplitz_complex(const ToeplitzSpec& spec, const QSpinVector& x) {
  if (spec.kind != ToeplitzSpec::Kind::hermitian)
    throw ValidationError("eval_toeplitz_complex: spec kind is not hermitian");
  const int n = spec.dim();
  if (x.size() != n) throw ValidationError("eval_toeplitz_complex: dimension mismatch");
  double acc = 2.0 * n * spec.first_row[0].real();
  for (int k = 1; k < n; ++k) {
    cplx corr{0.0, 0.0};
    for (int i = 0; i + k < n; ++i) corr += std::conj(x[i]) * x[i + k];
    // T_1k * corr plus its conjugate.
    acc += 2.0 * (spec.first_row[static_cast<size_t>(k)] * corr).real();
  }
  return acc;
}

}  // namespace hqf
