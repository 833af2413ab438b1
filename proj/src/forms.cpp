#include "hqf/forms.hpp"

#include <cmath>
#include <string>

namespace hqf {

namespace {

constexpr double kRealnessTol = 1e-12;

void check_finite(const std::vector<cplx>& a) {
  for (const cplx& z : a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("SquareMatrix: non-finite entry");
}

}  // namespace

SquareMatrix::SquareMatrix(int n) : n_(n) {
  if (n < 1) throw ValidationError("SquareMatrix: n must be >= 1");
  a_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), cplx{0.0, 0.0});
}

SquareMatrix::SquareMatrix(int n, std::vector<cplx> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (n < 1) throw ValidationError("SquareMatrix: n must be >= 1");
  if (a_.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw ValidationError("SquareMatrix: entry count " + std::to_string(a_.size()) +
                          " does not match n=" + std::to_string(n));
  check_finite(a_);
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool SquareMatrix::is_real() const {
  for (const cplx& z : a_)
    if (z.imag() != 0.0) return false;
  return true;
}

bool SquareMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool SquareMatrix::is_hermitian() const {
  for (int i = 0; i < n_; ++i) {
    if (at(i, i).imag() != 0.0) return false;
    for (int j = i + 1; j < n_; ++j)
      if (at(i, j) != std::conj(at(j, i))) return false;
  }
  return true;
}

bool SquareMatrix::is_hollow() const {
  for (int i = 0; i < n_; ++i)
    if (at(i, i) != cplx{0.0, 0.0}) return false;
  return true;
}

bool SquareMatrix::has_nonnegative_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (at(i, i).real() < 0.0) return false;
  return true;
}

SquareMatrix SquareMatrix::conjugate_transpose() const {
  SquareMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
  return m;
}

double SquareMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i).real();
  return t;
}

Decomposition decompose(const SquareMatrix& a) {
  const int n = a.dim();
  SquareMatrix sym(n), skew(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx adj = std::conj(a.at(j, i));
      sym.at(i, j) = (a.at(i, j) + adj) / 2.0;
      skew.at(i, j) = (a.at(i, j) - adj) / 2.0;
    }
  return {std::move(sym), std::move(skew)};
}

HollowReduction hollow_reduce(const SquareMatrix& a, Flavor flavor) {
  if (flavor == Flavor::real && !a.is_real())
    throw ValidationError("hollow_reduce: real flavor requires a real matrix");
  SquareMatrix c = decompose(a).sym;
  const double tr = c.trace_real();
  for (int i = 0; i < c.dim(); ++i) c.at(i, i) = 0.0;
  const double offset = flavor == Flavor::real ? tr : 2.0 * tr;
  return {std::move(c), flavor, offset};
}

cplx eval_form(const SquareMatrix& a, const std::vector<cplx>& x) {
  const int n = a.dim();
  if (static_cast<int>(x.size()) != n)
    throw ValidationError("eval_form: dimension mismatch");
  // Accumulated per transpose pair: with p = conj(x_i) x_j the (j,i) term is
  // conj(p) a_ji, so a skew pair sums to exactly zero (real case) or an
  // exactly imaginary value (skew-Hermitian case) before it reaches acc.
  cplx acc{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    acc += std::conj(x[static_cast<size_t>(i)]) * x[static_cast<size_t>(i)] * a.at(i, i);
    for (int j = i + 1; j < n; ++j) {
      const cplx p = std::conj(x[static_cast<size_t>(i)]) * x[static_cast<size_t>(j)];
      acc += p * a.at(i, j) + std::conj(p) * a.at(j, i);
    }
  }
  if (a.is_hermitian() && std::abs(acc.imag()) <= kRealnessTol) acc = {acc.real(), 0.0};
  return acc;
}

double eval_form(const SquareMatrix& a, const SpinVector& x) {
  const cplx v = eval_form(a, to_state(x));
  if (v.imag() != 0.0 && std::abs(v.imag()) > kRealnessTol)
    throw ValidationError("eval_form: non-real value for a real spin vector");
  return v.real();
}

cplx eval_form(const SquareMatrix& a, const QSpinVector& x) {
  return eval_form(a, to_state(x));
}

}  // namespace hqf
