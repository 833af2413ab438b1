#pragma once

#include "hqf/hypercube.hpp"

namespace hqf {

enum class Flavor { real, complex };

/// Dense n x n matrix over the complex numbers; a real matrix is one whose
/// imaginary plane is identically zero. Symmetry / Hermitianity / hollowness
/// are checked predicates, never trusted labels.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n);
  SquareMatrix(int n, std::vector<cplx> row_major);

  static SquareMatrix identity(int n);

  int dim() const { return n_; }
  const cplx& at(int i, int j) const { return a_[idx(i, j)]; }
  cplx& at(int i, int j) { return a_[idx(i, j)]; }

  bool is_real() const;
  bool is_symmetric() const;
  bool is_hermitian() const;
  bool is_hollow() const;
  bool has_nonnegative_diagonal() const;

  SquareMatrix conjugate_transpose() const;
  double trace_real() const;  // real part of the trace

  bool operator==(const SquareMatrix&) const = default;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
  }

  int n_;
  std::vector<cplx> a_;
};

/// Hermitian / skew-Hermitian split (transpose-based for real input):
/// sym = (A + A')/2, skew = (A - A')/2, sym + skew = A exactly.
struct Decomposition {
  SquareMatrix sym;
  SquareMatrix skew;
};
Decomposition decompose(const SquareMatrix& a);

/// Symmetric (resp. Hermitian) part with the diagonal zeroed, plus the
/// constant the diagonal contributes on the hypercube: Trace for the real
/// hypercube, 2*Trace for the complex one.
struct HollowReduction {
  SquareMatrix c;
  Flavor flavor;
  double offset;
};
HollowReduction hollow_reduce(const SquareMatrix& a, Flavor flavor);

/// x' A x with the left vector conjugated. When A is Hermitian the result is
/// real up to roundoff; any imaginary residue <= 1e-12 is dropped so the
/// reported value is exactly real.
cplx eval_form(const SquareMatrix& a, const std::vector<cplx>& x);
double eval_form(const SquareMatrix& a, const SpinVector& x);
cplx eval_form(const SquareMatrix& a, const QSpinVector& x);

}  // namespace hqf
