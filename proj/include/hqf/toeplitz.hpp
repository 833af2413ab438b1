#pragma once

#include "hqf/forms.hpp"

namespace hqf {

/// A Toeplitz form is determined entirely by the first row of its matrix.
/// real_symmetric: all entries real, M_ij = r[|i-j|].
/// hermitian: r[0] real, M_ij = r[j-i] for j >= i and conj(r[i-j]) below
/// the diagonal.
struct ToeplitzSpec {
  enum class Kind { real_symmetric, hermitian };

  Kind kind;
  std::vector<cplx> first_row;

  ToeplitzSpec(Kind kind, std::vector<cplx> first_row);
  int dim() const { return static_cast<int>(first_row.size()); }
};

SquareMatrix toeplitz_dense(const ToeplitzSpec& spec);

// Structured evaluation from first-row data, O(n) storage:
// real hypercube:   n*r[0] + 2 sum_{k>=1} r[k] sum_i x_i x_{i+k}
// complex hypercube: 2n*r[0] + 2 sum_{k>=1} Re(r[k] sum_i conj(x_i) x_{i+k})
// Both match the dense evaluation x' M x.
double eval_toeplitz_real(const ToeplitzSpec& spec, const SpinVector& x);
double eval_toeplitz_complex(const ToeplitzSpec& spec, const QSpinVector& x);

}  // namespace hqf
