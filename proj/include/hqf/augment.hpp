#pragma once

#include "hqf/network.hpp"

namespace hqf {

/// Zero-threshold network with one extra clamped node that encodes the
/// original thresholds. Real case: Wtilde = [[W, -T],[-T^T, k]] with
/// k = sum|T_i| + 1, clamp +1. Complex case the dummy weights S solve
/// (1+j) S_i = T_i, Wtilde = [[W, -S],[-S', k]] with
/// k = sum(|Re T_i| + |Im T_i|) + 1, clamp 1+j. The k choice makes the
/// clamped node a fixed point of the update against every state of the
/// first n nodes.
struct AugmentedNetwork {
  Network net;                      // dimension n+1, zero thresholds
  double corner;                    // k
  std::vector<cplx> dummy_weights;  // T (real) or S (complex)
  cplx clamp;                       // +1 or 1+j
};

AugmentedNetwork augment(const Network& net);
AugmentedNetwork augment_real(const SquareMatrix& w, const std::vector<double>& t);
AugmentedNetwork augment_complex(const SquareMatrix& w, const std::vector<cplx>& t);

// S_i = c_i + j d_i with c_i = (a_i + b_i)/2, d_i = (b_i - a_i)/2 for
// T_i = a_i + j b_i; satisfies (1+j) S_i = T_i exactly.
std::vector<cplx> solve_dummy_weights(const std::vector<cplx>& t);

// Append / strip the clamp coordinate. project rejects states whose last
// coordinate is not the clamp value.
SpinVector embed_state(const SpinVector& v);
QSpinVector embed_state(const QSpinVector& v);
SpinVector project_state(const SpinVector& v);
QSpinVector project_state(const QSpinVector& v);

}  // namespace hqf
