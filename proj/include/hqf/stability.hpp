#pragma once

#include "hqf/network.hpp"

namespace hqf {

// Pre-activation with the caller's W verbatim: H_i = sum_j W_ij v_j - T_i.
// The predicates below are the literal fixed-point conditions of the signum
// dynamics (tie convention sgn(0) = +1 throughout).
bool is_stable(const Network& net, const SpinVector& v);
bool is_stable(const Network& net, const QSpinVector& v);
bool is_anti_stable(const Network& net, const SpinVector& v);
bool is_anti_stable(const Network& net, const QSpinVector& v);

// State-typed variants used by enumeration code. free_nodes < 0 checks every
// node; otherwise only the first free_nodes conditions are required, the
// remaining coordinates being treated as hard-clamped (augmented networks
// hold their dummy node fixed, and in anti mode its own update condition
// cannot hold for k > 0).
bool is_stable_state(const Network& net, const std::vector<cplx>& v, int free_nodes = -1);
bool is_anti_stable_state(const Network& net, const std::vector<cplx>& v, int free_nodes = -1);

/// First-order minimality slacks for a hollow C. Real case: s_i = u_i*(Cu)_i;
/// complex case the product splits per component, Re(u_i)*Re((Cu)_i) and
/// Im(u_i)*Im((Cu)_i). A minimizer has every slack <= 0; exact zeros are ties
/// (both spin choices give the same form value) and are listed separately.
struct SlackReport {
  Flavor flavor;
  std::vector<double> slack_re;
  std::vector<double> slack_im;  // empty for the real flavor
  bool all_satisfied;
  std::vector<int> tie_indices;  // zero-based
};

SlackReport minimality_slack(const SquareMatrix& c, const SpinVector& u);
SlackReport minimality_slack(const SquareMatrix& c, const QSpinVector& u);

}  // namespace hqf
