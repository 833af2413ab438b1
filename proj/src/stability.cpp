#include "hqf/stability.hpp"

namespace hqf {

namespace {

std::vector<cplx> net_input(const Network& net, const std::vector<cplx>& v) {
  const int n = net.dim();
  if (static_cast<int>(v.size()) != n)
    throw ValidationError("stability: state dimension does not match network");
  std::vector<cplx> h(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) acc += net.weights().at(i, j) * v[static_cast<size_t>(j)];
    h[static_cast<size_t>(i)] = acc - net.thresholds()[static_cast<size_t>(i)];
  }
  return h;
}

bool fixed_under(const Network& net, const std::vector<cplx>& v, double dir, int free_nodes) {
  const std::vector<cplx> h = net_input(net, v);
  const size_t checked = free_nodes < 0 ? v.size() : static_cast<size_t>(free_nodes);
  if (checked > v.size()) throw ValidationError("stability: free_nodes exceeds dimension");
  for (size_t i = 0; i < checked; ++i) {
    if (net.flavor() == Flavor::real) {
      if (v[i].real() != dir * sgn(h[i].real())) return false;
    } else {
      if (v[i] != dir * csgn(h[i])) return false;
    }
  }
  return true;
}

void require_flavor(const Network& net, Flavor f) {
  if (net.flavor() != f) throw ValidationError("stability: state flavor does not match network");
}

std::vector<cplx> coupled(const SquareMatrix& c, const std::vector<cplx>& u) {
  const int n = c.dim();
  if (static_cast<int>(u.size()) != n)
    throw ValidationError("minimality_slack: dimension mismatch");
  std::vector<cplx> cu(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) acc += c.at(i, j) * u[static_cast<size_t>(j)];
    cu[static_cast<size_t>(i)] = acc;
  }
  return cu;
}

}  // namespace

bool is_stable_state(const Network& net, const std::vector<cplx>& v, int free_nodes) {
  return fixed_under(net, v, 1.0, free_nodes);
}

bool is_anti_stable_state(const Network& net, const std::vector<cplx>& v, int free_nodes) {
  return fixed_under(net, v, -1.0, free_nodes);
}

bool is_stable(const Network& net, const SpinVector& v) {
  require_flavor(net, Flavor::real);
  return is_stable_state(net, to_state(v));
}

bool is_stable(const Network& net, const QSpinVector& v) {
  require_flavor(net, Flavor::complex);
  return is_stable_state(net, to_state(v));
}

bool is_anti_stable(const Network& net, const SpinVector& v) {
  require_flavor(net, Flavor::real);
  return is_anti_stable_state(net, to_state(v));
}

bool is_anti_stable(const Network& net, const QSpinVector& v) {
  require_flavor(net, Flavor::complex);
  return is_anti_stable_state(net, to_state(v));
}

SlackReport minimality_slack(const SquareMatrix& c, const SpinVector& u) {
  if (!c.is_hollow() || !c.is_symmetric() || !c.is_real())
    throw ValidationError("minimality_slack: C must be hollow real symmetric");
  const std::vector<cplx> cu = coupled(c, to_state(u));
  SlackReport r{Flavor::real, {}, {}, true, {}};
  for (int i = 0; i < u.size(); ++i) {
    const double s = u[i] * cu[static_cast<size_t>(i)].real();
    r.slack_re.push_back(s);
    if (s > 0.0) r.all_satisfied = false;
    if (cu[static_cast<size_t>(i)].real() == 0.0) r.tie_indices.push_back(i);
  }
  return r;
}

SlackReport minimality_slack(const SquareMatrix& c, const QSpinVector& u) {
  if (!c.is_hollow() || !c.is_hermitian())
    throw ValidationError("minimality_slack: C must be hollow Hermitian");
  const std::vector<cplx> cu = coupled(c, u.entries());
  SlackReport r{Flavor::complex, {}, {}, true, {}};
  for (int i = 0; i < u.size(); ++i) {
    const cplx h = cu[static_cast<size_t>(i)];
    const double sre = u[i].real() * h.real();
    const double sim = u[i].imag() * h.imag();
    r.slack_re.push_back(sre);
    r.slack_im.push_back(sim);
    if (sre > 0.0 || sim > 0.0) r.all_satisfied = false;
    if (h.real() == 0.0 || h.imag() == 0.0) r.tie_indices.push_back(i);
  }
  return r;
}

}  // namespace hqf
