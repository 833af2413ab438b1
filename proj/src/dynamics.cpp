#include "hqf/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hqf {

namespace {

void validate_state(const Network& net, const State& v) {
  if (static_cast<int>(v.size()) != net.dim())
    throw ValidationError("dynamics: state dimension does not match network");
  for (const cplx& z : v) {
    if (net.flavor() == Flavor::real) {
      if (z.imag() != 0.0 || (z.real() != 1.0 && z.real() != -1.0))
        throw ValidationError("dynamics: state not on the real hypercube");
    } else {
      if ((z.real() != 1.0 && z.real() != -1.0) || (z.imag() != 1.0 && z.imag() != -1.0))
        throw ValidationError("dynamics: state not on the complex hypercube");
    }
  }
}

cplx updated_value(const Network& net, const cplx& h, Mode mode) {
  const double dir = mode == Mode::stable ? 1.0 : -1.0;
  if (net.flavor() == Flavor::real) return {dir * sgn(h.real()), 0.0};
  return dir * csgn(h);
}

}  // namespace

cplx pre_activation(const Network& net, const State& v, int i) {
  validate_state(net, v);
  if (i < 0 || i >= net.dim()) throw ValidationError("pre_activation: node index out of range");
  cplx acc{0.0, 0.0};
  for (int j = 0; j < net.dim(); ++j)
    acc += net.coupling().at(i, j) * v[static_cast<size_t>(j)];
  return acc - net.thresholds()[static_cast<size_t>(i)];
}

State serial_step(const Network& net, const State& v, int i, Mode mode) {
  State out = v;
  out[static_cast<size_t>(i)] = updated_value(net, pre_activation(net, v, i), mode);
  return out;
}

State parallel_step(const Network& net, const State& v, Mode mode) {
  validate_state(net, v);
  State out(v.size());
  for (int i = 0; i < net.dim(); ++i) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < net.dim(); ++j)
      acc += net.coupling().at(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] =
        updated_value(net, acc - net.thresholds()[static_cast<size_t>(i)], mode);
  }
  return out;
}

double energy(const Network& net, const State& v) {
  validate_state(net, v);
  const cplx quad = eval_form(net.coupling(), v);
  cplx lin{0.0, 0.0};
  for (int i = 0; i < net.dim(); ++i)
    lin += std::conj(net.thresholds()[static_cast<size_t>(i)]) * v[static_cast<size_t>(i)];
  return quad.real() - 2.0 * lin.real();
}

Trajectory run_serial(const Network& net, const State& v0, Mode mode,
                      UpdateOrder order, std::uint64_t seed, int budget_sweeps) {
  validate_state(net, v0);
  const int n = net.dim();
  if (budget_sweeps <= 0) budget_sweeps = 4 * n;

  Trajectory traj{net.flavor(), v0, {}, Outcome::budget_exhausted, 0, order, seed};
  State v = v0;
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int step = 0;

  for (int sweep = 0; sweep < budget_sweeps; ++sweep) {
    if (order == UpdateOrder::random) std::shuffle(perm.begin(), perm.end(), rng);
    bool changed = false;
    for (int i : perm) {
      const cplx nv = updated_value(net, pre_activation(net, v, i), mode);
      if (nv != v[static_cast<size_t>(i)]) {
        v[static_cast<size_t>(i)] = nv;
        ++traj.flips;
        changed = true;
      }
      traj.steps.push_back({++step, i, v, energy(net, v)});
    }
    if (!changed) {
      traj.outcome = Outcome::fixed_point;
      break;
    }
  }
  return traj;
}

Trajectory run_parallel(const Network& net, const State& v0, Mode mode, int budget_steps) {
  validate_state(net, v0);
  const int n = net.dim();
  if (budget_steps <= 0) budget_steps = 4 * n;

  Trajectory traj{net.flavor(), v0, {}, Outcome::budget_exhausted, 0,
                  UpdateOrder::cyclic, 0};
  State prev2, prev = v0;
  for (int step = 1; step <= budget_steps; ++step) {
    State v = parallel_step(net, prev, mode);
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != prev[i]) ++traj.flips;
    traj.steps.push_back({step, -1, v, energy(net, v)});
    if (v == prev) {
      traj.outcome = Outcome::fixed_point;
      break;
    }
    if (step >= 2 && v == prev2) {
      traj.outcome = Outcome::two_cycle;
      break;
    }
    prev2 = std::move(prev);
    prev = std::move(v);
  }
  return traj;
}

}  // namespace hqf
