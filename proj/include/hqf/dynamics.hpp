#pragma once

#include "hqf/stability.hpp"

#include <cstdint>

namespace hqf {

enum class Mode { stable, anti };
enum class UpdateOrder { cyclic, random };
enum class Outcome { fixed_point, two_cycle, budget_exhausted };

using State = std::vector<cplx>;

struct TrajectoryStep {
  int step;
  int node;  // -1 for a fully parallel update
  State state;
  double energy;
};

struct Trajectory {
  Flavor flavor;
  State initial;
  std::vector<TrajectoryStep> steps;
  Outcome outcome;
  long flips;
  UpdateOrder order;
  std::uint64_t seed;

  const State& final_state() const { return steps.empty() ? initial : steps.back().state; }
};

// Pre-activations are computed from the hollow reduction C of W, so the
// diagonal never feeds back into a node's own update: H_i = sum_j C_ij v_j - T_i.
cplx pre_activation(const Network& net, const State& v, int i);

State serial_step(const Network& net, const State& v, int i, Mode mode);
State parallel_step(const Network& net, const State& v, Mode mode);

// Lyapunov function of the dynamics: G(v) = Re(v' C v) - 2 Re(T' v) with C
// the hollow reduction of W. Stable-mode updates ascend G, anti-mode descend.
double energy(const Network& net, const State& v);

// budget 0 selects the default of 4*n sweeps (serial) or 4*n steps (parallel).
Trajectory run_serial(const Network& net, const State& v0, Mode mode,
                      UpdateOrder order = UpdateOrder::cyclic,
                      std::uint64_t seed = 0, int budget_sweeps = 0);
Trajectory run_parallel(const Network& net, const State& v0, Mode mode,
                        int budget_steps = 0);

}  // namespace hqf
