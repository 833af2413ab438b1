#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqf/dynamics.hpp"
#include "support.hpp"

#include <cmath>

using namespace hqf;
namespace ht = hqf::testing;

namespace {

Network pair_net(double w01 = 1.0) {
  return Network::zero_threshold(SquareMatrix(2, {0.0, w01, w01, 0.0}), Flavor::real);
}

State rs(std::initializer_list<int> vals) {
  State s;
  for (int v : vals) s.push_back({static_cast<double>(v), 0.0});
  return s;
}

}  // namespace

TEST_CASE("pre_activation drops the diagonal via the hollow reduction") {
  CHECK(pre_activation(pair_net(), rs({1, 1}), 0) == cplx{1.0, 0.0});
  const Network fat =
      Network::zero_threshold(SquareMatrix(2, {5.0, 1.0, 1.0, 5.0}), Flavor::real);
  CHECK(pre_activation(fat, rs({1, 1}), 0) == cplx{1.0, 0.0});
  const Network thr(SquareMatrix(1, {0.0}), {cplx{2.0, 0.0}}, Flavor::real);
  CHECK(pre_activation(thr, rs({1}), 0) == cplx{-2.0, 0.0});
  CHECK_THROWS_AS(pre_activation(pair_net(), rs({1, 1}), 2), ValidationError);
}

TEST_CASE("serial_step in both modes") {
  CHECK(serial_step(pair_net(), rs({1, 1}), 0, Mode::anti) == rs({-1, 1}));
  CHECK(serial_step(pair_net(), rs({1, 1}), 0, Mode::stable) == rs({1, 1}));
  const Network cnet =
      Network::zero_threshold(SquareMatrix(2, {0.0, 1.0, 1.0, 0.0}), Flavor::complex);
  const State v{cplx{1.0, 1.0}, cplx{1.0, 1.0}};
  const State stepped = serial_step(cnet, v, 0, Mode::anti);
  CHECK(stepped[0] == cplx{-1.0, -1.0});
  CHECK(stepped[1] == cplx{1.0, 1.0});
}

TEST_CASE("parallel_step and the length-2 cycle") {
  CHECK(parallel_step(pair_net(), rs({1, 1}), Mode::anti) == rs({-1, -1}));
  CHECK(parallel_step(pair_net(), rs({-1, -1}), Mode::anti) == rs({1, 1}));
  CHECK(parallel_step(pair_net(-1.0), rs({1, -1}), Mode::stable) == rs({1, -1}));
}

TEST_CASE("energy values") {
  CHECK(energy(pair_net(), rs({1, 1})) == 2.0);
  CHECK(energy(pair_net(), rs({1, -1})) == -2.0);
  const Network thr(SquareMatrix(1, {0.0}), {cplx{2.0, 0.0}}, Flavor::real);
  CHECK(energy(thr, rs({1})) == -4.0);
  CHECK(energy(thr, rs({-1})) == 4.0);
}

TEST_CASE("run_serial: two-node anti run reaches a fixed point in one flip") {
  const Trajectory t = run_serial(pair_net(), rs({1, 1}), Mode::anti);
  CHECK(t.outcome == Outcome::fixed_point);
  CHECK(t.final_state() == rs({-1, 1}));
  CHECK(t.flips == 1);
}

TEST_CASE("run_serial: zero network converges to all-(+1) in stable mode") {
  const Network zero = Network::zero_threshold(SquareMatrix(3), Flavor::real);
  const Trajectory t = run_serial(zero, rs({-1, 1, -1}), Mode::stable);
  CHECK(t.outcome == Outcome::fixed_point);
  CHECK(t.final_state() == rs({1, 1, 1}));
}

TEST_CASE("run_serial fixed points pass the matching predicate") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Network net = ht::random_real_network(n, rng);
    const State v0 = to_state(random_real_vertex(n, rng()));
    const Mode mode = (trial % 2 == 0) ? Mode::anti : Mode::stable;
    const UpdateOrder ord = (trial % 3 == 0) ? UpdateOrder::random : UpdateOrder::cyclic;
    const Trajectory t = run_serial(net, v0, mode, ord, rng());
    REQUIRE(t.outcome == Outcome::fixed_point);
    if (mode == Mode::anti)
      CHECK(is_anti_stable_state(net, t.final_state()));
    else
      CHECK(is_stable_state(net, t.final_state()));
  }
}

TEST_CASE("serial energy is monotone") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const bool complex_flavor = trial % 2 == 1;
    const Network net = complex_flavor ? ht::random_complex_network(n, rng)
                                       : ht::random_real_network(n, rng);
    const State v0 = complex_flavor ? to_state(random_complex_vertex(n, rng()))
                                    : to_state(random_real_vertex(n, rng()));
    const Mode mode = (trial % 4 < 2) ? Mode::anti : Mode::stable;
    const Trajectory t = run_serial(net, v0, mode);
    double prev = energy(net, t.initial);
    for (const auto& s : t.steps) {
      const double delta = s.energy - prev;
      if (mode == Mode::anti)
        CHECK(delta <= 1e-12);
      else
        CHECK(delta >= -1e-12);
      prev = s.energy;
    }
  }
}

TEST_CASE("run_parallel: 2-cycle and fixed-point examples") {
  const Trajectory cyc = run_parallel(pair_net(), rs({1, 1}), Mode::anti);
  CHECK(cyc.outcome == Outcome::two_cycle);
  const Trajectory fix = run_parallel(pair_net(), rs({1, -1}), Mode::anti);
  CHECK(fix.outcome == Outcome::fixed_point);
  CHECK(fix.final_state() == rs({1, -1}));
}

TEST_CASE("run_parallel outcomes on random conforming networks") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const bool complex_flavor = trial % 2 == 1;
    const Network net = complex_flavor
                            ? ht::random_complex_network(n, rng, /*hollow=*/false)
                            : ht::random_real_network(n, rng, /*hollow=*/false);
    const State v0 = complex_flavor ? to_state(random_complex_vertex(n, rng()))
                                    : to_state(random_real_vertex(n, rng()));
    const Mode mode = (trial % 4 < 2) ? Mode::anti : Mode::stable;
    const Trajectory t = run_parallel(net, v0, mode);
    REQUIRE(t.outcome != Outcome::budget_exhausted);
    if (t.outcome == Outcome::two_cycle) {
      const State& last = t.final_state();
      const State again = parallel_step(net, parallel_step(net, last, mode), mode);
      CHECK(again == last);
    }
  }
}

TEST_CASE("mode duality: anti step on (W,T) equals stable step on (-W,-T)") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Network net = ht::random_real_network(n, rng);
    SquareMatrix neg(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) neg.at(i, j) = -net.weights().at(i, j);
    std::vector<cplx> tneg;
    for (const cplx& z : net.thresholds()) tneg.push_back(-z);
    const Network mirrored(neg, tneg, Flavor::real);
    const State v = to_state(random_real_vertex(n, rng()));
    const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (pre_activation(net, v, i).real() != 0.0)
      CHECK(serial_step(net, v, i, Mode::anti) == serial_step(mirrored, v, i, Mode::stable));
  }
}

TEST_CASE("complex energy is real by construction") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Network net = ht::random_complex_network(n, rng);
    const State v = to_state(random_complex_vertex(n, rng()));
    const cplx quad = eval_form(net.coupling(), v);
    CHECK(std::abs(quad.imag()) <= 1e-12);
  }
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  const Trajectory t = run_parallel(pair_net(), rs({1, 1}), Mode::anti, 1);
  CHECK(t.outcome == Outcome::budget_exhausted);
}
