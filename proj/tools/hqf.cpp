// Command-line front end: optimization runs, exhaustive oracles, memory
// synthesis, threshold elimination and Toeplitz forms, all over JSON files.
//
// Exit codes: 0 success, 1 usage/parse error, 2 validation failure,
// 3 budget exhausted.

#include "hqf/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace hqf;

int env_threads() {
  const char* s = std::getenv("HQF_THREADS");
  if (!s) return 1;
  const int t = std::atoi(s);
  return t > 0 ? t : 1;
}

void emit(const json& j, const std::string& out_path, bool text) {
  std::string body;
  if (text) {
    for (const auto& [key, value] : j.items())
      body += key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  } else {
    body = j.dump(2) + "\n";
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write " + out_path);
    f << body;
  }
}

Flavor matrix_flavor(const SquareMatrix& m) {
  return m.is_real() ? Flavor::real : Flavor::complex;
}

struct OptimizeOpts {
  std::string matrix_path, net_path, order = "cyclic", mode = "anti",
              exec = "serial", format = "json", trace_path, out_path;
  std::uint64_t seed = 0;
  int restarts = 1, budget = 0;
};

int run_optimize(const OptimizeOpts& o) {
  std::optional<SquareMatrix> source;
  std::optional<Network> net;
  if (!o.matrix_path.empty()) {
    source = matrix_from_json(load_json_file(o.matrix_path));
    const Flavor fl = matrix_flavor(*source);
    net = Network::zero_threshold(hollow_reduce(*source, fl).c, fl);
  } else {
    net = network_from_json(load_json_file(o.net_path));
  }
  const Mode mode = o.mode == "stable" ? Mode::stable : Mode::anti;
  const UpdateOrder order = o.order == "random" ? UpdateOrder::random : UpdateOrder::cyclic;
  const int n = net->dim();

  std::optional<Trajectory> best;
  int best_restart = -1;
  for (int r = 0; r < o.restarts; ++r) {
    const State v0 = net->flavor() == Flavor::real
                         ? to_state(random_real_vertex(n, o.seed + static_cast<std::uint64_t>(r)))
                         : to_state(random_complex_vertex(n, o.seed + static_cast<std::uint64_t>(r)));
    Trajectory t = o.exec == "parallel"
                       ? run_parallel(*net, v0, mode, o.budget)
                       : run_serial(*net, v0, mode, order, o.seed, o.budget);
    const bool converged = t.outcome != Outcome::budget_exhausted;
    const bool best_converged = best && best->outcome != Outcome::budget_exhausted;
    bool better = !best;
    if (best && converged && !best_converged) better = true;
    if (best && converged == best_converged) {
      const double e = energy(*net, t.final_state());
      const double be = energy(*net, best->final_state());
      better = mode == Mode::anti ? e < be : e > be;
    }
    if (better) {
      best = std::move(t);
      best_restart = r;
    }
  }

  if (!o.trace_path.empty()) {
    std::ofstream f(o.trace_path);
    if (!f) throw ParseError("cannot write " + o.trace_path);
    f << trajectory_to_jsonl(*best);
  }

  const State& v = best->final_state();
  const char* outcome = best->outcome == Outcome::fixed_point    ? "fixed_point"
                        : best->outcome == Outcome::two_cycle    ? "two_cycle"
                                                                 : "budget_exhausted";
  const SquareMatrix& form_matrix = source ? *source : net->weights();
  json rep{{"command", "optimize"},
           {"seed", o.seed},
           {"restarts", o.restarts},
           {"restart_index", best_restart},
           {"mode", o.mode},
           {"exec", o.exec},
           {"order", o.order},
           {"flavor", flavor_name(net->flavor())},
           {"outcome", outcome},
           {"state", state_to_json(v, net->flavor())},
           {"energy", energy(*net, v)},
           {"form_value", eval_form(form_matrix, v).real()},
           {"flips", best->flips},
           {"steps", best->steps.size()}};
  emit(rep, o.out_path, o.format == "text");
  return best->outcome == Outcome::budget_exhausted ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopfield-Amari optimization of quadratic and Hermitian forms over hypercubes"};
  app.require_subcommand(1);

  OptimizeOpts opt;
  auto* optimize = app.add_subcommand("optimize", "Run the signum dynamics on a matrix or network");
  auto* mgrp = optimize->add_option("--matrix", opt.matrix_path, "form matrix JSON file");
  optimize->add_option("--net", opt.net_path, "network JSON file")->excludes(mgrp);
  optimize->add_option("--mode", opt.mode, "stable|anti")->check(CLI::IsMember({"stable", "anti"}));
  optimize->add_option("--exec", opt.exec, "serial|parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));
  optimize->add_option("--order", opt.order, "cyclic|random")
      ->check(CLI::IsMember({"cyclic", "random"}));
  optimize->add_option("--seed", opt.seed, "RNG seed");
  optimize->add_option("--restarts", opt.restarts, "best-of restarts")->check(CLI::PositiveNumber);
  optimize->add_option("--budget", opt.budget, "sweep/step budget (0 = 4n)");
  optimize->add_option("--trace", opt.trace_path, "write the trajectory as JSON lines");
  optimize->add_option("--out", opt.out_path, "output file (default stdout)");
  optimize->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));

  std::string matrix_path, net_path, flavor_override, format = "json", out_path;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive small-instance ground truth");
  oracle->require_subcommand(1);
  auto* extrema = oracle->add_subcommand("extrema", "Global extrema over the hypercube");
  extrema->add_option("--matrix", matrix_path, "form matrix JSON file")->required();
  extrema->add_option("--flavor", flavor_override, "real|complex")
      ->check(CLI::IsMember({"real", "complex"}));
  auto* verify = oracle->add_subcommand("verify", "Check the minimality condition on all minimizers");
  verify->add_option("--matrix", matrix_path, "form matrix JSON file")->required();
  verify->add_option("--flavor", flavor_override, "real|complex")
      ->check(CLI::IsMember({"real", "complex"}));
  auto* corner = oracle->add_subcommand("corner", "Corner positivity with witness");
  corner->add_option("--matrix", matrix_path, "real matrix JSON file")->required();
  auto* census_cmd = oracle->add_subcommand("census", "Classify every vertex of a network");
  census_cmd->add_option("--net", net_path, "network JSON file")->required();
  for (auto* c : {extrema, verify, corner, census_cmd}) {
    c->add_option("--out", out_path, "output file (default stdout)");
    c->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  }

  std::string patterns_path, kind = "stable";
  bool do_verify = false;
  auto* synth = app.add_subcommand("synth", "Synthesize an associative-memory weight matrix");
  synth->add_option("--patterns", patterns_path, "pattern set JSON file")->required();
  synth->add_option("--kind", kind, "stable|anti")->check(CLI::IsMember({"stable", "anti"}));
  synth->add_flag("--verify", do_verify, "re-check storage soundness before writing");
  synth->add_option("--out", out_path, "output file (default stdout)");
  synth->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  auto* augment_cmd = app.add_subcommand("augment", "Eliminate thresholds with a clamped dummy node");
  augment_cmd->add_option("--net", net_path, "network JSON file")->required();
  augment_cmd->add_flag("--verify", do_verify, "re-check state-structure preservation");
  augment_cmd->add_option("--out", out_path, "output file (default stdout)");
  augment_cmd->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

  std::string spec_path, vector_path;
  auto* toeplitz = app.add_subcommand("toeplitz", "Structured Toeplitz forms");
  toeplitz->require_subcommand(1);
  auto* teval = toeplitz->add_subcommand("eval", "Evaluate a Toeplitz form at a hypercube vertex");
  teval->add_option("--spec", spec_path, "Toeplitz spec JSON file")->required();
  teval->add_option("--vector", vector_path, "hypercube vertex JSON file")->required();
  auto* texpand = toeplitz->add_subcommand("expand", "Expand a spec to a dense matrix");
  texpand->add_option("--spec", spec_path, "Toeplitz spec JSON file")->required();
  for (auto* c : {teval, texpand}) {
    c->add_option("--out", out_path, "output file (default stdout)");
    c->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const bool text = format == "text";
  try {
    if (optimize->parsed()) {
      if (opt.matrix_path.empty() == opt.net_path.empty())
        throw ParseError("optimize: exactly one of --matrix / --net is required");
      return run_optimize(opt);
    }
    if (extrema->parsed() || verify->parsed()) {
      const SquareMatrix m = matrix_from_json(load_json_file(matrix_path));
      const Flavor fl = flavor_override.empty() ? matrix_flavor(m)
                                                : flavor_from_name(flavor_override);
      if (extrema->parsed()) {
        ExtremaReport rep = brute_force_extrema(m, fl, env_threads());
        json j = extrema_to_json(rep);
        j["command"] = "oracle extrema";
        emit(j, out_path, text);
      } else {
        TheoremVerdict v = verify_theorem(m, fl);
        json j = verdict_to_json(v);
        j["command"] = "oracle verify";
        emit(j, out_path, text);
        if (!v.holds()) return 2;
      }
      return 0;
    }
    if (corner->parsed()) {
      const SquareMatrix m = matrix_from_json(load_json_file(matrix_path));
      json j = corner_to_json(is_corner_positive(m));
      j["command"] = "oracle corner";
      emit(j, out_path, text);
      return 0;
    }
    if (census_cmd->parsed()) {
      const Network net = network_from_json(load_json_file(net_path));
      json j = census_to_json(census(net));
      j["command"] = "oracle census";
      emit(j, out_path, text);
      return 0;
    }
    if (synth->parsed()) {
      const PatternSet ps = patterns_from_json(load_json_file(patterns_path));
      const MemoryKind mk = kind == "anti" ? MemoryKind::anti : MemoryKind::stable;
      const SquareMatrix w = synthesize(ps, mk);
      if (do_verify) {
        const Network net = Network::zero_threshold(w, ps.flavor());
        for (int i = 0; i < ps.count(); ++i) {
          const State& p = ps.patterns()[static_cast<size_t>(i)];
          const bool ok = mk == MemoryKind::stable ? is_stable_state(net, p)
                                                   : is_anti_stable_state(net, p);
          if (!ok)
            throw ValidationError("synth --verify: pattern " + std::to_string(i) +
                                  " is not stored as requested");
        }
      }
      emit(matrix_to_json(w), out_path, text);
      return 0;
    }
    if (augment_cmd->parsed()) {
      const Network net = network_from_json(load_json_file(net_path));
      const AugmentedNetwork aug = augment(net);
      if (do_verify) {
        const int cap = net.flavor() == Flavor::real ? 10 : 5;
        if (net.dim() + 1 <= cap) {
          const Census orig = census(net);
          Census restricted{net.flavor(), {}, {}, 0};
          // Clamped census: the dummy node is held fixed and its own update
          // condition exempt.
          const Census clamped = census_clamped(aug.net, aug.clamp);
          auto keep = [&](const std::vector<State>& in, std::vector<State>& out) {
            for (const State& v : in) out.emplace_back(v.begin(), v.end() - 1);
          };
          keep(clamped.stable, restricted.stable);
          keep(clamped.anti_stable, restricted.anti_stable);
          if (restricted.stable != orig.stable || restricted.anti_stable != orig.anti_stable)
            throw ValidationError("augment --verify: census mismatch after augmentation");
        } else {
          for (int s = 0; s < 100; ++s) {
            const State v = net.flavor() == Flavor::real
                                ? to_state(random_real_vertex(net.dim(), static_cast<std::uint64_t>(s)))
                                : to_state(random_complex_vertex(net.dim(), static_cast<std::uint64_t>(s)));
            State ev = v;
            ev.push_back(aug.clamp);
            for (int i = 0; i < net.dim(); ++i) {
              const cplx h0 = pre_activation(net, v, i);
              const cplx h1 = pre_activation(aug.net, ev, i);
              if (std::abs(h0 - h1) > 1e-9)
                throw ValidationError("augment --verify: pre-activation mismatch");
            }
          }
        }
      }
      emit(augmented_to_json(aug), out_path, text);
      return 0;
    }
    if (teval->parsed()) {
      const ToeplitzSpec spec = toeplitz_from_json(load_json_file(spec_path));
      const json vj = load_json_file(vector_path);
      double value, dense;
      if (spec.kind == ToeplitzSpec::Kind::real_symmetric) {
        const SpinVector x = to_spin(state_from_json(vj, Flavor::real));
        value = eval_toeplitz_real(spec, x);
        dense = eval_form(toeplitz_dense(spec), x);
      } else {
        const QSpinVector x = to_qspin(state_from_json(vj, Flavor::complex));
        value = eval_toeplitz_complex(spec, x);
        dense = eval_form(toeplitz_dense(spec), x).real();
      }
      if (std::abs(value - dense) > 1e-9)
        throw ValidationError("toeplitz eval: structured/dense mismatch");
      emit(json{{"command", "toeplitz eval"}, {"value", value}, {"dense", dense}},
           out_path, text);
      return 0;
    }
    if (texpand->parsed()) {
      const ToeplitzSpec spec = toeplitz_from_json(load_json_file(spec_path));
      emit(matrix_to_json(toeplitz_dense(spec)), out_path, text);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
