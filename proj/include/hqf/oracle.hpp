#pragma once

#include "hqf/dynamics.hpp"

#include <optional>

namespace hqf {

/// Exact global extrema of the (Hermitian-part) form over the full
/// hypercube, with every attaining vertex. Vertices are listed in
/// enumeration-index order, so the report is deterministic regardless of
/// how the sweep was partitioned.
struct ExtremaReport {
  Flavor flavor;
  double min_value, max_value;
  std::vector<State> argmins, argmaxes;
  std::uint64_t vertex_count;
};

ExtremaReport brute_force_extrema(const SquareMatrix& a, Flavor flavor, int threads = 1);

/// Every brute-force global minimizer of the form, pushed through the
/// first-order slack condition on the hollow reduction of E.
struct TheoremVerdict {
  Flavor flavor;
  int n;
  int minimizers_checked;
  struct Violation {
    State vertex;
    SlackReport report;
  };
  std::vector<Violation> violations;

  bool holds() const { return violations.empty(); }
};

TheoremVerdict verify_theorem(const SquareMatrix& e, Flavor flavor);

struct CornerReport {
  bool corner_positive;
  std::optional<SpinVector> witness;  // a vertex with a negative form value
  double witness_value = 0.0;
};

CornerReport is_corner_positive(const SquareMatrix& b);

/// Exhaustive classification of every hypercube vertex against the literal
/// stability predicates of the network.
struct Census {
  Flavor flavor;
  std::vector<State> stable, anti_stable;
  std::uint64_t vertex_count;
};

Census census(const Network& net);

/// Census with the last node held at the clamp value and its own update
/// condition exempt, as for the hard-clamped dummy of an augmented network.
/// (With corner k > 0 the dummy auto-satisfies the stable condition but can
/// never satisfy the anti-stable one, so structure preservation is stated in
/// this clamped sense.) States in the report include the clamp coordinate.
Census census_clamped(const Network& net, cplx clamp);

// Enumeration index of a vertex under the stream orders declared in
// hypercube.hpp.
std::uint64_t vertex_index(const State& v, Flavor flavor);

}  // namespace hqf
