#pragma once

#include "hqf/augment.hpp"
#include "hqf/oracle.hpp"
#include "hqf/synthesis.hpp"
#include "hqf/toeplitz.hpp"

#include <json.hpp>

#include <string>

namespace hqf {

// Ordered so that serialized output is byte-stable.
using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix: {"n": int, "re": [[...]], "im": [[...]]}; "im" omitted means real.
json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const json& j);

// Vectors: real flavor is a plain array [1,-1,...]; complex flavor is
// {"re": [...], "im": [...]}.
json state_to_json(const State& v, Flavor flavor);
State state_from_json(const json& j, Flavor flavor);

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

// Network: {"flavor": ..., "W": <matrix>, "T": {"re": [...], "im": [...]}}.
json network_to_json(const Network& net);
Network network_from_json(const json& j);

json patterns_to_json(const PatternSet& ps);
PatternSet patterns_from_json(const json& j);

// Toeplitz spec: {"kind": "real"|"hermitian", "first_row": {"re": [...], "im": [...]}}.
json toeplitz_to_json(const ToeplitzSpec& spec);
ToeplitzSpec toeplitz_from_json(const json& j);

json slack_report_to_json(const SlackReport& r);
json extrema_to_json(const ExtremaReport& r);
json verdict_to_json(const TheoremVerdict& v);
json corner_to_json(const CornerReport& r);
json census_to_json(const Census& c);
json augmented_to_json(const AugmentedNetwork& a);

// One JSON record per line: a header, the per-step records, a trailer with
// the outcome and flip count.
std::string trajectory_to_jsonl(const Trajectory& t);

json load_json_file(const std::string& path);

}  // namespace hqf
