#include "hqf/io.hpp"

#include <fstream>
#include <sstream>

namespace hqf {

namespace {

std::vector<double> number_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) throw ParseError(what + ": expected numeric entries");
    out.push_back(e.get<double>());
  }
  return out;
}

// {"re": [...], "im": [...]} with "im" optional.
std::vector<cplx> complex_array(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("re"))
    throw ParseError(what + ": expected {\"re\": [...], \"im\": [...]}");
  const std::vector<double> re = number_array(j.at("re"), what + ".re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) {
    im = number_array(j.at("im"), what + ".im");
    if (im.size() != re.size()) throw ParseError(what + ": re/im length mismatch");
  }
  std::vector<cplx> out(re.size());
  for (size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

json complex_array_json(const std::vector<cplx>& v) {
  json re = json::array(), im = json::array();
  for (const cplx& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json plane_json(const SquareMatrix& m, bool imag) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(imag ? m.at(i, j).imag() : m.at(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string flavor_name(Flavor f) { return f == Flavor::real ? "real" : "complex"; }

Flavor flavor_from_name(const std::string& s) {
  if (s == "real") return Flavor::real;
  if (s == "complex") return Flavor::complex;
  throw ParseError("unknown flavor \"" + s + "\"");
}

json matrix_to_json(const SquareMatrix& m) {
  json j{{"n", m.dim()}, {"re", plane_json(m, false)}};
  if (!m.is_real()) j["im"] = plane_json(m, true);
  return j;
}

SquareMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re"))
    throw ParseError("matrix: expected {\"n\": ..., \"re\": [[...]]}");
  if (!j.at("n").is_number_integer()) throw ParseError("matrix: n must be an integer");
  const int n = j.at("n").get<int>();
  if (n < 1) throw ParseError("matrix: n must be >= 1");
  auto read_plane = [&](const json& p, const std::string& what) {
    if (!p.is_array() || static_cast<int>(p.size()) != n)
      throw ParseError("matrix: " + what + " must have " + std::to_string(n) + " rows");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (const auto& row : p) {
      const std::vector<double> r = number_array(row, "matrix." + what + " row");
      if (static_cast<int>(r.size()) != n) throw ParseError("matrix: " + what + " is not square");
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  };
  const std::vector<double> re = read_plane(j.at("re"), "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = read_plane(j.at("im"), "im");
  std::vector<cplx> a(re.size());
  for (size_t i = 0; i < re.size(); ++i) a[i] = {re[i], im[i]};
  try {
    return SquareMatrix(n, std::move(a));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

json state_to_json(const State& v, Flavor flavor) {
  if (flavor == Flavor::real) {
    json out = json::array();
    for (const cplx& z : v) out.push_back(static_cast<int>(z.real()));
    return out;
  }
  return complex_array_json(v);
}

State state_from_json(const json& j, Flavor flavor) {
  if (flavor == Flavor::real) {
    const std::vector<double> vals = number_array(j, "vector");
    State out(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) out[i] = {vals[i], 0.0};
    return out;
  }
  return complex_array(j, "vector");
}

json network_to_json(const Network& net) {
  json t{{"re", json::array()}};
  bool any_imag = false;
  json im = json::array();
  for (const cplx& z : net.thresholds()) {
    t["re"].push_back(z.real());
    im.push_back(z.imag());
    if (z.imag() != 0.0) any_imag = true;
  }
  if (any_imag) t["im"] = std::move(im);
  return json{{"flavor", flavor_name(net.flavor())},
              {"W", matrix_to_json(net.weights())},
              {"T", std::move(t)}};
}

Network network_from_json(const json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j.contains("W"))
    throw ParseError("network: expected {\"flavor\": ..., \"W\": ..., \"T\": ...}");
  const Flavor flavor = flavor_from_name(j.at("flavor").get<std::string>());
  SquareMatrix w = matrix_from_json(j.at("W"));
  std::vector<cplx> t(static_cast<size_t>(w.dim()), cplx{0.0, 0.0});
  if (j.contains("T")) t = complex_array(j.at("T"), "network.T");
  // Contract violations (asymmetry, negative diagonal, ...) surface as
  // ValidationError so the CLI maps them to exit code 2, not a parse error.
  return Network(std::move(w), std::move(t), flavor);
}

json patterns_to_json(const PatternSet& ps) {
  json arr = json::array();
  for (const auto& p : ps.patterns()) arr.push_back(state_to_json(p, ps.flavor()));
  return json{{"flavor", flavor_name(ps.flavor())}, {"patterns", std::move(arr)}};
}

PatternSet patterns_from_json(const json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j.contains("patterns"))
    throw ParseError("patterns: expected {\"flavor\": ..., \"patterns\": [...]}");
  const Flavor flavor = flavor_from_name(j.at("flavor").get<std::string>());
  if (!j.at("patterns").is_array()) throw ParseError("patterns: \"patterns\" must be an array");
  std::vector<State> pats;
  for (const auto& p : j.at("patterns")) pats.push_back(state_from_json(p, flavor));
  try {
    return PatternSet(flavor, std::move(pats));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("patterns: ") + e.what());
  }
}

json toeplitz_to_json(const ToeplitzSpec& spec) {
  return json{{"kind", spec.kind == ToeplitzSpec::Kind::real_symmetric ? "real" : "hermitian"},
              {"first_row", complex_array_json(spec.first_row)}};
}

ToeplitzSpec toeplitz_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("first_row"))
    throw ParseError("toeplitz: expected {\"kind\": ..., \"first_row\": ...}");
  const std::string kind = j.at("kind").get<std::string>();
  ToeplitzSpec::Kind k;
  if (kind == "real")
    k = ToeplitzSpec::Kind::real_symmetric;
  else if (kind == "hermitian")
    k = ToeplitzSpec::Kind::hermitian;
  else
    throw ParseError("toeplitz: unknown kind \"" + kind + "\"");
  try {
    return ToeplitzSpec(k, complex_array(j.at("first_row"), "toeplitz.first_row"));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("toeplitz: ") + e.what());
  }
}

json slack_report_to_json(const SlackReport& r) {
  json j{{"flavor", flavor_name(r.flavor)}, {"slack_re", r.slack_re}};
  if (r.flavor == Flavor::complex) j["slack_im"] = r.slack_im;
  j["all_satisfied"] = r.all_satisfied;
  j["tie_indices"] = r.tie_indices;
  return j;
}

json extrema_to_json(const ExtremaReport& r) {
  json mins = json::array(), maxs = json::array();
  for (const auto& v : r.argmins) mins.push_back(state_to_json(v, r.flavor));
  for (const auto& v : r.argmaxes) maxs.push_back(state_to_json(v, r.flavor));
  return json{{"flavor", flavor_name(r.flavor)}, {"min_value", r.min_value},
              {"max_value", r.max_value},       {"argmins", std::move(mins)},
              {"argmaxes", std::move(maxs)},    {"vertex_count", r.vertex_count}};
}

json verdict_to_json(const TheoremVerdict& v) {
  json viol = json::array();
  for (const auto& x : v.violations)
    viol.push_back(json{{"vertex", state_to_json(x.vertex, v.flavor)},
                        {"slack", slack_report_to_json(x.report)}});
  return json{{"flavor", flavor_name(v.flavor)},
              {"n", v.n},
              {"minimizers_checked", v.minimizers_checked},
              {"holds", v.holds()},
              {"violations", std::move(viol)}};
}

json corner_to_json(const CornerReport& r) {
  json j{{"corner_positive", r.corner_positive}};
  if (r.witness) {
    j["witness"] = state_to_json(to_state(*r.witness), Flavor::real);
    j["witness_value"] = r.witness_value;
  }
  return j;
}

json census_to_json(const Census& c) {
  json st = json::array(), anti = json::array();
  for (const auto& v : c.stable) st.push_back(state_to_json(v, c.flavor));
  for (const auto& v : c.anti_stable) anti.push_back(state_to_json(v, c.flavor));
  return json{{"flavor", flavor_name(c.flavor)},
              {"vertex_count", c.vertex_count},
              {"stable", std::move(st)},
              {"anti_stable", std::move(anti)}};
}

json augmented_to_json(const AugmentedNetwork& a) {
  return json{{"network", network_to_json(a.net)},
              {"k", a.corner},
              {"dummy_weights", complex_array_json(a.dummy_weights)},
              {"clamp", json{{"re", a.clamp.real()}, {"im", a.clamp.imag()}}}};
}

std::string trajectory_to_jsonl(const Trajectory& t) {
  std::ostringstream out;
  out << json{{"type", "header"},
              {"flavor", flavor_name(t.flavor)},
              {"initial", state_to_json(t.initial, t.flavor)},
              {"order", t.order == UpdateOrder::cyclic ? "cyclic" : "random"},
              {"seed", t.seed}}
             .dump()
      << '\n';
  for (const auto& s : t.steps)
    out << json{{"type", "step"},
                {"step", s.step},
                {"node", s.node},
                {"state", state_to_json(s.state, t.flavor)},
                {"energy", s.energy}}
               .dump()
        << '\n';
  const char* outcome = t.outcome == Outcome::fixed_point    ? "fixed_point"
                        : t.outcome == Outcome::two_cycle    ? "two_cycle"
                                                             : "budget_exhausted";
  out << json{{"type", "outcome"}, {"outcome", outcome}, {"flips", t.flips}}.dump() << '\n';
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace hqf
