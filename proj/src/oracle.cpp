#include "hqf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

namespace hqf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double coupling_scale(const SquareMatrix& c) {
  double s = 1.0;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j) s += std::abs(c.at(i, j));
  return s;
}

// Running values drift by accumulated roundoff over millions of single-flip
// updates; anything this close to the running optimum is re-evaluated
// directly before it can enter the report.
double candidate_slack(const SquareMatrix& c) { return 1e-6 * coupling_scale(c); }

struct RangeExtrema {
  double min_f = kInf, max_f = -kInf;
  std::vector<std::uint64_t> argmin, argmax;  // vertex indices
};

// Real sweep over vertex indices [start, end) in Gray-code visit order:
// step k flips bit ctz(k+1), so the visited vertex for counter k has index
// k ^ (k >> 1). The form value and y = Cx are maintained incrementally
// (a flip of x_b changes x^T C x by -4 x_b y_b); candidates near the
// running extrema are confirmed with a direct evaluation whose summation
// order is identical for x and -x, so tied vertices are collected exactly.
RangeExtrema scan_real(const SquareMatrix& c, std::uint64_t start, std::uint64_t end,
                       double slack) {
  const int n = c.dim();
  RangeExtrema r;
  std::uint64_t g = start ^ (start >> 1);
  std::vector<double> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = (g >> i & 1) ? -1.0 : 1.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += c.at(i, j).real() * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc;
  }
  double f_inc = 0.0;
  for (int i = 0; i < n; ++i) f_inc += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];

  auto direct = [&]() {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        acc += 2.0 * c.at(i, j).real() * x[static_cast<size_t>(i)] * x[static_cast<size_t>(j)];
    return acc;
  };

  for (std::uint64_t k = start; k < end; ++k) {
    if (f_inc <= r.min_f + slack) {
      const double f = direct();
      if (f < r.min_f) {
        r.min_f = f;
        r.argmin.assign(1, g);
      } else if (f == r.min_f) {
        r.argmin.push_back(g);
      }
    }
    if (f_inc >= r.max_f - slack) {
      const double f = direct();
      if (f > r.max_f) {
        r.max_f = f;
        r.argmax.assign(1, g);
      } else if (f == r.max_f) {
        r.argmax.push_back(g);
      }
    }
    if (k + 1 >= end) break;
    const int b = std::countr_zero(k + 1);
    f_inc -= 4.0 * x[static_cast<size_t>(b)] * y[static_cast<size_t>(b)];
    for (int j = 0; j < n; ++j)
      y[static_cast<size_t>(j)] -= 2.0 * x[static_cast<size_t>(b)] * c.at(j, b).real();
    x[static_cast<size_t>(b)] = -x[static_cast<size_t>(b)];
    g ^= 1ull << b;
  }
  return r;
}

// Complex sweep over vertex indices [start, end) in index order, as a base-4
// odometer; each digit change updates y = Cx and the running form value
// (a change delta in x_i moves x' C x by 2 Re(conj(delta) y_i)).
RangeExtrema scan_complex(const SquareMatrix& c, std::uint64_t start, std::uint64_t end,
                          double slack) {
  const int n = c.dim();
  RangeExtrema r;
  std::vector<int> dig(static_cast<size_t>(n));
  std::vector<cplx> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    dig[static_cast<size_t>(i)] = static_cast<int>(start >> (2 * i) & 3);
    x[static_cast<size_t>(i)] = quaternary_entry(dig[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < n; ++i) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) acc += c.at(i, j) * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc;
  }
  double f_inc = 0.0;
  for (int i = 0; i < n; ++i)
    f_inc += (std::conj(x[static_cast<size_t>(i)]) * y[static_cast<size_t>(i)]).real();

  auto direct = [&]() {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        acc += 2.0 *
               (std::conj(x[static_cast<size_t>(i)]) * c.at(i, j) * x[static_cast<size_t>(j)])
                   .real();
    return acc;
  };

  for (std::uint64_t k = start; k < end; ++k) {
    if (f_inc <= r.min_f + slack) {
      const double f = direct();
      if (f < r.min_f) {
        r.min_f = f;
        r.argmin.assign(1, k);
      } else if (f == r.min_f) {
        r.argmin.push_back(k);
      }
    }
    if (f_inc >= r.max_f - slack) {
      const double f = direct();
      if (f > r.max_f) {
        r.max_f = f;
        r.argmax.assign(1, k);
      } else if (f == r.max_f) {
        r.argmax.push_back(k);
      }
    }
    if (k + 1 >= end) break;
    for (int i = 0; i < n; ++i) {
      const int old = dig[static_cast<size_t>(i)];
      const int nw = (old + 1) & 3;
      dig[static_cast<size_t>(i)] = nw;
      const cplx delta = quaternary_entry(nw) - x[static_cast<size_t>(i)];
      f_inc += 2.0 * (std::conj(delta) * y[static_cast<size_t>(i)]).real();
      for (int j = 0; j < n; ++j) y[static_cast<size_t>(j)] += c.at(j, i) * delta;
      x[static_cast<size_t>(i)] = quaternary_entry(nw);
      if (old != 3) break;  // no carry
    }
  }
  return r;
}

State real_state_of(std::uint64_t index, int n) {
  State s(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    s[static_cast<size_t>(i)] = {(index >> i & 1) ? -1.0 : 1.0, 0.0};
  return s;
}

State complex_state_of(std::uint64_t index, int n) {
  State s(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    s[static_cast<size_t>(i)] = quaternary_entry(static_cast<int>(index >> (2 * i) & 3));
  return s;
}

void check_cap(int n, Flavor flavor, const char* what) {
  const int cap = flavor == Flavor::real ? kMaxRealEnumDim : kMaxComplexEnumDim;
  if (n > cap)
    throw ValidationError(std::string(what) + ": dimension " + std::to_string(n) +
                          " exceeds the enumeration cap " + std::to_string(cap));
}

}  // namespace

std::uint64_t vertex_index(const State& v, Flavor flavor) {
  std::uint64_t idx = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (flavor == Flavor::real) {
      if (v[i].real() < 0.0) idx |= 1ull << i;
    } else {
      const int digit = (v[i].real() < 0.0 ? 2 : 0) | (v[i].imag() < 0.0 ? 1 : 0);
      idx |= static_cast<std::uint64_t>(digit) << (2 * i);
    }
  }
  return idx;
}

ExtremaReport brute_force_extrema(const SquareMatrix& a, Flavor flavor, int threads) {
  const int n = a.dim();
  check_cap(n, flavor, "brute_force_extrema");
  const HollowReduction hr = hollow_reduce(a, flavor);
  const double slack = candidate_slack(hr.c);
  const std::uint64_t total =
      flavor == Flavor::real ? (1ull << n) : (1ull << (2 * n));

  if (threads < 1) threads = 1;
  const std::uint64_t min_chunk = 1ull << 12;
  if (static_cast<std::uint64_t>(threads) > total / min_chunk)
    threads = static_cast<int>(std::max<std::uint64_t>(1, total / min_chunk));

  std::vector<RangeExtrema> parts(static_cast<size_t>(threads));
  auto worker = [&](int t) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(t) /
                             static_cast<std::uint64_t>(threads);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) /
                             static_cast<std::uint64_t>(threads);
    parts[static_cast<size_t>(t)] = flavor == Flavor::real
                                        ? scan_real(hr.c, lo, hi, slack)
                                        : scan_complex(hr.c, lo, hi, slack);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  double min_f = kInf, max_f = -kInf;
  for (const auto& p : parts) {
    min_f = std::min(min_f, p.min_f);
    max_f = std::max(max_f, p.max_f);
  }
  std::vector<std::uint64_t> mins, maxs;
  for (const auto& p : parts) {
    if (p.min_f == min_f) mins.insert(mins.end(), p.argmin.begin(), p.argmin.end());
    if (p.max_f == max_f) maxs.insert(maxs.end(), p.argmax.begin(), p.argmax.end());
  }
  std::sort(mins.begin(), mins.end());
  std::sort(maxs.begin(), maxs.end());

  ExtremaReport rep{flavor, hr.offset + min_f, hr.offset + max_f, {}, {}, total};
  rep.argmins.reserve(mins.size());
  rep.argmaxes.reserve(maxs.size());
  for (std::uint64_t idx : mins)
    rep.argmins.push_back(flavor == Flavor::real ? real_state_of(idx, n)
                                                 : complex_state_of(idx, n));
  for (std::uint64_t idx : maxs)
    rep.argmaxes.push_back(flavor == Flavor::real ? real_state_of(idx, n)
                                                  : complex_state_of(idx, n));
  return rep;
}

TheoremVerdict verify_theorem(const SquareMatrix& e, Flavor flavor) {
  if (flavor == Flavor::complex && !e.is_hermitian())
    throw ValidationError("verify_theorem: complex flavor requires a Hermitian matrix");
  const HollowReduction hr = hollow_reduce(e, flavor);
  const ExtremaReport rep = brute_force_extrema(e, flavor);
  TheoremVerdict verdict{flavor, e.dim(), static_cast<int>(rep.argmins.size()), {}};
  for (const State& u : rep.argmins) {
    const SlackReport sr = flavor == Flavor::real
                               ? minimality_slack(hr.c, to_spin(u))
                               : minimality_slack(hr.c, to_qspin(u));
    if (!sr.all_satisfied) verdict.violations.push_back({u, sr});
  }
  return verdict;
}

CornerReport is_corner_positive(const SquareMatrix& b) {
  if (!b.is_real()) throw ValidationError("is_corner_positive: matrix must be real");
  const int n = b.dim();
  check_cap(n, Flavor::real, "is_corner_positive");
  const HollowReduction hr = hollow_reduce(b, Flavor::real);
  const double slack = candidate_slack(hr.c);
  const std::uint64_t total = 1ull << n;

  // Gray-code walk as in scan_real, stopping at the first confirmed
  // negative value of the full form x^T B x.
  std::vector<double> x(static_cast<size_t>(n), 1.0), y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += hr.c.at(i, j).real();
    y[static_cast<size_t>(i)] = acc;
  }
  double f_inc = 0.0;
  for (int i = 0; i < n; ++i) f_inc += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];

  for (std::uint64_t k = 0; k < total; ++k) {
    if (hr.offset + f_inc < slack) {
      std::vector<int> sv(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        sv[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] > 0 ? 1 : -1;
      const SpinVector witness(sv);
      const double value = eval_form(b, witness);
      if (value < 0.0) return {false, witness, value};
    }
    if (k + 1 >= total) break;
    const int bix = std::countr_zero(k + 1);
    f_inc -= 4.0 * x[static_cast<size_t>(bix)] * y[static_cast<size_t>(bix)];
    for (int j = 0; j < n; ++j)
      y[static_cast<size_t>(j)] -= 2.0 * x[static_cast<size_t>(bix)] * hr.c.at(j, bix).real();
    x[static_cast<size_t>(bix)] = -x[static_cast<size_t>(bix)];
  }
  return {true, std::nullopt, 0.0};
}

Census census(const Network& net) {
  const int n = net.dim();
  check_cap(n, net.flavor(), "census");
  const std::uint64_t total =
      net.flavor() == Flavor::real ? (1ull << n) : (1ull << (2 * n));
  Census out{net.flavor(), {}, {}, total};
  for (std::uint64_t k = 0; k < total; ++k) {
    const State v = net.flavor() == Flavor::real ? real_state_of(k, n)
                                                 : complex_state_of(k, n);
    if (is_stable_state(net, v)) out.stable.push_back(v);
    if (is_anti_stable_state(net, v)) out.anti_stable.push_back(v);
  }
  return out;
}

Census census_clamped(const Network& net, cplx clamp) {
  const int n = net.dim();
  if (n < 1) throw ValidationError("census_clamped: empty network");
  const int free = n - 1;
  check_cap(free, net.flavor(), "census_clamped");
  const std::uint64_t total =
      net.flavor() == Flavor::real ? (1ull << free) : (1ull << (2 * free));
  Census out{net.flavor(), {}, {}, total};
  for (std::uint64_t k = 0; k < total; ++k) {
    State v = net.flavor() == Flavor::real ? real_state_of(k, free)
                                           : complex_state_of(k, free);
    v.push_back(clamp);
    if (is_stable_state(net, v, free)) out.stable.push_back(v);
    if (is_anti_stable_state(net, v, free)) out.anti_stable.push_back(v);
  }
  return out;
}

}  // namespace hqf
