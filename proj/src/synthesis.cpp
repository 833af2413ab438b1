#include "hqf/synthesis.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace hqf {

namespace {

bool valid_entry(Flavor flavor, const cplx& z) {
  if (flavor == Flavor::real)
    return z.imag() == 0.0 && (z.real() == 1.0 || z.real() == -1.0);
  return (z.real() == 1.0 || z.real() == -1.0) && (z.imag() == 1.0 || z.imag() == -1.0);
}

// Exact Gaussian-integer inner product x_j' x_k (left conjugated).
cplx exact_inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  long long re = 0, im = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const long long ar = std::llround(a[i].real()), ai = std::llround(a[i].imag());
    const long long br = std::llround(b[i].real()), bi = std::llround(b[i].imag());
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

void require_storable(const PatternSet& ps) {
  if (ps.count() >= ps.dim())
    throw ValidationError("synthesize: need S < n, got S=" + std::to_string(ps.count()) +
                          ", n=" + std::to_string(ps.dim()));
  const PatternCheck chk = check_patterns(ps);
  if (!chk.all_orthogonal()) {
    const auto& f = chk.failures.front();
    throw ValidationError("synthesize: patterns " + std::to_string(f.j) + " and " +
                          std::to_string(f.k) + " are not orthogonal (inner product " +
                          std::to_string(f.inner.real()) + "+" +
                          std::to_string(f.inner.imag()) + "j)");
  }
}

}  // namespace

PatternSet::PatternSet(Flavor flavor, std::vector<std::vector<cplx>> patterns)
    : flavor_(flavor), patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw ValidationError("PatternSet: no patterns");
  const size_t n = patterns_.front().size();
  if (n == 0) throw ValidationError("PatternSet: empty pattern");
  for (const auto& p : patterns_) {
    if (p.size() != n) throw ValidationError("PatternSet: mixed pattern dimensions");
    for (const cplx& z : p)
      if (!valid_entry(flavor_, z))
        throw ValidationError("PatternSet: pattern entry not on the hypercube");
  }
}

PatternSet PatternSet::from_real(const std::vector<SpinVector>& patterns) {
  std::vector<std::vector<cplx>> ps;
  ps.reserve(patterns.size());
  for (const auto& p : patterns) ps.push_back(to_state(p));
  return PatternSet(Flavor::real, std::move(ps));
}

PatternSet PatternSet::from_complex(const std::vector<QSpinVector>& patterns) {
  std::vector<std::vector<cplx>> ps;
  ps.reserve(patterns.size());
  for (const auto& p : patterns) ps.push_back(p.entries());
  return PatternSet(Flavor::complex, std::move(ps));
}

PatternCheck check_patterns(const PatternSet& ps) {
  PatternCheck chk;
  const auto& pats = ps.patterns();
  for (int j = 0; j < ps.count(); ++j) {
    chk.self_inner.push_back(
        exact_inner(pats[static_cast<size_t>(j)], pats[static_cast<size_t>(j)]).real());
    for (int k = j + 1; k < ps.count(); ++k) {
      const cplx ip = exact_inner(pats[static_cast<size_t>(j)], pats[static_cast<size_t>(k)]);
      if (ip != cplx{0.0, 0.0}) chk.failures.push_back({j, k, ip});
    }
  }
  return chk;
}

SquareMatrix synthesize_real(const PatternSet& ps, MemoryKind kind) {
  if (ps.flavor() != Flavor::real)
    throw ValidationError("synthesize_real: pattern set is not real");
  require_storable(ps);
  const int n = ps.dim();
  const double s = kind == MemoryKind::stable ? 1.0 : -1.0;
  SquareMatrix w(n);
  for (const auto& p : ps.patterns())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double term = p[static_cast<size_t>(i)].real() * p[static_cast<size_t>(j)].real();
        if (i == j) term -= 1.0;
        w.at(i, j) += s * term;
      }
  return w;
}

SquareMatrix synthesize_complex(const PatternSet& ps, MemoryKind kind) {
  if (ps.flavor() != Flavor::complex)
    throw ValidationError("synthesize_complex: pattern set is not complex");
  require_storable(ps);
  const int n = ps.dim();
  const double s = kind == MemoryKind::stable ? 1.0 : -1.0;
  SquareMatrix w(n);
  for (const auto& p : ps.patterns())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx term = p[static_cast<size_t>(i)] * std::conj(p[static_cast<size_t>(j)]);
        if (i == j) term -= 2.0;
        w.at(i, j) += s * term;
      }
  return w;
}

SquareMatrix synthesize(const PatternSet& ps, MemoryKind kind) {
  return ps.flavor() == Flavor::real ? synthesize_real(ps, kind)
                                     : synthesize_complex(ps, kind);
}

std::vector<SpinVector> hadamard_rows(int n) {
  if (n < 1 || (n & (n - 1)) != 0)
    throw ValidationError("hadamard_rows: n must be a power of two");
  // Sylvester: H(i, j) = (-1)^popcount(i & j).
  std::vector<SpinVector> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      r[static_cast<size_t>(j)] =
          (std::popcount(static_cast<unsigned>(i & j)) & 1) ? -1 : 1;
    rows.emplace_back(std::move(r));
  }
  return rows;
}

}  // namespace hqf
