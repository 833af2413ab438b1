#include "hqf/hypercube.hpp"

#include <cmath>
#include <random>
#include <string>

namespace hqf {

int sgn(double r) {
  if (!std::isfinite(r)) throw ValidationError("sgn: non-finite input");
  return r >= 0.0 ? 1 : -1;
}

cplx csgn(const cplx& z) {
  return {static_cast<double>(sgn(z.real())), static_cast<double>(sgn(z.imag()))};
}

namespace {

bool is_quaternary(const cplx& z) {
  return (z.real() == 1.0 || z.real() == -1.0) &&
         (z.imag() == 1.0 || z.imag() == -1.0);
}

}  // namespace

SpinVector::SpinVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("SpinVector: empty");
  for (int e : entries_)
    if (e != 1 && e != -1) throw ValidationError("SpinVector: entry not in {-1,+1}");
}

QSpinVector::QSpinVector(std::vector<cplx> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("QSpinVector: empty");
  for (const cplx& e : entries_)
    if (!is_quaternary(e))
      throw ValidationError("QSpinVector: entry not on the complex hypercube");
}

cplx quaternary_entry(int digit) {
  return {(digit & 2) ? -1.0 : 1.0, (digit & 1) ? -1.0 : 1.0};
}

RealVertexStream::RealVertexStream(int n) : RealVertexStream(n, 0, ~0ull) {}

RealVertexStream::RealVertexStream(int n, std::uint64_t start, std::uint64_t count)
    : n_(n) {
  if (n < 1 || n > kMaxRealEnumDim)
    throw ValidationError("RealVertexStream: n must be in [1," +
                          std::to_string(kMaxRealEnumDim) + "]");
  const std::uint64_t full = 1ull << n;
  start_ = start < full ? start : full;
  end_ = (count == ~0ull || start_ + count > full) ? full : start_ + count;
  cursor_ = start_;
}

bool RealVertexStream::next(SpinVector& out) {
  if (cursor_ >= end_) return false;
  std::vector<int> e(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) e[static_cast<size_t>(i)] = (cursor_ >> i & 1) ? -1 : 1;
  ++cursor_;
  out = SpinVector(std::move(e));
  return true;
}

ComplexVertexStream::ComplexVertexStream(int n) : ComplexVertexStream(n, 0, ~0ull) {}

ComplexVertexStream::ComplexVertexStream(int n, std::uint64_t start, std::uint64_t count)
    : n_(n) {
  if (n < 1 || n > kMaxComplexEnumDim)
    throw ValidationError("ComplexVertexStream: n must be in [1," +
                          std::to_string(kMaxComplexEnumDim) + "]");
  const std::uint64_t full = 1ull << (2 * n);
  start_ = start < full ? start : full;
  end_ = (count == ~0ull || start_ + count > full) ? full : start_ + count;
  cursor_ = start_;
}

bool ComplexVertexStream::next(QSpinVector& out) {
  if (cursor_ >= end_) return false;
  std::vector<cplx> e(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i)
    e[static_cast<size_t>(i)] = quaternary_entry(static_cast<int>(cursor_ >> (2 * i) & 3));
  ++cursor_;
  out = QSpinVector(std::move(e));
  return true;
}

SpinVector random_real_vertex(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_real_vertex: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = (rng() & 1) ? -1 : 1;
  return SpinVector(std::move(e));
}

QSpinVector random_complex_vertex(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_complex_vertex: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<cplx> e(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    e[static_cast<size_t>(i)] = quaternary_entry(static_cast<int>(rng() & 3));
  return QSpinVector(std::move(e));
}

std::vector<cplx> to_state(const SpinVector& v) {
  std::vector<cplx> s(static_cast<size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) s[static_cast<size_t>(i)] = {static_cast<double>(v[i]), 0.0};
  return s;
}

std::vector<cplx> to_state(const QSpinVector& v) { return v.entries(); }

SpinVector to_spin(const std::vector<cplx>& s) {
  std::vector<int> e(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].imag() != 0.0 || (s[i].real() != 1.0 && s[i].real() != -1.0))
      throw ValidationError("to_spin: entry not a real spin");
    e[i] = static_cast<int>(s[i].real());
  }
  return SpinVector(std::move(e));
}

QSpinVector to_qspin(const std::vector<cplx>& s) { return QSpinVector(s); }

}  // namespace hqf
