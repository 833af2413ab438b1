#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hqf {

using cplx = std::complex<double>;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sign with the tie convention sgn(0) = +1.
int sgn(double r);

// Complex signum, applied componentwise: csgn(a+jb) = sgn(a) + j*sgn(b).
cplx csgn(const cplx& z);

// Full-enumeration caps. Above these, callers must sample.
inline constexpr int kMaxRealEnumDim = 24;
inline constexpr int kMaxComplexEnumDim = 12;

/// A vertex of the real hypercube: entries in {-1, +1}.
class SpinVector {
 public:
  explicit SpinVector(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const SpinVector&) const = default;

 private:
  std::vector<int> entries_;
};

/// A vertex of the complex hypercube: entries in {1+j, 1-j, -1+j, -1-j}.
class QSpinVector {
 public:
  explicit QSpinVector(std::vector<cplx> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const cplx& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
  const std::vector<cplx>& entries() const { return entries_; }

  bool operator==(const QSpinVector&) const = default;

 private:
  std::vector<cplx> entries_;
};

// Complex hypercube alphabet, indexed by a base-4 digit:
// bit 1 of the digit flips the real sign, bit 0 flips the imaginary sign.
// 0 -> 1+j, 1 -> 1-j, 2 -> -1+j, 3 -> -1-j.
cplx quaternary_entry(int digit);

/// Streams the 2^n real vertices. Order is fixed: vertex index k in
/// [0, 2^n) maps bit i of k to entry i, with bit 0 -> +1 and bit 1 -> -1,
/// so index 0 is the all-(+1) vertex. Restartable at any index for
/// range-partitioned sweeps.
class RealVertexStream {
 public:
  explicit RealVertexStream(int n);
  RealVertexStream(int n, std::uint64_t start, std::uint64_t count);

  bool next(SpinVector& out);
  std::uint64_t total() const { return end_ - start_; }

 private:
  int n_;
  std::uint64_t cursor_, start_, end_;
};

/// Streams the 4^n complex vertices. Index k in [0, 4^n) is read in base 4,
/// digit i (least significant first) selecting entry i via quaternary_entry.
class ComplexVertexStream {
 public:
  explicit ComplexVertexStream(int n);
  ComplexVertexStream(int n, std::uint64_t start, std::uint64_t count);

  bool next(QSpinVector& out);
  std::uint64_t total() const { return end_ - start_; }

 private:
  int n_;
  std::uint64_t cursor_, start_, end_;
};

// Seeded, reproducible sampling.
SpinVector random_real_vertex(int n, std::uint64_t seed);
QSpinVector random_complex_vertex(int n, std::uint64_t seed);

// Dense complex state view shared by dynamics and the oracle.
std::vector<cplx> to_state(const SpinVector& v);
std::vector<cplx> to_state(const QSpinVector& v);
SpinVector to_spin(const std::vector<cplx>& s);
QSpinVector to_qspin(const std::vector<cplx>& s);

}  // namespace hqf
