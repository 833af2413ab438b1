#pragma once

#include "hqf/forms.hpp"

namespace hqf {

/// Patterns to be stored in an associative memory: mutually orthogonal
/// hypercube vectors, fewer than the dimension. Orthogonality is checked in
/// exact integer arithmetic when a weight matrix is synthesized.
class PatternSet {
 public:
  PatternSet(Flavor flavor, std::vector<std::vector<cplx>> patterns);

  static PatternSet from_real(const std::vector<SpinVector>& patterns);
  static PatternSet from_complex(const std::vector<QSpinVector>& patterns);

  Flavor flavor() const { return flavor_; }
  int dim() const { return static_cast<int>(patterns_.front().size()); }
  int count() const { return static_cast<int>(patterns_.size()); }
  const std::vector<std::vector<cplx>>& patterns() const { return patterns_; }

 private:
  Flavor flavor_;
  std::vector<std::vector<cplx>> patterns_;
};

struct PatternCheck {
  struct PairFailure {
    int j, k;
    cplx inner;
  };
  std::vector<PairFailure> failures;   // non-orthogonal pairs
  std::vector<double> self_inner;      // X_j' X_j per pattern (n real, 2n complex)
  bool all_orthogonal() const { return failures.empty(); }
};

PatternCheck check_patterns(const PatternSet& ps);

enum class MemoryKind { stable, anti };

// Hebbian-style outer-product rules. With S mutually orthogonal patterns and
// S < n they give W X_k = (n-S) X_k (real) and W X_k = (2n-2S) X_k (complex),
// so every stored pattern is strictly stable; the anti kind negates the rule
// and stores them as anti-stable states.
SquareMatrix synthesize_real(const PatternSet& ps, MemoryKind kind);
SquareMatrix synthesize_complex(const PatternSet& ps, MemoryKind kind);
SquareMatrix synthesize(const PatternSet& ps, MemoryKind kind);

// Sylvester Hadamard rows, n a power of two; rows are mutually orthogonal
// hypercube vectors.
std::vector<SpinVector> hadamard_rows(int n);

}  // namespace hqf
