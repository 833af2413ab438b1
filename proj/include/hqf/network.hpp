#pragma once

#include "hqf/forms.hpp"

namespace hqf {

/// N(W, T): weight matrix plus threshold vector. Real flavor requires a real
/// symmetric W with nonnegative diagonal and real thresholds; complex flavor
/// a Hermitian W with nonnegative diagonal. The hollow reduction of W is
/// cached because the dynamics run on it.
class Network {
 public:
  Network(SquareMatrix w, std::vector<cplx> t, Flavor flavor);

  static Network zero_threshold(SquareMatrix w, Flavor flavor);

  const SquareMatrix& weights() const { return w_; }
  const std::vector<cplx>& thresholds() const { return t_; }
  Flavor flavor() const { return flavor_; }
  int dim() const { return w_.dim(); }

  const SquareMatrix& coupling() const { return coupling_; }
  double coupling_offset() const { return coupling_offset_; }

 private:
  SquareMatrix w_;
  std::vector<cplx> t_;
  Flavor flavor_;
  SquareMatrix coupling_;
  double coupling_offset_;
};

}  // namespace hqf
