#include "hqf/network.hpp"

#include <cmath>

namespace hqf {

Network::Network(SquareMatrix w, std::vector<cplx> t, Flavor flavor)
    : w_(std::move(w)), t_(std::move(t)), flavor_(flavor), coupling_(1) {
  if (static_cast<int>(t_.size()) != w_.dim())
    throw ValidationError("Network: threshold length does not match W");
  for (const cplx& z : t_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("Network: non-finite threshold");
  if (flavor_ == Flavor::real) {
    if (!w_.is_real()) throw ValidationError("Network: real flavor requires real W");
    if (!w_.is_symmetric()) throw ValidationError("Network: W must be symmetric");
    for (const cplx& z : t_)
      if (z.imag() != 0.0)
        throw ValidationError("Network: real flavor requires real thresholds");
  } else {
    if (!w_.is_hermitian()) throw ValidationError("Network: W must be Hermitian");
  }
  if (!w_.has_nonnegative_diagonal())
    throw ValidationError("Network: W must have a nonnegative diagonal");
  HollowReduction hr = hollow_reduce(w_, flavor_);
  coupling_ = std::move(hr.c);
  coupling_offset_ = hr.offset;
}

Network Network::zero_threshold(SquareMatrix w, Flavor flavor) {
  std::vector<cplx> t(static_cast<size_t>(w.dim()), cplx{0.0, 0.0});
  return Network(std::move(w), std::move(t), flavor);
}

}  // namespace hqf
