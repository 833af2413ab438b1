#include "hqf/augment.hpp"

#include <cmath>

namespace hqf {

namespace {

SpinVector with_last(const SpinVector& v, int last) {
  std::vector<int> e = v.entries();
  e.push_back(last);
  return SpinVector(std::move(e));
}

}  // namespace

std::vector<cplx> solve_dummy_weights(const std::vector<cplx>& t) {
  std::vector<cplx> s(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    const double a = t[i].real(), b = t[i].imag();
    const cplx si{(a + b) / 2.0, (b - a) / 2.0};
    const cplx back = si * cplx{1.0, 1.0};
    if (std::abs(back - t[i]) > 1e-9 * (1.0 + std::abs(t[i])))
      throw ValidationError("solve_dummy_weights: (1+j)S != T");
    s[i] = si;
  }
  return s;
}

AugmentedNetwork augment(const Network& net) {
  const int n = net.dim();
  SquareMatrix wt(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) wt.at(i, j) = net.weights().at(i, j);

  std::vector<cplx> dummy;
  double k = 1.0;
  if (net.flavor() == Flavor::real) {
    dummy = net.thresholds();
    for (const cplx& ti : net.thresholds()) k += std::abs(ti.real());
    for (int i = 0; i < n; ++i) {
      wt.at(i, n) = -net.thresholds()[static_cast<size_t>(i)];
      wt.at(n, i) = -net.thresholds()[static_cast<size_t>(i)];
    }
  } else {
    dummy = solve_dummy_weights(net.thresholds());
    for (const cplx& ti : net.thresholds())
      k += std::abs(ti.real()) + std::abs(ti.imag());
    for (int i = 0; i < n; ++i) {
      wt.at(i, n) = -dummy[static_cast<size_t>(i)];
      wt.at(n, i) = -std::conj(dummy[static_cast<size_t>(i)]);
    }
  }
  wt.at(n, n) = k;

  const cplx clamp = net.flavor() == Flavor::real ? cplx{1.0, 0.0} : cplx{1.0, 1.0};
  return {Network::zero_threshold(std::move(wt), net.flavor()), k, std::move(dummy), clamp};
}

AugmentedNetwork augment_real(const SquareMatrix& w, const std::vector<double>& t) {
  std::vector<cplx> tc(t.size());
  for (size_t i = 0; i < t.size(); ++i) tc[i] = {t[i], 0.0};
  return augment(Network(w, std::move(tc), Flavor::real));
}

AugmentedNetwork augment_complex(const SquareMatrix& w, const std::vector<cplx>& t) {
  return augment(Network(w, t, Flavor::complex));
}

SpinVector embed_state(const SpinVector& v) { return with_last(v, 1); }

QSpinVector embed_state(const QSpinVector& v) {
  std::vector<cplx> e = v.entries();
  e.emplace_back(1.0, 1.0);
  return QSpinVector(std::move(e));
}

SpinVector project_state(const SpinVector& v) {
  if (v.size() < 2 || v[v.size() - 1] != 1)
    throw ValidationError("project_state: last coordinate is not the clamp value");
  std::vector<int> e(v.entries().begin(), v.entries().end() - 1);
  return SpinVector(std::move(e));
}

QSpinVector project_state(const QSpinVector& v) {
  if (v.size() < 2 || v[v.size() - 1] != cplx{1.0, 1.0})
    throw ValidationError("project_state: last coordinate is not the clamp value");
  std::vector<cplx> e(v.entries().begin(), v.entries().end() - 1);
  return QSpinVector(std::move(e));
}

}  // namespace hqf
