#pragma once

#include "hqf/network.hpp"

#include <random>

namespace hqf::testing {

inline double uniform(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline SquareMatrix random_real_matrix(int n, std::mt19937_64& rng) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = uniform(rng);
  return m;
}

inline SquareMatrix random_complex_matrix(int n, std::mt19937_64& rng) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = {uniform(rng), uniform(rng)};
  return m;
}

// Exactly symmetric; diagonal in [0,1] unless hollow.
inline SquareMatrix random_symmetric(int n, std::mt19937_64& rng, bool hollow = false) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = hollow ? 0.0 : uniform(rng, 0.0, 1.0);
    for (int j = i + 1; j < n; ++j) m.at(i, j) = m.at(j, i) = uniform(rng);
  }
  return m;
}

// Exactly Hermitian; real diagonal in [0,1] unless hollow.
inline SquareMatrix random_hermitian(int n, std::mt19937_64& rng, bool hollow = false) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = hollow ? 0.0 : uniform(rng, 0.0, 1.0);
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = {uniform(rng), uniform(rng)};
      m.at(j, i) = std::conj(m.at(i, j));
    }
  }
  return m;
}

// Symmetric matrices with entries drawn uniformly but possibly signed
// diagonal; for minimality tests the sign of the diagonal is irrelevant.
inline SquareMatrix random_symmetric_signed(int n, std::mt19937_64& rng) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = uniform(rng);
    for (int j = i + 1; j < n; ++j) m.at(i, j) = m.at(j, i) = uniform(rng);
  }
  return m;
}

inline SquareMatrix random_hermitian_signed(int n, std::mt19937_64& rng) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = uniform(rng);
    for (int j = i + 1; j < n; ++j) {
      m.at(i, j) = {uniform(rng), uniform(rng)};
      m.at(j, i) = std::conj(m.at(i, j));
    }
  }
  return m;
}

inline std::vector<cplx> random_real_thresholds(int n, std::mt19937_64& rng) {
  std::vector<cplx> t(static_cast<size_t>(n));
  for (auto& z : t) z = {uniform(rng), 0.0};
  return t;
}

inline std::vector<cplx> random_complex_thresholds(int n, std::mt19937_64& rng) {
  std::vector<cplx> t(static_cast<size_t>(n));
  for (auto& z : t) z = {uniform(rng), uniform(rng)};
  return t;
}

inline Network random_real_network(int n, std::mt19937_64& rng, bool hollow = true,
                                   bool with_thresholds = true) {
  SquareMatrix w = random_symmetric(n, rng, hollow);
  auto t = with_thresholds ? random_real_thresholds(n, rng)
                           : std::vector<cplx>(static_cast<size_t>(n), cplx{0.0, 0.0});
  return Network(std::move(w), std::move(t), Flavor::real);
}

inline Network random_complex_network(int n, std::mt19937_64& rng, bool hollow = true,
                                      bool with_thresholds = true) {
  SquareMatrix w = random_hermitian(n, rng, hollow);
  auto t = with_thresholds ? random_complex_thresholds(n, rng)
                           : std::vector<cplx>(static_cast<size_t>(n), cplx{0.0, 0.0});
  return Network(std::move(w), std::move(t), Flavor::complex);
}

}  // namespace hqf::testing
