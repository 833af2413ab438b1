#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqf/oracle.hpp"
#include "hqf/synthesis.hpp"

#include <cmath>

using namespace hqf;

namespace {

PatternSet hadamard_patterns(int n, int s) {
  const auto rows = hadamard_rows(n);
  return PatternSet::from_real({rows.begin(), rows.begin() + s});
}

PatternSet complex_hadamard_patterns(int n, int s) {
  // (1+j) times Hadamard rows: mutually orthogonal complex hypercube vectors.
  const auto rows = hadamard_rows(n);
  std::vector<QSpinVector> pats;
  for (int r = 0; r < s; ++r) {
    std::vector<cplx> p;
    for (int i = 0; i < n; ++i)
      p.push_back(cplx{1.0, 1.0} * static_cast<double>(rows[static_cast<size_t>(r)][i]));
    pats.emplace_back(std::move(p));
  }
  return PatternSet::from_complex(pats);
}

}  // namespace

TEST_CASE("hadamard rows are orthogonal hypercube vectors") {
  const auto rows = hadamard_rows(4);
  REQUIRE(rows.size() == 4);
  for (int j = 0; j < 4; ++j)
    for (int k = j; k < 4; ++k) {
      long long ip = 0;
      for (int i = 0; i < 4; ++i) ip += rows[static_cast<size_t>(j)][i] * rows[static_cast<size_t>(k)][i];
      CHECK(ip == (j == k ? 4 : 0));
    }
  CHECK_THROWS_AS(hadamard_rows(3), ValidationError);
}

TEST_CASE("check_patterns reports inner products") {
  const PatternCheck ok = check_patterns(hadamard_patterns(4, 2));
  CHECK(ok.all_orthogonal());
  CHECK(ok.self_inner == std::vector<double>{4.0, 4.0});

  const PatternSet dup = PatternSet::from_real({SpinVector({1, 1}), SpinVector({1, 1})});
  const PatternCheck bad = check_patterns(dup);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].j == 0);
  CHECK(bad.failures[0].k == 1);
  CHECK(bad.failures[0].inner == cplx{2.0, 0.0});

  const PatternCheck cplx_ok = check_patterns(complex_hadamard_patterns(4, 2));
  CHECK(cplx_ok.all_orthogonal());
  CHECK(cplx_ok.self_inner == std::vector<double>{8.0, 8.0});
}

TEST_CASE("single real pattern gives the outer-product rule") {
  const PatternSet ps = PatternSet::from_real({SpinVector({1, 1})});
  CHECK(synthesize_real(ps, MemoryKind::stable) == SquareMatrix(2, {0.0, 1.0, 1.0, 0.0}));
}

TEST_CASE("single complex pattern example") {
  const PatternSet ps =
      PatternSet::from_complex({QSpinVector({cplx{1.0, 1.0}, cplx{1.0, 1.0}})});
  CHECK(synthesize_complex(ps, MemoryKind::stable) == SquareMatrix(2, {0.0, 2.0, 2.0, 0.0}));
}

TEST_CASE("real Hadamard patterns: eigen identity and storage") {
  for (const MemoryKind kind : {MemoryKind::stable, MemoryKind::anti}) {
    const PatternSet ps = hadamard_patterns(4, 2);
    const SquareMatrix w = synthesize_real(ps, kind);
    CHECK(w.is_symmetric());
    CHECK(w.is_hollow());
    const double lambda = kind == MemoryKind::stable ? 2.0 : -2.0;  // n - S = 2
    const Network net = Network::zero_threshold(w, Flavor::real);
    for (const auto& p : ps.patterns()) {
      for (int i = 0; i < 4; ++i) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < 4; ++j) acc += w.at(i, j) * p[static_cast<size_t>(j)];
        CHECK(acc == lambda * p[static_cast<size_t>(i)]);
      }
      if (kind == MemoryKind::stable)
        CHECK(is_stable_state(net, p));
      else
        CHECK(is_anti_stable_state(net, p));
    }
  }
}

TEST_CASE("complex Hadamard patterns: eigen identity and storage") {
  for (const MemoryKind kind : {MemoryKind::stable, MemoryKind::anti}) {
    const PatternSet ps = complex_hadamard_patterns(4, 2);
    const SquareMatrix w = synthesize_complex(ps, kind);
    CHECK(w.is_hermitian());
    CHECK(w.is_hollow());
    const double lambda = kind == MemoryKind::stable ? 4.0 : -4.0;  // 2n - 2S = 4
    const Network net = Network::zero_threshold(w, Flavor::complex);
    for (const auto& p : ps.patterns()) {
      for (int i = 0; i < 4; ++i) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < 4; ++j) acc += w.at(i, j) * p[static_cast<size_t>(j)];
        CHECK(acc == lambda * p[static_cast<size_t>(i)]);
      }
      if (kind == MemoryKind::stable)
        CHECK(is_stable_state(net, p));
      else
        CHECK(is_anti_stable_state(net, p));
    }
  }
}

TEST_CASE("negation closure: -X is stored whenever X is") {
  const PatternSet ps = hadamard_patterns(8, 3);
  const Network net =
      Network::zero_threshold(synthesize_real(ps, MemoryKind::stable), Flavor::real);
  for (const auto& p : ps.patterns()) {
    State neg;
    for (const cplx& z : p) neg.push_back(-z);
    CHECK(is_stable_state(net, neg));
  }
}

TEST_CASE("rejections: non-orthogonal patterns and S >= n") {
  const PatternSet dup = PatternSet::from_real(
      {SpinVector({1, 1, 1, 1}), SpinVector({1, 1, 1, 1})});
  CHECK_THROWS_AS(synthesize_real(dup, MemoryKind::stable), ValidationError);
  const PatternSet full = hadamard_patterns(4, 4);
  CHECK_THROWS_AS(synthesize_real(full, MemoryKind::stable), ValidationError);
  try {
    synthesize_real(dup, MemoryKind::stable);
  } catch (const ValidationError& e) {
    // The offending pair is named.
    CHECK(std::string(e.what()).find("0 and 1") != std::string::npos);
  }
  CHECK_THROWS_AS(synthesize_complex(hadamard_patterns(4, 2), MemoryKind::stable),
                  ValidationError);
}

TEST_CASE("stable-memory matrix plus S*I is corner positive") {
  for (int s = 1; s <= 3; ++s) {
    const PatternSet ps = hadamard_patterns(4, s);
    SquareMatrix w = synthesize_real(ps, MemoryKind::stable);
    for (int i = 0; i < 4; ++i) w.at(i, i) += static_cast<double>(s);
    const CornerReport rep = is_corner_positive(w);
    CHECK(rep.corner_positive);
  }
}
