#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqf/hypercube.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>

using namespace hqf;

TEST_CASE("sgn follows the sign(0)=+1 convention") {
  CHECK(sgn(3.5) == 1);
  CHECK(sgn(0.0) == 1);
  CHECK(sgn(-0.0) == 1);
  CHECK(sgn(-2.0) == -1);
  CHECK_THROWS_AS(sgn(std::numeric_limits<double>::quiet_NaN()), ValidationError);
  CHECK_THROWS_AS(sgn(std::numeric_limits<double>::infinity()), ValidationError);
}

TEST_CASE("csgn is the componentwise signum") {
  CHECK(csgn({2.0, -3.0}) == cplx{1.0, -1.0});
  CHECK(csgn({0.0, 0.0}) == cplx{1.0, 1.0});
  CHECK(csgn({-0.5, 0.0}) == cplx{-1.0, 1.0});
  CHECK_THROWS_AS(csgn({std::numeric_limits<double>::infinity(), 0.0}), ValidationError);
}

TEST_CASE("sgn properties on random reals") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = dist(rng);
    const int s = sgn(r);
    CHECK((s == 1 || s == -1));
    CHECK(r * s == std::abs(r));
    const cplx z{dist(rng), dist(rng)};
    const cplx cs = csgn(z);
    CHECK(cs == cplx(sgn(z.real()), sgn(z.imag())));
    CHECK(z.real() * cs.real() == std::abs(z.real()));
    CHECK(z.imag() * cs.imag() == std::abs(z.imag()));
  }
}

TEST_CASE("spin vector validation") {
  CHECK_THROWS_AS(SpinVector({}), ValidationError);
  CHECK_THROWS_AS(SpinVector({1, 0, -1}), ValidationError);
  CHECK_THROWS_AS(QSpinVector({cplx{1.0, 0.0}}), ValidationError);
  const QSpinVector q({cplx{1.0, -1.0}, cplx{-1.0, 1.0}});
  for (int i = 0; i < q.size(); ++i) CHECK(std::abs(q[i]) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("real enumeration: counts, first vertices, uniqueness") {
  RealVertexStream s1(1);
  SpinVector v({1});
  REQUIRE(s1.next(v));
  CHECK(v == SpinVector({1}));
  REQUIRE(s1.next(v));
  CHECK(v == SpinVector({-1}));
  CHECK_FALSE(s1.next(v));

  RealVertexStream s2(2);
  int count2 = 0;
  while (s2.next(v)) ++count2;
  CHECK(count2 == 4);

  RealVertexStream s10(10);
  std::set<std::vector<int>> seen;
  while (s10.next(v)) seen.insert(v.entries());
  CHECK(seen.size() == 1024);

  CHECK_THROWS_AS(RealVertexStream(25), ValidationError);
  CHECK_THROWS_AS(RealVertexStream(0), ValidationError);
}

TEST_CASE("complex enumeration: counts and uniqueness") {
  ComplexVertexStream s1(1);
  QSpinVector q({cplx{1.0, 1.0}});
  std::set<std::pair<double, double>> alphabet;
  while (s1.next(q)) alphabet.insert({q[0].real(), q[0].imag()});
  CHECK(alphabet.size() == 4);

  ComplexVertexStream s2(2);
  int count2 = 0;
  while (s2.next(q)) ++count2;
  CHECK(count2 == 16);

  ComplexVertexStream s6(6);
  std::set<std::vector<std::pair<double, double>>> seen;
  while (s6.next(q)) {
    std::vector<std::pair<double, double>> key;
    for (const cplx& z : q.entries()) key.emplace_back(z.real(), z.imag());
    seen.insert(std::move(key));
  }
  CHECK(seen.size() == 4096);

  CHECK_THROWS_AS(ComplexVertexStream(13), ValidationError);
}

TEST_CASE("range-partitioned streams cover the full enumeration") {
  std::set<std::vector<int>> whole, parts;
  SpinVector v({1});
  RealVertexStream all(6);
  while (all.next(v)) whole.insert(v.entries());
  for (std::uint64_t start = 0; start < 64; start += 16) {
    RealVertexStream part(6, start, 16);
    while (part.next(v)) parts.insert(v.entries());
  }
  CHECK(whole == parts);
}

TEST_CASE("random vertices are deterministic in the seed") {
  CHECK(random_real_vertex(4, 7) == random_real_vertex(4, 7));
  const SpinVector a = random_real_vertex(4, 7), b = random_real_vertex(4, 8);
  for (int i = 0; i < 4; ++i) {
    CHECK((a[i] == 1 || a[i] == -1));
    CHECK((b[i] == 1 || b[i] == -1));
  }
  const QSpinVector q = random_complex_vertex(3, 0);
  CHECK(q == random_complex_vertex(3, 0));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(q[i]) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("state conversions round-trip") {
  const SpinVector v({1, -1, 1});
  CHECK(to_spin(to_state(v)) == v);
  const QSpinVector q({cplx{1.0, -1.0}, cplx{-1.0, -1.0}});
  CHECK(to_qspin(to_state(q)) == q);
  CHECK_THROWS_AS(to_spin({cplx{0.5, 0.0}}), ValidationError);
}
