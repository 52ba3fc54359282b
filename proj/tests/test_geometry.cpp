#include "percolab/geometry.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include <doctest.h>

#include "random_geometry.hpp"

using namespace percolab;
using percolab::testing::random_geometry;
using percolab::testing::random_mobius;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent zeta: half the cross-ratio argument on the [0, 2*pi) branch.
// Loses relative precision for tiny angles, hence absolute comparisons.
double zeta_from_cross_ratio(const AnchorGeometry& g) {
  double a = std::arg(cross_ratio(g));
  if (a < 0.0) a += 2.0 * kPi;
  return a / 2.0;
}

bool close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

TEST_CASE("geometry validation rejects degenerate inputs") {
  CHECK_THROWS_AS(validate(AnchorGeometry{{1.0}, {1.0}, {0.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(validate(AnchorGeometry{{2.0}, {1.0}, {0.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(validate(AnchorGeometry{{0.0}, {1.0}, {0.0, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(validate(AnchorGeometry{{0.0}, {1.0}, {0.0, -1.0}}), std::domain_error);
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(AnchorGeometry{{-inf}, {1.0}, {0.0, 1.0}}), std::domain_error);
  CHECK_THROWS_AS(validate(AnchorGeometry{{0.0}, {1.0}, {nan, 1.0}}), std::domain_error);
  CHECK_NOTHROW(validate(AnchorGeometry{{0.0}, {1.0}, {5.0, 2.0}}));
}

TEST_CASE("cross-ratio at reference geometries") {
  const auto e1 = cross_ratio({{-1.0}, {1.0}, {0.0, 1.0}});
  CHECK(std::abs(e1 - std::complex<double>(-1.0, 0.0)) < 1e-12);
  const auto e2 = cross_ratio({{0.0}, {1.0}, {1.0, 1.0}});
  CHECK(std::abs(e2 - std::complex<double>(0.0, 1.0)) < 1e-12);
}

TEST_CASE("cross-ratio has unit modulus everywhere") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const AnchorGeometry g = random_geometry(rng);
    CHECK(std::abs(cross_ratio(g)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("subtended angle at reference geometries") {
  CHECK(subtended_angle({{-1.0}, {1.0}, {0.0, 1.0}}) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(subtended_angle({{0.0}, {1.0}, {1.0, 1.0}}) == doctest::Approx(kPi / 4).epsilon(1e-15));
  // symmetric bulk point: angle is 2*atan(half-gap / height)
  const AnchorGeometry g{{2.0}, {6.0}, {4.0, 3.0}};
  CHECK(subtended_angle(g) == doctest::Approx(2.0 * std::atan2(2.0, 3.0)).epsilon(1e-14));
}

TEST_CASE("subtended angle matches the cross-ratio argument branch") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const AnchorGeometry g = random_geometry(rng);
    const double direct = subtended_angle(g);
    CHECK(direct > 0.0);
    CHECK(direct < kPi);
    CHECK(std::fabs(direct - zeta_from_cross_ratio(g)) < 1e-12);
  }
}

TEST_CASE("closed-form sine equals sine of the angle") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const AnchorGeometry g = random_geometry(rng);
    CHECK(close(sin_subtended_angle(g), std::sin(subtended_angle(g)), 1e-12));
  }
}

TEST_CASE("identity map returns the same geometry") {
  const AnchorGeometry g{{-2.0}, {3.0}, {0.5, 1.5}};
  const AnchorGeometry h = mobius_apply(MobiusMap{}, g);
  CHECK(h.x1.x == g.x1.x);
  CHECK(h.x2.x == g.x2.x);
  CHECK(h.z.x == g.z.x);
  CHECK(h.z.y == g.z.y);
}

TEST_CASE("subtended angle is Moebius invariant") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const AnchorGeometry g = random_geometry(rng);
    const MobiusMap t = random_mobius(rng, g);
    const AnchorGeometry h = mobius_apply(t, g);
    CHECK(h.z.y > 0.0);
    CHECK(h.x1.x < h.x2.x);
    CHECK(close(subtended_angle(h), subtended_angle(g), 1e-12));
  }
}

TEST_CASE("degenerate maps are rejected") {
  const AnchorGeometry g{{0.0}, {1.0}, {0.5, 1.0}};
  CHECK_THROWS_AS(mobius_apply(MobiusMap{1.0, 0.0, 0.0, 0.0}, g), std::domain_error);
  CHECK_THROWS_AS(mobius_apply(MobiusMap{1.0, 0.0, 0.0, -1.0}, g), std::domain_error);
  // pole at x1: image lands at infinity
  CHECK_THROWS_AS(mobius_apply(MobiusMap{1.0, 0.0, 1.0, 0.0}, g), std::domain_error);
  // pole strictly between the anchors: image order flips
  CHECK_THROWS_AS(mobius_apply(MobiusMap{1.0, 0.0, 1.0, -0.5}, g), std::domain_error);
}
