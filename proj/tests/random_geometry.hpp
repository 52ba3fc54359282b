#pragma once

#include <cmath>
#include <random>

#include "percolab/geometry.hpp"

namespace percolab::testing {

// Valid half-plane geometries spread log-uniformly over overall scales
// 1e-3..1e3, with the gap and the bulk height varying independently around
// the scale so both near-interval and far-field shapes appear.
inline AnchorGeometry random_geometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> exponent(-3.0, 3.0);
  std::uniform_real_distribution<double> rel(-1.5, 1.5);
  const double scale = std::pow(10.0, exponent(rng));
  const double x1 = scale * unit(rng);
  const double gap = scale * std::pow(10.0, rel(rng) / 2.0);
  const double x = x1 + gap * (0.5 + 2.0 * unit(rng));
  const double y = gap * std::pow(10.0, rel(rng));
  return {{x1}, {x1 + gap}, {x, y}};
}

// Well-conditioned half-plane automorphism whose pole stays clear of the
// geometry, so the mapped points keep close to full double precision.
inline MobiusMap random_mobius(std::mt19937_64& rng, const AnchorGeometry& g) {
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  for (;;) {
    MobiusMap t{unit(rng), unit(rng), unit(rng), unit(rng)};
    if (t.det() < 0.1) continue;
    const double d1 = t.c * g.x1.x + t.d;
    const double d2 = t.c * g.x2.x + t.d;
    const double dz = std::hypot(t.c * g.z.x + t.d, t.c * g.z.y);
    const double span = std::fabs(t.c) * (std::fabs(g.x1.x) + std::fabs(g.x2.x)) + std::fabs(t.d);
    if (d1 * d2 < 0.0) continue;  // pole inside the interval flips the order
    if (std::fabs(d1) < 0.05 * (span + 0.1)) continue;
    if (std::fabs(d2) < 0.05 * (span + 0.1)) continue;
    if (dz < 0.05 * (span + 0.1)) continue;
    return t;
  }
}

}  // namespace percolab::testing
