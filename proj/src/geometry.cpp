#include "percolab/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace percolab {

void validate(const AnchorGeometry& g) {
  if (!std::isfinite(g.x1.x) || !std::isfinite(g.x2.x) ||
      !std::isfinite(g.z.x) || !std::isfinite(g.z.y)) {
    throw std::domain_error("anchor geometry: coordinates must be finite");
  }
  if (!(g.x1.x < g.x2.x)) {
    throw std::domain_error("anchor geometry: requires x1 < x2");
  }
  if (!(g.z.y > 0.0)) {
    throw std::domain_error("anchor geometry: bulk point must satisfy y > 0");
  }
}

std::complex<double> cross_ratio(const AnchorGeometry& g) {
  validate(g);
  const std::complex<double> z = g.z.as_complex();
  const std::complex<double> zb = std::conj(z);
  return (z - g.x2.x) * (zb - g.x1.x) / ((zb - g.x2.x) * (z - g.x1.x));
}

double subtended_angle(const AnchorGeometry& g) {
  validate(g);
  const double y = g.z.y;
  const double u = g.z.x - g.x1.x;
  const double v = g.z.x - g.x2.x;
  // cross and dot of the vectors from z to x1 and to x2; cross > 0 keeps
  // atan2 on the (0, pi) branch.
  return std::atan2(y * (g.x2.x - g.x1.x), u * v + y * y);
}

double sin_subtended_angle(const AnchorGeometry& g) {
  validate(g);
  const double d1 = std::hypot(g.z.x - g.x1.x, g.z.y);
  const double d2 = std::hypot(g.z.x - g.x2.x, g.z.y);
  return g.z.y * (g.x2.x - g.x1.x) / (d1 * d2);
}

namespace {

double map_boundary(const MobiusMap& t, double x) {
  const double denom = t.c * x + t.d;
  if (denom == 0.0) {
    throw std::domain_error("mobius map: boundary image at infinity");
  }
  return (t.a * x + t.b) / denom;
}

}  // namespace

AnchorGeometry mobius_apply(const MobiusMap& t, const AnchorGeometry& g) {
  validate(g);
  if (!(t.det() > 0.0)) {
    throw std::domain_error("mobius map: requires a*d - b*c > 0");
  }
  AnchorGeometry out;
  out.x1.x = map_boundary(t, g.x1.x);
  out.x2.x = map_boundary(t, g.x2.x);
  const std::complex<double> z = g.z.as_complex();
  const std::complex<double> w = (t.a * z + t.b) / (t.c * z + t.d);
  out.z.x = w.real();
  out.z.y = w.imag();
  validate(out);
  return out;
}

}  // namespace percolab
