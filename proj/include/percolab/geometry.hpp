#pragma once

#include <complex>

namespace percolab {

// A point on the real-axis boundary of the upper half-plane.
struct BoundaryPoint {
  double x = 0.0;
};

// A point strictly inside the upper half-plane, z = x + iy with y > 0.
struct BulkPoint {
  double x = 0.0;
  double y = 0.0;

  std::complex<double> as_complex() const { return {x, y}; }
};

// Two ordered boundary anchors plus one bulk point; the argument of every
// half-plane correlator formula.
struct AnchorGeometry {
  BoundaryPoint x1;
  BoundaryPoint x2;
  BulkPoint z;
};

// Real Moebius map w -> (a*w + b)/(c*w + d). With det = a*d - b*c > 0 it is
// an orientation-preserving automorphism of the upper half-plane.
struct MobiusMap {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const { return a * d - b * c; }
};

// Throws std::domain_error unless x1 < x2, z.y > 0 and all coordinates are
// finite. Degenerate inputs are rejected rather than mapped to limits.
void validate(const AnchorGeometry& g);

// eta = (z - x2)(zbar - x1) / ((zbar - x2)(z - x1)). Unit modulus for every
// valid geometry.
std::complex<double> cross_ratio(const AnchorGeometry& g);

// The angle in (0, pi) subtended at z by the boundary segment (x1, x2).
// Equals Arg(cross_ratio(g))/2 with the argument branch taken in [0, 2*pi):
// it tends to pi as z approaches the open interval and to 0 far away.
// Evaluated as atan2(y*(x2 - x1), (x - x1)(x - x2) + y^2), which stays
// relatively accurate where the cross-ratio argument loses precision.
double subtended_angle(const AnchorGeometry& g);

// sin of the subtended angle in distance-product form:
// y*(x2 - x1) / (|z - x1| |z - x2|).
double sin_subtended_angle(const AnchorGeometry& g);

// Maps all three points through t. Throws std::domain_error if t is singular
// on the upper half-plane (det <= 0), a boundary image lands at infinity, or
// the image geometry violates the ordering invariant.
AnchorGeometry mobius_apply(const MobiusMap& t, const AnchorGeometry& g);

}  // namespace percolab
