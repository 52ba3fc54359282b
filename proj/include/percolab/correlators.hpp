#pragma once

#include "percolab/geometry.hpp"

namespace percolab {

// Connection densities in the upper half-plane at criticality, normalized so
// that every proportionality constant equals 1. The absolute values are
// convention-dependent; only the factorization ratios below are universal.

// Two boundary points joined by a cluster: (x2 - x1)^(-2/3).
double p_boundary_pair(BoundaryPoint x1, BoundaryPoint x2);

// A bulk point joined to the boundary: y^(-5/48).
double p_bulk(BulkPoint z);

// A bulk point joined to one boundary anchor: y^(11/48) * |z - x1|^(-2/3).
double p_anchor_bulk(BoundaryPoint x1, BulkPoint z);

// A bulk point joined to both anchors:
// (x2 - x1)^(-2/3) * y^(-5/48) * sin^(1/3)(angle).
double p_pair_bulk(const AnchorGeometry& g);

// A bulk point joined to the interval (x1, x2): y^(-5/48) * sin^(1/3)(angle/2).
double p_interval_bulk(const AnchorGeometry& g);

// A bulk point joined to the boundary outside (x1, x2):
// y^(-5/48) * cos^(1/3)(angle/2).
double p_complement_bulk(const AnchorGeometry& g);

// The four factorization ratios of the unit-normalized densities. They are
// geometry independent: (1, 2^(1/3), 2^(-1/3), 2^(-1/3)), and r4 = r1 * r3.
// These are consequences of the normalization and are distinct from the
// universal constants below, which absorb the nonuniversal amplitudes
// carried by measured probabilities.
struct FactorizationResiduals {
  double r1;  // pair-bulk over sqrt(pair * anchor1-bulk * anchor2-bulk)
  double r2;  // pair-bulk * bulk over pair * interval-bulk * complement-bulk
  double r3;  // interval-bulk * complement-bulk * sqrt(pair) over bulk * sqrt(anchors)
  double r4;  // interval-bulk * complement-bulk * pair-bulk over bulk * anchors
};

FactorizationResiduals residuals(const AnchorGeometry& g);

// The universal constants of the four factorization identities, built from
// pi and Gamma(1/3). Satisfy c2 = c1/c3 and c4 = c1*c3.
struct UniversalConstants {
  double c1;
  double c2;
  double c3;
  double c4;
};

UniversalConstants universal_constants();

}  // namespace percolab
