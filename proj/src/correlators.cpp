#include "percolab/correlators.hpp"

#include <cmath>
#include <stdexcept>

namespace percolab {

namespace {

void require_ordered(BoundaryPoint x1, BoundaryPoint x2) {
  if (!std::isfinite(x1.x) || !std::isfinite(x2.x) || !(x1.x < x2.x)) {
    throw std::domain_error("boundary pair: requires finite x1 < x2");
  }
}

void require_bulk(BulkPoint z) {
  if (!std::isfinite(z.x) || !std::isfinite(z.y) || !(z.y > 0.0)) {
    throw std::domain_error("bulk point: requires finite z with y > 0");
  }
}

}  // namespace

double p_boundary_pair(BoundaryPoint x1, BoundaryPoint x2) {
  require_ordered(x1, x2);
  return std::pow(x2.x - x1.x, -2.0 / 3.0);
}

double p_bulk(BulkPoint z) {
  require_bulk(z);
  return std::pow(z.y, -5.0 / 48.0);
}

double p_anchor_bulk(BoundaryPoint x1, BulkPoint z) {
  require_bulk(z);
  if (!std::isfinite(x1.x)) {
    throw std::domain_error("anchor point must be finite");
  }
  const double dist = std::hypot(z.x - x1.x, z.y);
  return std::pow(z.y, 11.0 / 48.0) * std::pow(dist, -2.0 / 3.0);
}

double p_pair_bulk(const AnchorGeometry& g) {
  validate(g);
  return std::pow(g.x2.x - g.x1.x, -2.0 / 3.0) * std::pow(g.z.y, -5.0 / 48.0) *
         std::cbrt(std::sin(subtended_angle(g)));
}

double p_interval_bulk(const AnchorGeometry& g) {
  validate(g);
  return std::pow(g.z.y, -5.0 / 48.0) * std::cbrt(std::sin(0.5 * subtended_angle(g)));
}

double p_complement_bulk(const AnchorGeometry& g) {
  validate(g);
  return std::pow(g.z.y, -5.0 / 48.0) * std::cbrt(std::cos(0.5 * subtended_angle(g)));
}

FactorizationResiduals residuals(const AnchorGeometry& g) {
  validate(g);
  const double pair = p_boundary_pair(g.x1, g.x2);
  const double bulk = p_bulk(g.z);
  const double anchor1 = p_anchor_bulk(g.x1, g.z);
  const double anchor2 = p_anchor_bulk(g.x2, g.z);
  const double pair_bulk = p_pair_bulk(g);
  const double interval = p_interval_bulk(g);
  const double complement = p_complement_bulk(g);

  FactorizationResiduals r;
  r.r1 = pair_bulk / std::sqrt(pair * anchor1 * anchor2);
  r.r2 = pair_bulk * bulk / (pair * interval * complement);
  r.r3 = interval * complement * std::sqrt(pair) / (bulk * std::sqrt(anchor1 * anchor2));
  r.r4 = interval * complement * pair_bulk / (bulk * anchor1 * anchor2);
  return r;
}

UniversalConstants universal_constants() {
  const double pi = 4.0 * std::atan(1.0);
  const double gamma_third = std::tgamma(1.0 / 3.0);
  UniversalConstants c;
  c.c1 = std::pow(2.0, 3.5) * std::pow(pi, 2.5) /
         (std::pow(3.0, 0.75) * std::pow(gamma_third, 4.5));
  c.c2 = 8.0 * pi * pi / (3.0 * std::pow(gamma_third, 3.0));
  c.c3 = std::sqrt(2.0) * std::pow(3.0, 0.25) * std::sqrt(pi) /
         std::pow(gamma_third, 1.5);
  c.c4 = 16.0 * std::pow(pi, 3.0) / (std::sqrt(3.0) * std::pow(gamma_third, 6.0));
  return c;
}

}  // namespace percolab
