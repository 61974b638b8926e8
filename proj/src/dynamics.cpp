#include "rtbp/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace rtbp {

namespace {

void require_off_primaries(const SystemConfig& cfg, const Vec2& q, const char* who) {
  if ((q - cfg.earth_pos).norm() < kSingularRadius || (q - cfg.moon_pos).norm() < kSingularRadius)
    throw std::domain_error(std::string(who) + ": configuration coincides with a primary");
}

}  // namespace

double effective_potential(const SystemConfig& cfg, const Vec2& q) {
  require_off_primaries(cfg, q, "effective_potential");
  const double rm = (q - cfg.moon_pos).norm();
  const double re = (q - cfg.earth_pos).norm();
  return -cfg.mu / rm - (1.0 - cfg.mu) / re - 0.5 * q.norm2();
}

Vec2 effective_potential_gradient(const SystemConfig& cfg, const Vec2& q) {
  require_off_primaries(cfg, q, "effective_potential_gradient");
  const Vec2 dm = q - cfg.moon_pos;
  const Vec2 de = q - cfg.earth_pos;
  const double rm3 = std::pow(dm.norm(), 3);
  const double re3 = std::pow(de.norm(), 3);
  return cfg.mu * dm / rm3 + (1.0 - cfg.mu) * de / re3 - q;
}

std::array<double, 3> effective_potential_hessian(const SystemConfig& cfg, const Vec2& q) {
  require_off_primaries(cfg, q, "effective_potential_hessian");
  const Vec2 dm = q - cfg.moon_pos;
  const Vec2 de = q - cfg.earth_pos;
  const double rm = dm.norm(), re = de.norm();
  const double rm3 = rm * rm * rm, re3 = re * re * re;
  const double rm5 = rm3 * rm * rm, re5 = re3 * re * re;
  const double m = cfg.mu, e = 1.0 - cfg.mu;
  const double uxx = m * (1.0 / rm3 - 3.0 * dm.x * dm.x / rm5) +
                     e * (1.0 / re3 - 3.0 * de.x * de.x / re5) - 1.0;
  const double uxy = m * (-3.0 * dm.x * dm.y / rm5) + e * (-3.0 * de.x * de.y / re5);
  const double uyy = m * (1.0 / rm3 - 3.0 * dm.y * dm.y / rm5) +
                     e * (1.0 / re3 - 3.0 * de.y * de.y / re5) - 1.0;
  return {uxx, uxy, uyy};
}

double hamiltonian(const SystemConfig& cfg, const PhaseState& s) {
  const double a = s.p.x + s.q.y;
  const double b = s.p.y - s.q.x;
  return 0.5 * (a * a + b * b) + effective_potential(cfg, s.q);
}

Vec4 hamiltonian_vector_field(const SystemConfig& cfg, const PhaseState& s) {
  const double a = s.p.x + s.q.y;  // dH/dp1
  const double b = s.p.y - s.q.x;  // dH/dp2
  const Vec2 gU = effective_potential_gradient(cfg, s.q);
  // dH/dq1 = -b + U_x, dH/dq2 = a + U_y
  return {a, b, b - gU.x, -a - gU.y};
}

}  // namespace rtbp
