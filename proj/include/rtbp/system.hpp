#ifndef RTBP_SYSTEM_HPP
#define RTBP_SYSTEM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rtbp/vec.hpp"

namespace rtbp {

enum class Primary { Earth, Moon };

/// Planar circular restricted three-body problem in rotating coordinates.
/// Lengths are normalized to the earth-moon separation, the total mass to one,
/// and the barycenter sits at the origin. mu is the moon's mass; mu <= 1/2 by
/// the usual relabeling. mu = 0 is admitted as the rotating-Kepler limit used
/// by the test oracles.
struct SystemConfig {
  double mu;
  Vec2 earth_pos;
  Vec2 moon_pos;

  explicit SystemConfig(double mass_ratio)
      : mu(mass_ratio), earth_pos(-mass_ratio, 0.0), moon_pos(1.0 - mass_ratio, 0.0) {
    if (!(mu >= 0.0) || !(mu <= 0.5))
      throw std::domain_error("SystemConfig: mass ratio must lie in [0, 1/2], got " +
                              std::to_string(mass_ratio));
  }

  Vec2 primary_pos(Primary p) const { return p == Primary::Earth ? earth_pos : moon_pos; }
  // gravitational coefficient of the primary (earth carries mass 1-mu)
  double primary_mass(Primary p) const { return p == Primary::Earth ? 1.0 - mu : mu; }
  Primary other(Primary p) const { return p == Primary::Earth ? Primary::Moon : Primary::Earth; }
};

/// A point (q, p) of phase space, momenta conjugate to rotating-frame positions.
struct PhaseState {
  Vec2 q;
  Vec2 p;

  constexpr PhaseState() = default;
  constexpr PhaseState(Vec2 q_, Vec2 p_) : q(q_), p(p_) {}
  constexpr PhaseState(double q1, double q2, double p1, double p2) : q(q1, q2), p(p1, p2) {}

  Vec4 flat() const { return {q.x, q.y, p.x, p.y}; }
  static PhaseState from_flat(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
};

inline double max_abs_diff(const PhaseState& a, const PhaseState& b) {
  double d = std::abs(a.q.x - b.q.x);
  d = std::max(d, std::abs(a.q.y - b.q.y));
  d = std::max(d, std::abs(a.p.x - b.p.x));
  return std::max(d, std::abs(a.p.y - b.p.y));
}

enum class Involution { Rho, Sigma, RhoSigma };

/// The reflection symmetries of the problem: rho is antisymplectic and always
/// present; sigma only at equal masses (it swaps the primaries); their product
/// is the symplectic point reflection.
///   rho:       (q1, q2, p1, p2) -> ( q1, -q2, -p1,  p2)
///   sigma:     (q1, q2, p1, p2) -> (-q1,  q2,  p1, -p2)
///   rho.sigma: (q,  p)          -> (-q, -p)
inline PhaseState apply_involution_unchecked(Involution kind, const PhaseState& s) {
  switch (kind) {
    case Involution::Rho:
      return {s.q.x, -s.q.y, -s.p.x, s.p.y};
    case Involution::Sigma:
      return {-s.q.x, s.q.y, s.p.x, -s.p.y};
    case Involution::RhoSigma:
    default:
      return {-s.q.x, -s.q.y, -s.p.x, -s.p.y};
  }
}

/// Checked variant: sigma (and rho.sigma) are symmetries of H only at mu = 1/2.
inline PhaseState apply_involution(const SystemConfig& cfg, Involution kind, const PhaseState& s) {
  if (kind != Involution::Rho && cfg.mu != 0.5)
    throw std::domain_error("apply_involution: sigma is a symmetry only for mu = 1/2");
  return apply_involution_unchecked(kind, s);
}

inline PhaseState rho(const PhaseState& s) { return apply_involution_unchecked(Involution::Rho, s); }

}  // namespace rtbp

#endif
