#ifndef RTBP_DYNAMICS_HPP
#define RTBP_DYNAMICS_HPP

#include <array>

#include "rtbp/system.hpp"
#include "rtbp/vec.hpp"

namespace rtbp {

// Distance below which a configuration counts as sitting on a primary; the
// potential is singular there and callers must go through the regularization
// module instead.
inline constexpr double kSingularRadius = 1e-12;

/// Effective potential U(q) = -mu/|q-m| - (1-mu)/|q-e| - |q|^2/2.
/// Sublevel sets of U are the Hill regions; its five critical points are the
/// Lagrange points. Throws std::domain_error within kSingularRadius of a primary.
double effective_potential(const SystemConfig& cfg, const Vec2& q);

/// grad U(q).
Vec2 effective_potential_gradient(const SystemConfig& cfg, const Vec2& q);

/// Hessian of U as {Uxx, Uxy, Uyy}.
std::array<double, 3> effective_potential_hessian(const SystemConfig& cfg, const Vec2& q);

/// Rotating-frame Hamiltonian H(q,p) = ((p1+q2)^2 + (p2-q1)^2)/2 + U(q).
double hamiltonian(const SystemConfig& cfg, const PhaseState& s);

/// X_H with the convention i_{X_H} omega = -dH, i.e. (dq/dt, dp/dt) = (dH/dp, -dH/dq).
Vec4 hamiltonian_vector_field(const SystemConfig& cfg, const PhaseState& s);

}  // namespace rtbp

#endif
