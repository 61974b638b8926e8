#ifndef RTBP_EQUILIBRIA_HPP
#define RTBP_EQUILIBRIA_HPP

#include <array>
#include <string>

#include "rtbp/system.hpp"
#include "rtbp/vec.hpp"

namespace rtbp {

struct LagrangePoint {
  int label = 0;  // 1..5
  Vec2 q;
  double value = 0.0;  // U at the point
  int morse_index = 0; // of U: 1 for the collinear saddles, 2 for the maxima
};

/// All five Lagrange points. L1 sits between the primaries, L2 right of the
/// moon, L3 left of the earth (so l3 < e < l1 < m < l2 on the axis); L4/L5 are
/// the equilateral points (1/2-mu, +-sqrt(3)/2). Collinear points come from
/// bracketed bisection of dU/dx on each open axis interval followed by a
/// Newton polish; gradients at the results are below 1e-10.
std::array<LagrangePoint, 5> lagrange_points(const SystemConfig& cfg);

struct CriticalValues {
  std::array<double, 5> value;  // U(l1..l5)
  bool chain_holds = false;     // U(l1)<U(l2)<U(l3)<U(l4)=U(l5), with the
                                // l2/l3 relation an equality at mu = 1/2
  bool equal_l2_l3 = false;
  std::string report;
};

CriticalValues critical_values(const SystemConfig& cfg);

/// Section of the footpoint projection over the critical set:
/// (q1, q2) -> (q1, q2, -q2, q1). Lifts critical points of U to ones of H.
PhaseState lift_to_phase(const Vec2& q);

/// Resolve energies given as "L1-0.05" / "L3" / plain numbers against freshly
/// computed critical values. Throws std::invalid_argument on malformed input.
double resolve_energy(const SystemConfig& cfg, const std::string& spec);

}  // namespace rtbp

#endif
