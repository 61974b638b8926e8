#include "rtbp/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace rtbp {

namespace {

struct PhaseSystem {
  const SystemConfig& cfg;
  Vec4 operator()(double, const Vec4& x) const {
    return hamiltonian_vector_field(cfg, PhaseState::from_flat(x));
  }
};

}  // namespace

Trajectory integrate_flow(const SystemConfig& cfg, const PhaseState& s0, double t0, double t1,
                          const FlowOptions& opt) {
  const double de0 = (s0.q - cfg.earth_pos).norm();
  const double dm0 = (s0.q - cfg.moon_pos).norm();
  if (de0 < opt.collision_radius || dm0 < opt.collision_radius)
    throw std::domain_error("integrate_flow: initial state inside the collision radius");
  if (!(opt.tol > 0.0)) throw std::domain_error("integrate_flow: tol must be positive");

  StepControl ctl;
  ctl.tol = opt.tol;
  ctl.max_steps = opt.max_steps;

  std::vector<EventSpec<4>> events;
  events.push_back({[&cfg, &opt](double, const Vec4& x) {
                      return (Vec2(x[0], x[1]) - cfg.earth_pos).norm() - opt.collision_radius;
                    },
                    -1, true, "collision_proximity_earth", 0.0});
  events.push_back({[&cfg, &opt](double, const Vec4& x) {
                      return (Vec2(x[0], x[1]) - cfg.moon_pos).norm() - opt.collision_radius;
                    },
                    -1, true, "collision_proximity_moon", 0.0});
  if (opt.record_axis_crossings)
    events.push_back({[](double, const Vec4& x) { return x[1]; }, 0, false, "axis_crossing", 1e-12});

  auto rec = integrate_adaptive<4>(PhaseSystem{cfg}, s0.flat(), t0, t1, ctl, events,
                                   opt.forced_times);

  Trajectory traj;
  traj.energy = hamiltonian(cfg, s0);
  traj.samples.reserve(rec.times.size());
  for (std::size_t i = 0; i < rec.times.size(); ++i)
    traj.samples.push_back({rec.times[i], PhaseState::from_flat(rec.states[i])});
  for (const auto& ev : rec.events)
    traj.events.push_back({ev.tag, ev.t, PhaseState::from_flat(ev.state)});
  if (rec.stop == StopReason::StepUnderflow) {
    // Step collapse only happens against the gravitational singularities;
    // report it as a proximity event rather than failing.
    const PhaseState last = traj.samples.back().state;
    const bool near_earth = (last.q - cfg.earth_pos).norm() < (last.q - cfg.moon_pos).norm();
    traj.events.push_back({near_earth ? std::string("collision_proximity_earth")
                                      : std::string("collision_proximity_moon"),
                           traj.samples.back().t, last});
    traj.events.push_back({"step_underflow", traj.samples.back().t, last});
  }
  traj.truncated = rec.stop != StopReason::TimeReached;
  return traj;
}

std::vector<PhaseState> flow_at_times(const SystemConfig& cfg, const PhaseState& s0,
                                      const std::vector<double>& times, double tol) {
  FlowOptions opt;
  opt.tol = tol;
  opt.forced_times = times;
  std::vector<PhaseState> out;
  if (times.empty()) return out;
  const Trajectory traj = integrate_flow(cfg, s0, 0.0, times.back(), opt);
  out.reserve(times.size());
  std::size_t j = 0;
  for (double want : times) {
    while (j + 1 < traj.samples.size() && std::abs(traj.samples[j + 1].t - want) <=
                                              std::abs(traj.samples[j].t - want))
      ++j;
    if (std::abs(traj.samples[j].t - want) > 1e-9)
      throw std::runtime_error("flow_at_times: trajectory truncated before requested time");
    out.push_back(traj.samples[j].state);
  }
  return out;
}

double max_energy_drift(const SystemConfig& cfg, const Trajectory& traj) {
  double drift = 0.0;
  for (const auto& s : traj.samples)
    drift = std::max(drift, std::abs(hamiltonian(cfg, s.state) - traj.energy));
  return drift;
}

}  // namespace rtbp
