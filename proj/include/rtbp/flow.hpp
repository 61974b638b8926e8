#ifndef RTBP_FLOW_HPP
#define RTBP_FLOW_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "rtbp/dynamics.hpp"
#include "rtbp/system.hpp"

namespace rtbp {

/// Step-size policy for the embedded 7/8 pair: proportional-integral control
/// in the scaled error, with safety factor and growth clamps.
struct StepControl {
  double tol = 1e-10;   // used as both absolute and relative tolerance
  double h_init = 1e-3;
  double h_min = 1e-14;
  double h_max = 1.0;
  double safety = 0.9;
  double alpha = 0.7 / 8.0;  // PI exponents for an order-8 error estimate
  double beta = 0.4 / 8.0;
  std::size_t max_steps = 2'000'000;
};

template <std::size_t N>
struct EventSpec {
  std::function<double(double, const std::array<double, N>&)> value;
  int direction = 0;       // -1 falling, +1 rising, 0 both
  bool terminal = false;
  std::string tag;
  double start_after = 0.0;  // ignore sign changes before this |t - t0|
};

template <std::size_t N>
struct EventHit {
  std::string tag;
  double t;
  std::array<double, N> state;
  std::size_t index;  // index into the event list
};

enum class StopReason { TimeReached, TerminalEvent, StepUnderflow, MaxSteps };

template <std::size_t N>
struct IntegrationRecord {
  std::vector<double> times;
  std::vector<std::array<double, N>> states;
  std::vector<EventHit<N>> events;
  StopReason stop = StopReason::TimeReached;
};

/// Adaptive integration of dx/dt = sys(t, x) from t0 to t1 (either direction).
/// Accepted steps are recorded; events are localized by bisection over the
/// step size, re-taking a single high-order step per trial so the event time
/// inherits the local truncation accuracy.
template <std::size_t N, class System>
IntegrationRecord<N> integrate_adaptive(System&& sys, std::array<double, N> x0, double t0,
                                        double t1, const StepControl& ctl,
                                        const std::vector<EventSpec<N>>& events = {},
                                        const std::vector<double>& forced_times = {}) {
  using State = std::array<double, N>;
  namespace ode = boost::numeric::odeint;
  ode::runge_kutta_fehlberg78<State> stepper;

  auto rhs = [&sys](const State& x, State& dxdt, double t) { dxdt = sys(t, x); };
  auto scaled_error = [&](const State& xo, const State& xn, const State& xe) {
    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = ctl.tol + ctl.tol * std::max(std::abs(xo[i]), std::abs(xn[i]));
      err = std::max(err, std::abs(xe[i]) / sc);
    }
    return err;
  };

  IntegrationRecord<N> rec;
  rec.times.push_back(t0);
  rec.states.push_back(x0);

  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  double t = t0;
  State x = x0;
  double h = dir * std::min(ctl.h_init, ctl.h_max);
  double err_prev = 1.0;
  std::vector<double> ev_prev(events.size());
  for (std::size_t k = 0; k < events.size(); ++k) ev_prev[k] = events[k].value(t0, x0);
  std::size_t next_forced = 0;

  // One trial step of exact size dt from (ts, xs); the pair's error estimate
  // is discarded -- callers bound dt by an accepted step.
  auto take_step = [&](double ts, const State& xs, double dt) {
    State xn = xs, xe{};
    stepper.do_step(rhs, xn, ts, dt, xe);
    return xn;
  };

  for (std::size_t step = 0; step < ctl.max_steps; ++step) {
    if (dir * (t1 - t) <= 0.0) break;
    // clamp to the end point and to the next forced sample time
    double h_stop = dir * (t1 - t);
    while (next_forced < forced_times.size() && dir * (forced_times[next_forced] - t) <= 1e-15)
      ++next_forced;
    if (next_forced < forced_times.size())
      h_stop = std::min(h_stop, dir * (forced_times[next_forced] - t));
    const bool clamped = h_stop < std::abs(h);
    double h_try = dir * std::min(std::abs(h), std::max(h_stop, ctl.h_min));

    State xn = x, xe{};
    stepper.do_step(rhs, xn, t, h_try, xe);
    const double err = scaled_error(x, xn, xe);

    if (err > 1.0) {
      const double fac = std::max(0.1, ctl.safety * std::pow(err, -ctl.alpha));
      h = dir * std::max(std::abs(h_try) * fac, ctl.h_min);
      if (std::abs(h_try) <= ctl.h_min * 1.0000001) {
        rec.stop = StopReason::StepUnderflow;
        return rec;
      }
      continue;
    }

    // accepted: look for event sign changes across [t, t+h_try]
    const double t_new = t + h_try;
    for (std::size_t k = 0; k < events.size(); ++k) {
      const auto& ev = events[k];
      const double g0 = ev_prev[k];
      const double g1 = ev.value(t_new, xn);
      const bool crossed = (g0 < 0.0 && g1 >= 0.0 && ev.direction >= 0) ||
                           (g0 > 0.0 && g1 <= 0.0 && ev.direction <= 0);
      if (!crossed || std::abs(t_new - t0) < ev.start_after) {
        ev_prev[k] = g1;
        continue;
      }
      // bisect on the step size
      double lo = 0.0, hi = h_try;
      State xhit = xn;
      for (int it = 0; it < 80 && std::abs(hi - lo) > 1e-16 * (1.0 + std::abs(t)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const State xm = take_step(t, x, mid);
        const double gm = ev.value(t + mid, xm);
        if ((g0 < 0.0) == (gm < 0.0))
          lo = mid;
        else {
          hi = mid;
          xhit = xm;
        }
      }
      rec.events.push_back({ev.tag, t + hi, xhit, k});
      if (ev.terminal) {
        rec.times.push_back(t + hi);
        rec.states.push_back(xhit);
        rec.stop = StopReason::TerminalEvent;
        return rec;
      }
      ev_prev[k] = g1;
    }

    t = t_new;
    x = xn;
    rec.times.push_back(t);
    rec.states.push_back(x);

    // PI growth update; a step shortened only to hit an output time must not
    // drag the natural step size down with it
    const double e = std::max(err, 1e-10);
    double fac = ctl.safety * std::pow(e, -ctl.alpha) * std::pow(err_prev, ctl.beta);
    fac = std::min(5.0, std::max(0.2, fac));
    err_prev = e;
    double h_nat = std::abs(h_try) * fac;
    if (clamped && fac >= 1.0) h_nat = std::max(h_nat, std::abs(h));
    h = dir * std::min(std::max(h_nat, ctl.h_min), ctl.h_max);
  }
  if (dir * (t1 - t) > 0.0 && rec.stop == StopReason::TimeReached)
    rec.stop = StopReason::MaxSteps;
  return rec;
}

// ---------------------------------------------------------------------------
// PCR3BP flow with collision-proximity and axis-crossing events.

struct FlowOptions {
  double tol = 1e-10;
  double collision_radius = 1e-3;  // hand-off radius to the regularization chart
  bool record_axis_crossings = false;
  std::vector<double> forced_times;  // extra exact sample times
  std::size_t max_steps = 2'000'000;
};

struct TrajectorySample {
  double t;
  PhaseState state;
};

struct FlowEvent {
  std::string tag;  // "collision_proximity_earth", "collision_proximity_moon",
                    // "axis_crossing", "step_underflow"
  double t;
  PhaseState state;
};

/// Time-stamped flow segment at fixed energy. Strictly monotone sample times;
/// |H(state) - energy| stays within the integration tolerance budget.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  double energy = 0.0;
  std::vector<FlowEvent> events;
  bool truncated = false;  // stopped before covering t_span

  double t_front() const { return samples.front().t; }
  double t_back() const { return samples.back().t; }
};

Trajectory integrate_flow(const SystemConfig& cfg, const PhaseState& s0, double t0, double t1,
                          const FlowOptions& opt = {});

/// States at prescribed times (convenience built on forced sample times).
std::vector<PhaseState> flow_at_times(const SystemConfig& cfg, const PhaseState& s0,
                                      const std::vector<double>& times, double tol);

double max_energy_drift(const SystemConfig& cfg, const Trajectory& traj);

}  // namespace rtbp

#endif
