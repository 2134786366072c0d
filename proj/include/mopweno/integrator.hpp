#pragma once
//! \file integrator.hpp
//! \brief Third-order SSP Runge-Kutta stepping with a clipped final step.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mopweno {

//! Thrown when a run cannot continue (non-finite state, positivity loss, step guard).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using State = std::vector<double>;
//! L(U) written into the second argument (same size as the first).
using SpatialOperator = std::function<void(const State&, State&)>;

namespace detail {
inline void require_finite(const State& u, int stage) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]))
      throw SolverError("non-finite value at index " + std::to_string(i) + " in RK stage " + std::to_string(stage));
  }
}
}  // namespace detail

//! Scratch buffers reused across steps.
struct RK3Workspace {
  State l, u1, u2;
};

inline void ssp_rk3_step(State& u, double dt, const SpatialOperator& L, RK3Workspace& ws) {
  const std::size_t n = u.size();
  ws.l.resize(n);
  ws.u1.resize(n);
  ws.u2.resize(n);

  L(u, ws.l);
  for (std::size_t i = 0; i < n; ++i) ws.u1[i] = u[i] + dt * ws.l[i];
  detail::require_finite(ws.u1, 1);

  L(ws.u1, ws.l);
  for (std::size_t i = 0; i < n; ++i) ws.u2[i] = 0.75 * u[i] + 0.25 * ws.u1[i] + 0.25 * dt * ws.l[i];
  detail::require_finite(ws.u2, 2);

  L(ws.u2, ws.l);
  for (std::size_t i = 0; i < n; ++i) u[i] = u[i] / 3.0 + 2.0 / 3.0 * ws.u2[i] + 2.0 / 3.0 * dt * ws.l[i];
  detail::require_finite(u, 3);
}

inline void ssp_rk3_step(State& u, double dt, const SpatialOperator& L) {
  RK3Workspace ws;
  ssp_rk3_step(u, dt, L, ws);
}

struct TimeLoopConfig {
  double t_end = 0.0;
  long max_steps = 100'000'000;
};

//! Step size for the current state and time.
using StepRule = std::function<double(const State&, double)>;

//! Advances \p u to cfg.t_end; returns the number of steps. A step that would overshoot by a
//! relative 1e-10 or less is merged into the final clipped step.
inline long advance_to(State& u, const TimeLoopConfig& cfg, const StepRule& dt_rule, const SpatialOperator& L) {
  if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("advance_to: t_end must be >= 0");
  RK3Workspace ws;
  double t = 0.0, carry = 0.0;  // compensated running time
  long steps = 0;
  while (t < cfg.t_end) {
    if (steps >= cfg.max_steps) throw SolverError("max steps exceeded at t=" + std::to_string(t));
    double dt = dt_rule(u, t);
    if (!(dt > 0.0) || !std::isfinite(dt)) throw SolverError("invalid time step at t=" + std::to_string(t));
    const double remaining = (cfg.t_end - t) - carry;
    const bool last = remaining <= dt * (1.0 + 1e-10) + 4.0 * std::numeric_limits<double>::epsilon() * cfg.t_end;
    if (last) dt = remaining;
    ssp_rk3_step(u, dt, L, ws);
    ++steps;
    if (last) {
      t = cfg.t_end;
    } else {
      const double y = dt - carry;
      const double s = t + y;
      carry = (s - t) - y;
      t = s;
    }
  }
  return steps;
}

//! Constant step rule, e.g. dt = CFL * dx.
inline StepRule fixed_step(double dt) {
  return [dt](const State&, double) { return dt; };
}

}  // namespace mopweno
