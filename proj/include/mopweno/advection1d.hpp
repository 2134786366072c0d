#pragma once
//! \file advection1d.hpp
//! \brief Finite-volume WENO solver for u_t + u_x = 0 on [-1, 1] with periodic boundaries.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "integrator.hpp"
#include "metrics.hpp"
#include "op_transform.hpp"
#include "scheme.hpp"

namespace mopweno {

//! Global Lax-Friedrichs flux for f(u) = u.
inline double lf_flux(double a, double b, double alpha = 1.0) { return 0.5 * (a + b - alpha * (b - a)); }

enum class InitialCondition { sin, sin_sin, sin9, slp, bicwp };

inline InitialCondition initial_condition_from_name(std::string_view s) {
  if (s == "sin") return InitialCondition::sin;
  if (s == "sin_sin") return InitialCondition::sin_sin;
  if (s == "sin9") return InitialCondition::sin9;
  if (s == "slp") return InitialCondition::slp;
  if (s == "bicwp") return InitialCondition::bicwp;
  throw std::invalid_argument("unknown 1D problem '" + std::string(s) + "'");
}

inline const char* initial_condition_name(InitialCondition ic) {
  switch (ic) {
    case InitialCondition::sin: return "sin";
    case InitialCondition::sin_sin: return "sin_sin";
    case InitialCondition::sin9: return "sin9";
    case InitialCondition::slp: return "slp";
    case InitialCondition::bicwp: return "bicwp";
  }
  return "?";
}

struct SLPConstants {
  static constexpr double z = -0.7;
  static constexpr double delta_hat = 0.005;
  static constexpr double a = 0.5;
  static constexpr double alpha = 10.0;
  static double beta() { return std::numbers::ln2 / (36.0 * delta_hat * delta_hat); }
};

namespace detail {
inline double slp_G(double x, double beta, double z) { return std::exp(-beta * (x - z) * (x - z)); }
inline double slp_F(double x, double alpha, double a) {
  return std::sqrt(std::max(1.0 - alpha * alpha * (x - a) * (x - a), 0.0));
}
}  // namespace detail

inline double slp_profile(double x) {
  using C = SLPConstants;
  if (x >= -0.8 && x <= -0.6) {
    const double b = C::beta();
    return (detail::slp_G(x, b, C::z - C::delta_hat) + 4.0 * detail::slp_G(x, b, C::z) +
            detail::slp_G(x, b, C::z + C::delta_hat)) / 6.0;
  }
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6) {
    return (detail::slp_F(x, C::alpha, C::a - C::delta_hat) + 4.0 * detail::slp_F(x, C::alpha, C::a) +
            detail::slp_F(x, C::alpha, C::a + C::delta_hat)) / 6.0;
  }
  return 0.0;
}

inline double bicwp_profile(double x) {
  if ((x > -0.8 && x <= -0.6) || (x > -0.4 && x <= -0.2) || (x > 0.4 && x <= 0.6)) return 1.0;
  if ((x > -0.6 && x <= -0.4) || (x > 0.2 && x <= 0.4) || (x > 0.6 && x <= 0.8)) return 0.5;
  return 0.0;
}

//! Pointwise initial profile on [-1, 1].
inline double initial_value(InitialCondition ic, double x) {
  constexpr double pi = std::numbers::pi;
  switch (ic) {
    case InitialCondition::sin: return std::sin(pi * x);
    case InitialCondition::sin_sin: return std::sin(pi * x - std::sin(pi * x) / pi);
    case InitialCondition::sin9: return std::pow(std::sin(pi * x), 9);
    case InitialCondition::slp: return slp_profile(x);
    case InitialCondition::bicwp: return bicwp_profile(x);
  }
  return 0.0;
}

//! Jump locations that must fall on cell faces.
inline std::vector<double> jump_locations(InitialCondition ic) {
  switch (ic) {
    case InitialCondition::slp: return {-0.8, -0.6, -0.4, -0.2};
    case InitialCondition::bicwp: return {-0.8, -0.6, -0.4, -0.2, 0.2, 0.4, 0.6, 0.8};
    default: return {};
  }
}

//! Jumps plus derivative discontinuities; quadrature splits at these.
inline std::vector<double> breakpoints(InitialCondition ic) {
  std::vector<double> b = jump_locations(ic);
  if (ic == InitialCondition::slp) b.insert(b.end(), {0.0, 0.1, 0.2, 0.4, 0.405, 0.595, 0.6});
  return b;
}

inline double wrap_periodic(double x) {
  double y = std::fmod(x + 1.0, 2.0);
  if (y < 0.0) y += 2.0;
  return y - 1.0;
}

//! Cell averages of u_0(x - t) on \p grid (domain [-1, 1], period 2).
inline CellField exact_solution(InitialCondition ic, const Grid1D& grid, double t) {
  const auto q = gauss_legendre(5);
  const double shift = t - 2.0 * std::floor(t / 2.0);  // in [0, 2)
  std::vector<double> cuts;
  for (double b : breakpoints(ic)) {
    for (int k = -1; k <= 2; ++k) cuts.push_back(b + shift + 2.0 * k);
  }
  for (int k = -1; k <= 2; ++k) cuts.push_back(-1.0 + shift + 2.0 * k);
  CellField u(static_cast<std::size_t>(grid.n_cells));
  auto f = [&](double x) { return initial_value(ic, wrap_periodic(x - shift)); };
  for (int j = 0; j < grid.n_cells; ++j)
    u[static_cast<std::size_t>(j)] = interval_average(f, grid.face_left(j), grid.face_right(j), q, cuts);
  return u;
}

inline CellField initial_field(InitialCondition ic, const Grid1D& grid) {
  require_jumps_on_faces(grid, jump_locations(ic));
  const auto bp = breakpoints(ic);
  return cell_average_init(grid, [ic](double x) { return initial_value(ic, x); }, 5, bp);
}

//! L(u)_j = -(F_{j+1/2} - F_{j-1/2}) / dx with periodic ghosts.
class AdvectionOperator {
 public:
  AdvectionOperator(const Grid1D& grid, Scheme scheme, NonOpCounter* counter = nullptr)
      : grid_(grid), scheme_(std::move(scheme)), counter_(counter), ghost_(grid.n_cells, BoundaryKind::periodic),
        flux_(static_cast<std::size_t>(grid.n_cells) + 1) {
    if (grid.n_cells < kGhosts) throw std::invalid_argument("AdvectionOperator: need at least 3 cells");
  }

  void operator()(const State& u, State& out) {
    const int n = grid_.n_cells;
    ghost_.assign(u);
    const GhostField& g = ghost_;
    // Face f sits between cells f-1 and f, f = 0..n.
    for (int f = 0; f <= n; ++f) {
      const Stencil5 left{g[f - 3], g[f - 2], g[f - 1], g[f], g[f + 1]};
      const Stencil5 right{g[f - 2], g[f - 1], g[f], g[f + 1], g[f + 2]};
      const double um = scheme_.reconstruct(left, counter_);
      const double up = scheme_.reconstruct_right(right, counter_);
      flux_[static_cast<std::size_t>(f)] = lf_flux(um, up, 1.0);
    }
    const double inv_dx = 1.0 / grid_.dx();
    out.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      out[static_cast<std::size_t>(j)] = -(flux_[static_cast<std::size_t>(j) + 1] - flux_[static_cast<std::size_t>(j)]) * inv_dx;
  }

  const Scheme& scheme() const { return scheme_; }

 private:
  Grid1D grid_;
  Scheme scheme_;
  NonOpCounter* counter_;
  GhostField ghost_;
  std::vector<double> flux_;
};

enum class CflRule { fixed, accuracy };

//! CFL number: the fixed value, or dx^{2/3} for accuracy runs.
inline double cfl_number(CflRule rule, double dx, double fixed_cfl = 0.1) {
  return rule == CflRule::accuracy ? std::pow(dx, 2.0 / 3.0) : fixed_cfl;
}

inline CflRule default_cfl_rule(InitialCondition ic) {
  return (ic == InitialCondition::slp || ic == InitialCondition::bicwp) ? CflRule::fixed : CflRule::accuracy;
}

struct AdvectionProblem {
  InitialCondition ic = InitialCondition::sin;
  int n_cells = 10;
  double t_end = 2.0;
  CflRule cfl_rule = CflRule::accuracy;
  double fixed_cfl = 0.1;
};

struct AdvectionResult {
  CellField numeric;
  CellField exact;
  ErrorTriple errors;
  NonOpCounter non_op;
  long steps = 0;
  double dt = 0.0;
};

inline AdvectionResult solve_advection(const AdvectionProblem& p, const Scheme& scheme) {
  const Grid1D grid(-1.0, 1.0, p.n_cells);
  AdvectionResult r;
  r.numeric = initial_field(p.ic, grid);
  AdvectionOperator op(grid, scheme, &r.non_op);
  r.dt = cfl_number(p.cfl_rule, grid.dx(), p.fixed_cfl) * grid.dx();
  TimeLoopConfig cfg;
  cfg.t_end = p.t_end;
  r.steps = advance_to(r.numeric, cfg, fixed_step(r.dt), [&op](const State& u, State& out) { op(u, out); });
  r.exact = exact_solution(p.ic, grid, p.t_end);
  r.errors = error_norms(r.numeric, r.exact, grid.dx());
  return r;
}

}  // namespace mopweno
