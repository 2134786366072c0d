#pragma once
//! \file euler2d.hpp
//! \brief 2D compressible Euler solver: dimension-by-dimension WENO reconstruction in local
//! characteristic variables with a global Lax-Friedrichs flux and transmissive boundaries.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "integrator.hpp"
#include "metrics.hpp"
#include "op_transform.hpp"
#include "scheme.hpp"

namespace mopweno {

inline constexpr double kGamma = 1.4;

template <class T>
using ConsT = std::array<T, 4>;  // (rho, rho u, rho v, E)
using Cons = ConsT<double>;
using Mat4 = std::array<std::array<double, 4>, 4>;

struct Prim {
  double rho = 1.0, u = 0.0, v = 0.0, p = 1.0;
};

inline Cons prim_to_cons(const Prim& w) {
  return {w.rho, w.rho * w.u, w.rho * w.v, w.p / (kGamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

//! No positivity check; see checked_prim.
inline Prim cons_to_prim(const Cons& U) {
  const double u = U[1] / U[0], v = U[2] / U[0];
  return {U[0], u, v, (kGamma - 1.0) * (U[3] - 0.5 * U[0] * (u * u + v * v))};
}

//! cons_to_prim that throws SolverError on rho <= 0 or p <= 0; \p where describes the location.
inline Prim checked_prim(const Cons& U, const std::string& where) {
  const Prim w = cons_to_prim(U);
  if (!(w.rho > 0.0) || !(w.p > 0.0))
    throw SolverError("positivity failure (rho=" + std::to_string(w.rho) + ", p=" + std::to_string(w.p) + ") " + where);
  return w;
}

inline double sound_speed(const Prim& w) { return std::sqrt(kGamma * w.p / w.rho); }

//! x-direction physical flux; templated so it can be differentiated with complex steps.
template <class T>
ConsT<T> flux_x(const ConsT<T>& U) {
  const T u = U[1] / U[0];
  const T p = T(kGamma - 1.0) * (U[3] - T(0.5) * (U[1] * U[1] + U[2] * U[2]) / U[0]);
  return {U[1], U[1] * u + p, U[2] * u, u * (U[3] + p)};
}

//! y-direction flux, obtained from flux_x by exchanging the momentum components.
template <class T>
ConsT<T> flux_y(const ConsT<T>& U) {
  const ConsT<T> F = flux_x(ConsT<T>{U[0], U[2], U[1], U[3]});
  return {F[0], F[2], F[1], F[3]};
}

struct Eigensystem {
  Mat4 L{};  // rows: left eigenvectors
  Mat4 R{};  // columns: right eigenvectors
  std::array<double, 4> lambda{};
};

//! Eigen-decomposition of the x-flux Jacobian at \p w.
inline Eigensystem x_eigensystem(const Prim& w) {
  if (!(w.rho > 0.0) || !(w.p > 0.0)) throw SolverError("positivity failure in eigensystem state");
  const double u = w.u, v = w.v, c = sound_speed(w);
  const double q2 = u * u + v * v;
  const double H = kGamma / (kGamma - 1.0) * w.p / w.rho + 0.5 * q2;
  const double b1 = (kGamma - 1.0) / (c * c), b2 = 0.5 * b1 * q2;

  Eigensystem e;
  e.lambda = {u - c, u, u, u + c};
  const std::array<Cons, 4> r{Cons{1.0, u - c, v, H - u * c}, Cons{1.0, u, v, 0.5 * q2}, Cons{0.0, 0.0, 1.0, v},
                              Cons{1.0, u + c, v, H + u * c}};
  for (int k = 0; k < 4; ++k)
    for (int m = 0; m < 4; ++m) e.R[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
  e.L[0] = {0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1};
  e.L[1] = {1.0 - b2, b1 * u, b1 * v, -b1};
  e.L[2] = {-v, 0.0, 1.0, 0.0};
  e.L[3] = {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1};
  return e;
}

//! y-direction eigensystem: the x system of the momentum-swapped state, conjugated by the swap.
inline Eigensystem y_eigensystem(const Prim& w) {
  Eigensystem e = x_eigensystem(Prim{w.rho, w.v, w.u, w.p});
  for (auto& row : e.L) std::swap(row[1], row[2]);
  std::swap(e.R[1], e.R[2]);
  return e;
}

inline Cons mat_vec(const Mat4& A, const Cons& x) {
  Cons y{};
  for (std::size_t i = 0; i < 4; ++i) y[i] = A[i][0] * x[0] + A[i][1] * x[1] + A[i][2] * x[2] + A[i][3] * x[3];
  return y;
}

inline Mat4 mat_mul(const Mat4& A, const Mat4& B) {
  Mat4 C{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) C[i][j] += A[i][k] * B[k][j];
  return C;
}

inline Prim face_average(const Prim& a, const Prim& b) {
  return {0.5 * (a.rho + b.rho), 0.5 * (a.u + b.u), 0.5 * (a.v + b.v), 0.5 * (a.p + b.p)};
}

inline Cons swap_momentum(const Cons& U) { return {U[0], U[2], U[1], U[3]}; }

//! Interface states along one grid line written in x orientation. \p line holds cells
//! -3..n+2 (index offset kGhosts); face f (0..n) lies between cells f-1 and f.
inline void reconstruct_line(const std::vector<Cons>& line, int n, const Scheme& scheme, NonOpCounter* counter,
                             std::vector<Cons>& um, std::vector<Cons>& up) {
  um.resize(static_cast<std::size_t>(n) + 1);
  up.resize(static_cast<std::size_t>(n) + 1);
  auto cell = [&](int i) -> const Cons& { return line[static_cast<std::size_t>(i + kGhosts)]; };
  std::array<Cons, 6> w;
  for (int f = 0; f <= n; ++f) {
    const Prim avg = face_average(cons_to_prim(cell(f - 1)), cons_to_prim(cell(f)));
    if (!(avg.rho > 0.0) || !(avg.p > 0.0))
      throw SolverError("positivity failure in face-average state at face " + std::to_string(f));
    const Eigensystem es = x_eigensystem(avg);
    for (int m = 0; m < 6; ++m) w[static_cast<std::size_t>(m)] = mat_vec(es.L, cell(f - 3 + m));
    Cons cm{}, cp{};
    for (std::size_t k = 0; k < 4; ++k) {
      cm[k] = scheme.reconstruct(Stencil5{w[0][k], w[1][k], w[2][k], w[3][k], w[4][k]}, counter);
      cp[k] = scheme.reconstruct_right(Stencil5{w[1][k], w[2][k], w[3][k], w[4][k], w[5][k]}, counter);
    }
    um[static_cast<std::size_t>(f)] = mat_vec(es.R, cm);
    up[static_cast<std::size_t>(f)] = mat_vec(es.R, cp);
  }
}

//! Row-major conserved field with ghosts.
using EulerField = GhostGrid2D<Cons>;

struct InterfaceStates {
  // Indexed [line][face]; x: line = row j, face = 0..nx; y: line = column i, face = 0..ny.
  std::vector<std::vector<Cons>> minus, plus;
};

//! Interface states for every face normal to \p axis. Ghosts of \p field must be filled.
inline InterfaceStates reconstruct_direction(const EulerField& field, Axis axis, const Scheme& scheme,
                                             NonOpCounter* counter = nullptr) {
  const bool along_x = axis == Axis::x;
  const int n = along_x ? field.nx() : field.ny(), lines = along_x ? field.ny() : field.nx();
  InterfaceStates out;
  out.minus.resize(static_cast<std::size_t>(lines));
  out.plus.resize(static_cast<std::size_t>(lines));
  std::vector<Cons> line(static_cast<std::size_t>(n + 2 * kGhosts));
  for (int l = 0; l < lines; ++l) {
    for (int k = -kGhosts; k < n + kGhosts; ++k)
      line[static_cast<std::size_t>(k + kGhosts)] = along_x ? field(k, l) : swap_momentum(field(l, k));
    auto& m = out.minus[static_cast<std::size_t>(l)];
    auto& p = out.plus[static_cast<std::size_t>(l)];
    reconstruct_line(line, n, scheme, counter, m, p);
    if (!along_x) {
      for (auto& s : m) s = swap_momentum(s);
      for (auto& s : p) s = swap_momentum(s);
    }
  }
  return out;
}

//! Global LF flux in x orientation.
inline Cons lf_flux_x(const Cons& a, const Cons& b, double alpha) {
  const Cons fa = flux_x(a), fb = flux_x(b);
  Cons f;
  for (std::size_t k = 0; k < 4; ++k) f[k] = 0.5 * (fa[k] + fb[k] - alpha * (b[k] - a[k]));
  return f;
}

enum class DtForm { sum, min };

//! Semi-discrete operator on a flat state of nx*ny*4 values, cell (i, j) at ((j*nx)+i)*4.
class EulerOperator {
 public:
  EulerOperator(const Grid2D& grid, Scheme scheme, NonOpCounter* counter = nullptr)
      : grid_(grid), scheme_(std::move(scheme)), counter_(counter), field_(grid.nx, grid.ny) {
    if (grid.nx < kGhosts || grid.ny < kGhosts) throw std::invalid_argument("EulerOperator: grid too small");
  }

  void set_time(double t) { time_ = t; }

  //! Loads \p u into the ghosted field, checks positivity and returns (alpha_x, alpha_y).
  std::array<double, 2> load(const State& u) {
    double ax = 0.0, ay = 0.0;
    for (int j = 0; j < grid_.ny; ++j) {
      for (int i = 0; i < grid_.nx; ++i) {
        const std::size_t o = cell_offset(i, j);
        const Cons U{u[o], u[o + 1], u[o + 2], u[o + 3]};
        field_(i, j) = U;
        const Prim w = cons_to_prim(U);
        if (!(w.rho > 0.0) || !(w.p > 0.0) || !std::isfinite(w.rho) || !std::isfinite(w.p))
          throw SolverError("positivity failure at cell (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") near t=" + std::to_string(time_));
        const double c = sound_speed(w);
        ax = std::max(ax, std::abs(w.u) + c);
        ay = std::max(ay, std::abs(w.v) + c);
      }
    }
    field_.fill_ghosts(BoundaryKind::transmissive);
    return {ax, ay};
  }

  void operator()(const State& u, State& out) {
    const auto [ax, ay] = load(u);
    out.assign(u.size(), 0.0);
    const double idx = 1.0 / grid_.dx(), idy = 1.0 / grid_.dy();
    sweep(Axis::x, ax, idx, out);
    sweep(Axis::y, ay, idy, out);
  }

  //! Time step from the wave speeds of \p u.
  double stable_dt(const State& u, double cfl, DtForm form) {
    const auto [ax, ay] = load(u);
    if (form == DtForm::sum) return cfl / (ax / grid_.dx() + ay / grid_.dy());
    return cfl * std::min(grid_.dx() / ax, grid_.dy() / ay);
  }

  std::size_t cell_offset(int i, int j) const { return (static_cast<std::size_t>(j) * grid_.nx + i) * 4; }
  const Grid2D& grid() const { return grid_; }

 private:
  void sweep(Axis axis, double alpha, double inv_h, State& out) {
    const bool along_x = axis == Axis::x;
    const int n = along_x ? grid_.nx : grid_.ny, lines = along_x ? grid_.ny : grid_.nx;
    line_.resize(static_cast<std::size_t>(n + 2 * kGhosts));
    flux_.resize(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l < lines; ++l) {
      for (int k = -kGhosts; k < n + kGhosts; ++k)
        line_[static_cast<std::size_t>(k + kGhosts)] = along_x ? field_(k, l) : swap_momentum(field_(l, k));
      try {
        reconstruct_line(line_, n, scheme_, counter_, um_, up_);
      } catch (const SolverError& e) {
        throw SolverError(std::string(e.what()) + (along_x ? " of row " : " of column ") + std::to_string(l) +
                          " near t=" + std::to_string(time_));
      }
      for (int f = 0; f <= n; ++f)
        flux_[static_cast<std::size_t>(f)] = lf_flux_x(um_[static_cast<std::size_t>(f)], up_[static_cast<std::size_t>(f)], alpha);
      for (int k = 0; k < n; ++k) {
        const std::size_t o = along_x ? cell_offset(k, l) : cell_offset(l, k);
        Cons d;
        for (std::size_t c = 0; c < 4; ++c) d[c] = -(flux_[static_cast<std::size_t>(k) + 1][c] - flux_[static_cast<std::size_t>(k)][c]) * inv_h;
        if (!along_x) d = swap_momentum(d);
        for (std::size_t c = 0; c < 4; ++c) out[o + c] += d[c];
      }
    }
  }

  Grid2D grid_;
  Scheme scheme_;
  NonOpCounter* counter_;
  EulerField field_;
  double time_ = 0.0;
  std::vector<Cons> line_, um_, up_, flux_;
};

// ---- problem setups -------------------------------------------------------------------------

enum class EulerProblem { shock_vortex, riemann4 };

inline EulerProblem euler_problem_from_name(std::string_view s) {
  if (s == "shock_vortex") return EulerProblem::shock_vortex;
  if (s == "riemann4") return EulerProblem::riemann4;
  throw std::invalid_argument("unknown 2D problem '" + std::string(s) + "'");
}

inline const char* euler_problem_name(EulerProblem p) {
  return p == EulerProblem::shock_vortex ? "shock_vortex" : "riemann4";
}

struct ShockVortexInit {
  static constexpr double eps = 0.3, rc = 0.05, alpha = 0.204, xc = 0.25, yc = 0.5;
  static constexpr double p_r = 1.3;

  static Prim left() { return {1.0, std::sqrt(kGamma), 0.0, 1.0}; }
  static Prim right() {
    const Prim l = left();
    const double g = kGamma;
    return {l.rho * (g - 1.0 + (g + 1.0) * p_r) / (g + 1.0 + (g - 1.0) * p_r),
            l.u * (1.0 - p_r) / std::sqrt(g - 1.0 + p_r * (g + 1.0)), 0.0, p_r};
  }
  static Prim at(double x, double y) {
    if (x >= 0.5) return right();
    const Prim l = left();
    const double g = kGamma;
    const double r2 = ((x - xc) * (x - xc) + (y - yc) * (y - yc)) / (rc * rc);
    const double e = std::exp(alpha * (1.0 - r2));
    const double dT = -(g - 1.0) * eps * eps * e * e / (4.0 * alpha * g);
    const double drho = l.rho * l.rho / ((g - 1.0) * l.p) * dT;
    const double dp = g * l.rho * l.rho / ((g - 1.0) * l.rho) * dT;
    return {l.rho + drho, l.u + eps * (y - yc) / rc * e, l.v - eps * (x - xc) / rc * e, l.p + dp};
  }
};

struct Riemann4Init {
  static Prim at(double x, double y) {
    if (x >= 0.5 && y >= 0.5) return {1.1, 0.0, 0.0, 1.1};
    if (x < 0.5 && y >= 0.5) return {0.5065, 0.8939, 0.0, 0.35};
    if (x < 0.5) return {1.1, 0.8939, 0.8939, 1.1};
    return {0.5065, 0.0, 0.8939, 0.35};
  }
};

inline Prim euler_initial_point(EulerProblem p, double x, double y) {
  return p == EulerProblem::shock_vortex ? ShockVortexInit::at(x, y) : Riemann4Init::at(x, y);
}

//! Cell averages of the conserved variables by 5x5 Gauss-Legendre quadrature. The jump lines
//! x = 0.5 (and y = 0.5 for riemann4) must be cell faces.
inline State euler_initial_field(EulerProblem p, const Grid2D& g) {
  require_jumps_on_faces(Grid1D(g.x_lo, g.x_hi, g.nx), std::array<double, 1>{0.5});
  if (p == EulerProblem::riemann4) require_jumps_on_faces(Grid1D(g.y_lo, g.y_hi, g.ny), std::array<double, 1>{0.5});
  const auto q = gauss_legendre(5);
  State u(static_cast<std::size_t>(g.nx) * g.ny * 4);
  const double hx = 0.5 * g.dx(), hy = 0.5 * g.dy();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      Cons acc{};
      for (std::size_t a = 0; a < q.nodes.size(); ++a) {
        for (std::size_t b = 0; b < q.nodes.size(); ++b) {
          const Cons U = prim_to_cons(euler_initial_point(p, g.xc(i) + hx * q.nodes[a], g.yc(j) + hy * q.nodes[b]));
          const double wgt = 0.25 * q.weights[a] * q.weights[b];
          for (std::size_t k = 0; k < 4; ++k) acc[k] += wgt * U[k];
        }
      }
      const std::size_t o = (static_cast<std::size_t>(j) * g.nx + i) * 4;
      for (std::size_t k = 0; k < 4; ++k) u[o + k] = acc[k];
    }
  }
  return u;
}

struct EulerRun {
  EulerProblem problem = EulerProblem::shock_vortex;
  int n = 100;  // cells per direction on [0,1]^2
  double t_end = 0.35;
  double cfl = 0.5;
  DtForm dt_form = DtForm::sum;
};

inline double default_t_end(EulerProblem p) { return p == EulerProblem::shock_vortex ? 0.35 : 0.25; }

struct EulerResult {
  Grid2D grid;
  State u;
  NonOpCounter non_op;
  long steps = 0;
};

inline EulerResult solve_euler(const EulerRun& run, const Scheme& scheme) {
  EulerResult r;
  r.grid = Grid2D(0.0, 1.0, 0.0, 1.0, run.n, run.n);
  r.u = euler_initial_field(run.problem, r.grid);
  EulerOperator op(r.grid, scheme, &r.non_op);
  EulerOperator probe(r.grid, scheme);
  TimeLoopConfig cfg;
  cfg.t_end = run.t_end;
  r.steps = advance_to(
      r.u, cfg,
      [&](const State& u, double t) {
        op.set_time(t);
        probe.set_time(t);
        return probe.stable_dt(u, run.cfl, run.dt_form);
      },
      [&op](const State& u, State& out) { op(u, out); });
  return r;
}

//! Primitive value of cell (i, j): var 0..3 = rho, u, v, p.
inline double euler_primitive(const EulerResult& r, int i, int j, int var) {
  const std::size_t o = (static_cast<std::size_t>(j) * r.grid.nx + i) * 4;
  const Prim w = cons_to_prim(Cons{r.u[o], r.u[o + 1], r.u[o + 2], r.u[o + 3]});
  switch (var) {
    case 0: return w.rho;
    case 1: return w.u;
    case 2: return w.v;
    default: return w.p;
  }
}

//! Density slice used as the oscillation proxy for each problem.
struct SliceSpec {
  Axis axis = Axis::x;
  double coordinate = 0.65, lo = 0.70, hi = 0.76;
};

inline SliceSpec default_slice(EulerProblem p) {
  if (p == EulerProblem::shock_vortex) return {Axis::x, 0.65, 0.70, 0.76};
  return {Axis::x, 0.5, 0.65, 0.692};
}

inline std::vector<SliceSample> density_slice(const EulerResult& r, const SliceSpec& s) {
  return slice_extract(r.grid, [&](int i, int j) { return euler_primitive(r, i, j, 0); }, s.axis, s.coordinate, s.lo,
                       s.hi);
}

}  // namespace mopweno
