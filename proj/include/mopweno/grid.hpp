#pragma once
//! \file grid.hpp
//! \brief Uniform 1D/2D Cartesian grids, ghost-cell storage and cell-average initialization.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mopweno {

//! Ghost layer width of the five-point global stencil.
inline constexpr int kGhosts = 3;

enum class BoundaryKind { periodic, transmissive };

using CellField = std::vector<double>;

struct Grid1D {
  double x_lo = -1.0;
  double x_hi = 1.0;
  int n_cells = 0;

  Grid1D() = default;
  Grid1D(double lo, double hi, int n) : x_lo(lo), x_hi(hi), n_cells(n) {
    if (n <= 0 || !(hi > lo)) throw std::invalid_argument("Grid1D: need n_cells > 0 and x_hi > x_lo");
  }

  double dx() const { return (x_hi - x_lo) / n_cells; }
  //! Center of cell j, 0-based.
  double center(int j) const { return x_lo + (j + 0.5) * dx(); }
  double face_left(int j) const { return x_lo + j * dx(); }
  double face_right(int j) const { return x_lo + (j + 1) * dx(); }
};

struct Grid2D {
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
  int nx = 0, ny = 0;

  Grid2D() = default;
  Grid2D(double xl, double xh, double yl, double yh, int nx_, int ny_)
      : x_lo(xl), x_hi(xh), y_lo(yl), y_hi(yh), nx(nx_), ny(ny_) {
    if (nx <= 0 || ny <= 0 || !(xh > xl) || !(yh > yl))
      throw std::invalid_argument("Grid2D: need positive cell counts and extents");
  }

  double dx() const { return (x_hi - x_lo) / nx; }
  double dy() const { return (y_hi - y_lo) / ny; }
  double xc(int i) const { return x_lo + (i + 0.5) * dx(); }
  double yc(int j) const { return y_lo + (j + 0.5) * dy(); }
};

//! Interior values plus kGhosts layers on each side; index range [-kGhosts, n + kGhosts).
class GhostField {
 public:
  GhostField() = default;
  explicit GhostField(int n, BoundaryKind kind = BoundaryKind::periodic)
      : n_(n), kind_(kind), data_(static_cast<std::size_t>(n + 2 * kGhosts), 0.0) {}

  int size() const { return n_; }
  BoundaryKind kind() const { return kind_; }
  double operator[](int j) const { return data_[static_cast<std::size_t>(j + kGhosts)]; }
  double& operator[](int j) { return data_[static_cast<std::size_t>(j + kGhosts)]; }
  std::span<const double> interior() const { return {data_.data() + kGhosts, static_cast<std::size_t>(n_)}; }
  const std::vector<double>& raw() const { return data_; }

  //! Copies \p field into the interior and populates the ghosts. No finiteness check.
  void assign(std::span<const double> field) {
    if (static_cast<int>(field.size()) != n_) throw std::invalid_argument("GhostField: size mismatch");
    std::copy(field.begin(), field.end(), data_.begin() + kGhosts);
    refresh();
  }

  void refresh() {
    double* u = data_.data() + kGhosts;
    for (int g = 1; g <= kGhosts; ++g) {
      if (kind_ == BoundaryKind::periodic) {
        u[-g] = u[n_ - g];
        u[n_ - 1 + g] = u[g - 1];
      } else {
        u[-g] = u[0];
        u[n_ - 1 + g] = u[n_ - 1];
      }
    }
  }

 private:
  int n_ = 0;
  BoundaryKind kind_ = BoundaryKind::periodic;
  std::vector<double> data_;
};

//! Periodic ghosts need n >= kGhosts so every ghost has a distinct interior source.
inline GhostField fill_ghosts(std::span<const double> field, BoundaryKind kind) {
  const int n = static_cast<int>(field.size());
  if (n < kGhosts) throw std::invalid_argument("fill_ghosts: need at least 3 interior cells");
  for (std::size_t j = 0; j < field.size(); ++j) {
    if (!std::isfinite(field[j]))
      throw std::invalid_argument("fill_ghosts: non-finite value in cell " + std::to_string(j));
  }
  GhostField g(n, kind);
  g.assign(field);
  return g;
}

//! Row-major 2D storage of T with ghost layers; (i, j) with i, j in [-kGhosts, n + kGhosts).
template <class T>
class GhostGrid2D {
 public:
  GhostGrid2D() = default;
  GhostGrid2D(int nx, int ny)
      : nx_(nx), ny_(ny), stride_(nx + 2 * kGhosts),
        data_(static_cast<std::size_t>((nx + 2 * kGhosts) * (ny + 2 * kGhosts))) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  //! Zero-gradient (transmissive) or periodic ghost filling; corners are filled too.
  void fill_ghosts(BoundaryKind kind) {
    auto src = [&](int k, int n) {
      if (k >= 0 && k < n) return k;
      if (kind == BoundaryKind::periodic) return ((k % n) + n) % n;
      return k < 0 ? 0 : n - 1;
    };
    for (int j = -kGhosts; j < ny_ + kGhosts; ++j) {
      for (int i = -kGhosts; i < nx_ + kGhosts; ++i) {
        if (i >= 0 && i < nx_ && j >= 0 && j < ny_) continue;
        (*this)(i, j) = (*this)(src(i, nx_), src(j, ny_));
      }
    }
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((j + kGhosts) * stride_ + (i + kGhosts));
  }
  int nx_ = 0, ny_ = 0, stride_ = 0;
  std::vector<T> data_;
};

//! Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {
//! Returns (P_n(x), P_n'(x)) by the three-term recurrence.
inline std::array<double, 2> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  if (n == 0) return {1.0, 0.0};
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}
}  // namespace detail

inline GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendre q;
  q.nodes.resize(static_cast<std::size_t>(n));
  q.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = detail::legendre(n, x);
      const double step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double dp = detail::legendre(n, x)[1];
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[static_cast<std::size_t>(i)] = -x;
    q.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    q.weights[static_cast<std::size_t>(i)] = w;
    q.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return q;
}

//! Average of f over [a, b], splitting at any interior breakpoints.
template <class F>
double interval_average(F&& f, double a, double b, const GaussLegendre& q,
                        std::span<const double> breakpoints = {}) {
  std::vector<double> cuts{a};
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double part = 0.0;
    for (std::size_t m = 0; m < q.nodes.size(); ++m) part += q.weights[m] * f(mid + half * q.nodes[m]);
    sum += part * half;
  }
  return sum / (b - a);
}

//! Per-cell Gauss-Legendre averages of a pointwise function.
template <class F>
CellField cell_average_init(const Grid1D& grid, F&& f, int quadrature_points = 5,
                            std::span<const double> breakpoints = {}) {
  if (quadrature_points < 5) throw std::invalid_argument("cell_average_init: need >= 5 quadrature points");
  const auto q = gauss_legendre(quadrature_points);
  CellField u(static_cast<std::size_t>(grid.n_cells));
  for (int j = 0; j < grid.n_cells; ++j) {
    const double v = interval_average(f, grid.face_left(j), grid.face_right(j), q, breakpoints);
    if (!std::isfinite(v)) throw std::invalid_argument("cell_average_init: non-finite average in cell " + std::to_string(j));
    u[static_cast<std::size_t>(j)] = v;
  }
  return u;
}

//! Throws if any jump location falls strictly inside a cell of \p grid.
inline void require_jumps_on_faces(const Grid1D& grid, std::span<const double> jumps) {
  const double dx = grid.dx();
  for (double x : jumps) {
    if (x <= grid.x_lo || x >= grid.x_hi) continue;
    const double s = (x - grid.x_lo) / dx;
    if (std::abs(s - std::round(s)) > 1e-9)
      throw std::invalid_argument("discontinuity at x=" + std::to_string(x) + " lies inside a cell for N=" +
                                  std::to_string(grid.n_cells));
  }
}

}  // namespace mopweno
