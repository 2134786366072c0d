#pragma once
//! \file metrics.hpp
//! \brief Error norms, convergence orders, increased-error percentages and slice tools.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "grid.hpp"

namespace mopweno {

struct ErrorTriple {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

//! L1 = h sum|e|, L2 = sqrt(h sum e^2), Linf = max|e|.
inline ErrorTriple error_norms(std::span<const double> numeric, std::span<const double> exact, double h) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("error_norms: length mismatch");
  ErrorTriple e;
  double s1 = 0.0, s2 = 0.0;
  for (std::size_t j = 0; j < numeric.size(); ++j) {
    const double d = std::abs(exact[j] - numeric[j]);
    s1 += d;
    s2 += d * d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 = h * s1;
  e.l2 = std::sqrt(h * s2);
  return e;
}

//! log(e_coarse/e_fine)/log(ratio); NaN when either error is not positive.
inline double convergence_order(double e_coarse, double e_fine, double ratio = 2.0) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::log(e_coarse / e_fine) / std::log(ratio);
}

inline double increased_error_pct(double e_scheme, double e_reference) {
  if (!(e_reference > 0.0)) throw std::invalid_argument("increased_error_pct: reference error must be positive");
  return (e_scheme - e_reference) / e_reference * 100.0;
}

struct ConvergenceRow {
  int n = 0;
  ErrorTriple err;
  ErrorTriple order{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                    std::numeric_limits<double>::quiet_NaN()};
};

//! Fills orders from consecutive rows using the actual resolution ratio.
inline void fill_orders(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double r = static_cast<double>(rows[i].n) / rows[i - 1].n;
    rows[i].order = {convergence_order(rows[i - 1].err.l1, rows[i].err.l1, r),
                     convergence_order(rows[i - 1].err.l2, rows[i].err.l2, r),
                     convergence_order(rows[i - 1].err.linf, rows[i].err.linf, r)};
  }
}

enum class Axis { x, y };

struct SliceSample {
  double coord = 0.0;  // cell center along the slice
  double value = 0.0;
};

//! Values of a cell-centered 2D field along a grid line. With axis == x the row containing
//! y = \p coordinate is taken over cells whose intervals contain [lo, hi] sample points spaced by dx.
//! \p value(i, j) returns the requested variable of cell (i, j).
template <class ValueFn>
std::vector<SliceSample> slice_extract(const Grid2D& g, ValueFn&& value, Axis axis, double coordinate, double lo,
                                       double hi) {
  const bool along_x = axis == Axis::x;
  const double c_lo = along_x ? g.y_lo : g.x_lo, c_hi = along_x ? g.y_hi : g.x_hi;
  const double s_lo = along_x ? g.x_lo : g.y_lo, s_hi = along_x ? g.x_hi : g.y_hi;
  const double hc = along_x ? g.dy() : g.dx(), hs = along_x ? g.dx() : g.dy();
  const int nc = along_x ? g.ny : g.nx, ns = along_x ? g.nx : g.ny;
  if (!(coordinate >= c_lo && coordinate <= c_hi)) throw std::invalid_argument("slice_extract: coordinate outside domain");
  if (!(lo >= s_lo && hi <= s_hi && hi >= lo)) throw std::invalid_argument("slice_extract: range outside domain");

  auto cell_of = [](double x, double x0, double h, int n) {
    return std::clamp(static_cast<int>(std::floor((x - x0) / h + 1e-9)), 0, n - 1);
  };
  const int fixed = cell_of(coordinate, c_lo, hc, nc);
  const int first = cell_of(lo, s_lo, hs, ns);
  const int last = cell_of(hi, s_lo, hs, ns);
  std::vector<SliceSample> out;
  for (int k = first; k <= last; ++k) {
    const int i = along_x ? k : fixed, j = along_x ? fixed : k;
    out.push_back({s_lo + (k + 0.5) * hs, value(i, j)});
  }
  return out;
}

inline double total_variation(std::span<const SliceSample> s) {
  double tv = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) tv += std::abs(s[k].value - s[k - 1].value);
  return tv;
}

inline double total_variation(std::span<const double> v) {
  double tv = 0.0;
  for (std::size_t k = 1; k < v.size(); ++k) tv += std::abs(v[k] - v[k - 1]);
  return tv;
}

//! max - min over the slice.
inline double oscillation_amplitude(std::span<const SliceSample> s) {
  if (s.empty()) return 0.0;
  double lo = s[0].value, hi = s[0].value;
  for (const auto& p : s) {
    lo = std::min(lo, p.value);
    hi = std::max(hi, p.value);
  }
  return hi - lo;
}

}  // namespace mopweno
