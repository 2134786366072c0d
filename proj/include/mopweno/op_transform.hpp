#pragma once
//! \file op_transform.hpp
//! \brief Order-preserving (OP) construction for mapped WENO weights.
//!
//! For each substencil s the JS weight omega_s is mapped with the parameter row of the
//! substencil k* whose ideal weight is nearest to omega_s (smallest index on ties), instead of
//! the row of s itself. Because the nearest-ideal-weight classification is monotone in omega,
//! the resulting mapping set never reverses the order of the input weights.

#include <algorithm>
#include <array>
#include <cfloat>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mappings.hpp"
#include "weno_core.hpp"

namespace mopweno {

//! Distances closer than this are treated as ties, so ties resolve to the smallest index the
//! way they would in exact decimal arithmetic (e.g. omega = 0.2 is equidistant from 0.1 and 0.3).
inline constexpr double kTieTolerance = 4.0 * DBL_EPSILON;

//! Index of the ideal weight nearest to \p w, smallest index among (tolerance-) ties.
inline int min_dist_index(double w, const Triple& d = kIdealWeights) {
  double best = std::abs(w - d[0]);
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    const double dist = std::abs(w - d[static_cast<std::size_t>(i)]);
    if (dist < best - kTieTolerance) {
      best = dist;
      k = i;
    }
  }
  return k;
}

//! Ideal weights in ascending order with the interval edges that partition (0, 1].
struct SortedIdealWeights {
  Triple sorted{};        // d~_0 < d~_1 < d~_2
  std::array<int, 3> original_index{};
  std::array<double, 4> edges{};  // 0, (d~_0+d~_1)/2, (d~_1+d~_2)/2, 1

  explicit SortedIdealWeights(const Triple& d = kIdealWeights) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[static_cast<std::size_t>(a)] < d[static_cast<std::size_t>(b)]; });
    for (int i = 0; i < 3; ++i) {
      original_index[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
      sorted[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    edges = {0.0, 0.5 * (sorted[0] + sorted[1]), 0.5 * (sorted[1] + sorted[2]), 1.0};
  }

  //! i such that w lies in (edges[i], edges[i+1]]; w <= 0 maps to 0.
  int interval(double w) const {
    if (w <= edges[1]) return 0;
    if (w <= edges[2]) return 1;
    return 2;
  }
};

//! Mapped values of the plain scheme: alpha_s = g(omega_s; P_s).
inline Triple plain_alphas(const MappingSpec& spec, const WeightTriple& w) {
  Triple a;
  for (std::size_t s = 0; s < 3; ++s) a[s] = evaluate(spec, spec.params[s], w[s]);
  return a;
}

//! Parameter substitution: alpha_s = g(omega_s; P_{k*(omega_s)}).
inline Triple mop_alphas(const MappingSpec& spec, const WeightTriple& w, const Triple& d = kIdealWeights) {
  Triple a;
  for (std::size_t s = 0; s < 3; ++s) {
    const auto k = static_cast<std::size_t>(min_dist_index(w[s], d));
    a[s] = evaluate(spec, spec.params[k], w[s]);
  }
  return a;
}

//! The OP mapping as a function of omega alone (identical for every substencil).
inline double mop_map(const MappingSpec& spec, double w, const Triple& d = kIdealWeights) {
  return evaluate(spec, spec.params[static_cast<std::size_t>(min_dist_index(w, d))], w);
}

//! Normalizes mapped values; falls back to the ideal weights when the sum underflows.
inline WeightTriple normalize_or_ideal(const Triple& alpha, const Triple& d = kIdealWeights) {
  const double sum = alpha[0] + alpha[1] + alpha[2];
  if (!(sum > 1e-300)) return d;
  return {alpha[0] / sum, alpha[1] / sum, alpha[2] / sum};
}

inline WeightTriple mop_weights(const MappingSpec& spec, const WeightTriple& w) {
  return normalize_or_ideal(mop_alphas(spec, w));
}

//! Cheap per-point non-OP test on (input, output) triples.
inline bool is_non_op(const Triple& in, const Triple& out) {
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t n = m + 1; n < 3; ++n) {
      if (in[m] == in[n]) {
        if (out[m] != out[n]) return true;
      } else if ((in[m] - in[n]) * (out[m] - out[n]) < 0.0) {
        return true;
      }
    }
  }
  return false;
}

struct NonOpEntry {
  bool flagged = false;
  std::vector<std::pair<int, int>> pairs;  // offending (m, n), m < n
};

inline NonOpEntry detect_non_op(const Triple& in, const Triple& out) {
  NonOpEntry e;
  for (int m = 0; m < 3; ++m) {
    for (int n = m + 1; n < 3; ++n) {
      const auto um = static_cast<std::size_t>(m), un = static_cast<std::size_t>(n);
      const bool bad = (in[um] == in[un]) ? (out[um] != out[un]) : ((in[um] - in[un]) * (out[um] - out[un]) < 0.0);
      if (bad) e.pairs.emplace_back(m, n);
    }
  }
  e.flagged = !e.pairs.empty();
  return e;
}

//! Run-level aggregation of non-OP points; merge is commutative.
struct NonOpCounter {
  std::uint64_t points = 0;
  std::uint64_t flagged = 0;

  void record(const Triple& in, const Triple& out) {
    ++points;
    if (is_non_op(in, out)) ++flagged;
  }
  void merge(const NonOpCounter& o) {
    points += o.points;
    flagged += o.flagged;
  }
};

//! Outcome of a property sweep over a mapping set; empty failures means every check passed.
struct PropertyReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

//! A mapping set {g_0, g_1, g_2} as a callable (s, omega) -> g_s(omega).
using MappingSet = std::function<double(int, double)>;

//! Order preservation over sampled pairs: for omega_m > omega_n, g_m(omega_m) >= g_n(omega_n);
//! for omega_m == omega_n, equal outputs. \p samples must be ascending.
inline void check_order_preservation(const MappingSet& g, const std::vector<double>& samples, PropertyReport& rep) {
  const std::size_t n = samples.size();
  std::array<std::vector<double>, 3> val;
  for (int s = 0; s < 3; ++s) {
    val[static_cast<std::size_t>(s)].resize(n);
    for (std::size_t i = 0; i < n; ++i) val[static_cast<std::size_t>(s)][i] = g(s, samples[i]);
  }
  for (int m = 0; m < 3; ++m) {
    for (int q = 0; q < 3; ++q) {
      if (m == q) continue;
      const auto& gm = val[static_cast<std::size_t>(m)];
      const auto& gq = val[static_cast<std::size_t>(q)];
      double running_max = -1e300;  // max of g_q over strictly smaller samples
      for (std::size_t i = 0; i < n; ++i) {
        if (gm[i] < running_max) {
          rep.failures.push_back("C5: order reversed for (m,n)=(" + std::to_string(m) + "," + std::to_string(q) +
                                 ") near omega=" + std::to_string(samples[i]));
          return;
        }
        if (gm[i] != gq[i]) {
          rep.failures.push_back("C5: equal inputs mapped apart for (m,n)=(" + std::to_string(m) + "," +
                                 std::to_string(q) + ") at omega=" + std::to_string(samples[i]));
          return;
        }
        running_max = std::max(running_max, gq[i]);
      }
    }
  }
}

//! Checks the OP mapping of \p spec: range, fixed points at the sorted ideal weights, endpoints,
//! monotonicity inside each interval and order preservation across the set.
inline PropertyReport mop_properties_check(const MappingSpec& spec, int n_samples = 10000) {
  PropertyReport rep;
  const SortedIdealWeights sw;
  constexpr double tol = 1e-12;
  auto g = [&](double w) { return mop_map(spec, w); };

  std::vector<double> xs(static_cast<std::size_t>(n_samples) + 1);
  for (int i = 0; i <= n_samples; ++i) xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / n_samples;

  for (double x : xs) {
    const double v = g(x);
    if (!(v >= -tol && v <= 1.0 + tol)) {
      rep.failures.push_back("C2: value " + std::to_string(v) + " outside [0,1] at omega=" + std::to_string(x));
      break;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const double di = sw.sorted[static_cast<std::size_t>(i)];
    if (sw.interval(di) != i) rep.failures.push_back("C3: sorted ideal weight outside its own interval");
    if (std::abs(g(di) - di) > tol) rep.failures.push_back("C3: g(d~_" + std::to_string(i) + ") != d~_" + std::to_string(i));
  }
  if (std::abs(g(0.0)) > tol) rep.failures.push_back("C4: g(0) != 0");
  if (std::abs(g(1.0) - 1.0) > tol) rep.failures.push_back("C4: g(1) != 1");

  // C1 on interval interiors only.
  double prev = 0.0;
  int prev_interval = -1;
  for (double x : xs) {
    if (x <= 0.0) continue;
    const int iv = sw.interval(x);
    const double v = g(x);
    const bool on_edge = x == sw.edges[static_cast<std::size_t>(iv) + 1];
    if (iv == prev_interval && v < prev - tol) {
      rep.failures.push_back("C1: decreasing inside interval " + std::to_string(iv) + " at omega=" + std::to_string(x));
      break;
    }
    prev = v;
    prev_interval = on_edge ? -1 : iv;
  }

  check_order_preservation([&](int, double w) { return g(w); }, xs, rep);
  return rep;
}

//! Same order-preservation sweep applied to the plain (per-substencil) mapping set.
inline PropertyReport plain_order_check(const MappingSpec& spec, int n_samples = 10000) {
  PropertyReport rep;
  std::vector<double> xs(static_cast<std::size_t>(n_samples) + 1);
  for (int i = 0; i <= n_samples; ++i) xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / n_samples;
  check_order_preservation(
      [&](int s, double w) { return evaluate(spec, spec.params[static_cast<std::size_t>(s)], w); }, xs, rep);
  return rep;
}

}  // namespace mopweno
