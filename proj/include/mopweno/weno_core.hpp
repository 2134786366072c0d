#pragma once
//! \file weno_core.hpp
//! \brief Fifth-order WENO building blocks: smoothness indicators, JS weights, the three
//! third-order substencil values and the weighted combination with a pluggable weight map.

#include <array>
#include <cmath>

namespace mopweno {

using Stencil5 = std::array<double, 5>;  // (u_{j-2}, u_{j-1}, u_j, u_{j+1}, u_{j+2})
using Triple = std::array<double, 3>;
using WeightTriple = Triple;

//! Ideal weights for r = 3, indexed by substencil s.
inline constexpr Triple kIdealWeights{0.1, 0.6, 0.3};
inline constexpr double kEpsilon = 1e-40;

inline Triple smoothness_indicators(const Stencil5& u) {
  constexpr double c1 = 13.0 / 12.0, c2 = 0.25;
  const double a0 = u[0] - 2.0 * u[1] + u[2], b0 = u[0] - 4.0 * u[1] + 3.0 * u[2];
  const double a1 = u[1] - 2.0 * u[2] + u[3], b1 = u[1] - u[3];
  const double a2 = u[2] - 2.0 * u[3] + u[4], b2 = 3.0 * u[2] - 4.0 * u[3] + u[4];
  return {c1 * a0 * a0 + c2 * b0 * b0, c1 * a1 * a1 + c2 * b1 * b1, c1 * a2 * a2 + c2 * b2 * b2};
}

//! Normalizes nonnegative values to sum one.
inline Triple normalize(const Triple& a) {
  const double inv = 1.0 / (a[0] + a[1] + a[2]);
  return {a[0] * inv, a[1] * inv, a[2] * inv};
}

inline WeightTriple js_weights(const Triple& beta, const Triple& d = kIdealWeights, double eps = kEpsilon) {
  Triple alpha;
  for (int s = 0; s < 3; ++s) {
    const double t = eps + beta[s];
    alpha[s] = d[s] / (t * t);
  }
  return normalize(alpha);
}

//! Third-order values at x_{j+1/2} from S_0, S_1, S_2.
inline Triple substencil_values(const Stencil5& u) {
  return {(2.0 * u[0] - 7.0 * u[1] + 11.0 * u[2]) / 6.0,
          (-u[1] + 5.0 * u[2] + 2.0 * u[3]) / 6.0,
          (2.0 * u[2] + 5.0 * u[3] - u[4]) / 6.0};
}

//! The identity weight map (WENO-JS).
struct IdentityWeights {
  WeightTriple operator()(const WeightTriple& w) const { return w; }
};

//! Left-biased u^-_{j+1/2} from the stencil centered at j. \p transform maps the JS weights to
//! (possibly unnormalized) nonnegative values; the result is always renormalized.
template <class Transform>
double reconstruct_interface(const Stencil5& u, Transform&& transform) {
  const WeightTriple w = normalize(transform(js_weights(smoothness_indicators(u))));
  const Triple q = substencil_values(u);
  return w[0] * q[0] + w[1] * q[1] + w[2] * q[2];
}

inline double reconstruct_interface(const Stencil5& u) { return reconstruct_interface(u, IdentityWeights{}); }

//! Right-biased u^+_{j-1/2} from the stencil centered at j, by mirror symmetry.
template <class Transform>
double reconstruct_interface_right(const Stencil5& u, Transform&& transform) {
  return reconstruct_interface(Stencil5{u[4], u[3], u[2], u[1], u[0]}, transform);
}

}  // namespace mopweno
