#pragma once
//! \file mappings.hpp
//! \brief Mapping functions of the mapped WENO family, written in the parameterized form
//! g(omega; m_P, P_{s,1}, ..., P_{s,m_P}) so that the per-substencil parameter row can be
//! swapped at evaluation time.
//!
//! Every evaluator is a template on the scalar type so the same formulas can be checked in
//! extended precision.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weno_core.hpp"

namespace mopweno {

enum class Family { identity, m, im, pm, ppm5, rm260, maim1, acm, mip_acmk };

//! Per-substencil parameters P_{s,1..m_P}; unused trailing slots are zero.
using ParamRow = std::array<double, 3>;

struct MappingSpec {
  Family family = Family::identity;
  int m_p = 0;
  std::array<ParamRow, 3> params{};  // indexed by substencil s
  // Family-global constants.
  int k = 0;
  double A = 0.0;
  double B = 1.0;       // sgm scale factor
  double delta = 0.0;   // sgm half-width (MAIM1) or its upper bound (ACM)
  double eps_a = 0.0;   // MAIM1 exponent regularizer
};

namespace detail {

template <class R>
R ipow(R x, int n) {
  R r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

//! base^p with base clamped below so that 0^p evaluates to 0 for p > 0.
template <class R>
R clamped_pow(R base, R p) {
  using std::exp;
  using std::log;
  const R floor(1e-300);
  return exp(p * log(base < floor ? floor : base));
}

}  // namespace detail

template <class R>
R eval_m(R w, R d) {
  return w * (d + d * d - 3 * d * w + w * w) / (d * d + (1 - 2 * d) * w);
}

template <class R>
R eval_im(R w, R d, int k, R A) {
  const R t = w - d;
  const R tk = detail::ipow<R>(t, k);
  const R den = tk * A + w * (1 - w);
  // Near zero the offset form cancels to roundoff of either sign; this form stays >= 0.
  if (w < d / 2) return w * (d * (1 - w) + A * tk) / den;
  return d + tk * t * A / den;
}

template <class R>
R eval_pm(R w, R d, int k) {
  R c1, c2;
  if (w < d / 2) {
    // d * (1 - (1-a)^n (1 + n a)) expanded in a so the leading a^2 term carries the sign.
    const int n = k + 1;
    const R a = w / d;
    std::array<double, 64> c{};
    double cb = 1.0;  // C(n, j-1)
    for (int j = 1; j <= n + 1 && j < 64; ++j) {
      const double cj = (j <= n) ? cb * (n - j + 1) / j : 0.0;
      c[static_cast<std::size_t>(j)] = ((j % 2 == 0) ? -1.0 : 1.0) * (cj - n * cb);
      cb = cj;
    }
    R acc(0);
    for (int j = std::min(n + 1, 63); j >= 2; --j) acc = acc * a + R(c[static_cast<std::size_t>(j)]);
    return d * a * a * acc;
  }
  if (w <= d) {
    c1 = (k % 2 == 0 ? R(1) : R(-1)) * R(k + 1) / detail::ipow<R>(d, k + 1);
    c2 = d / R(k + 1);
  } else {
    c1 = -R(k + 1) / detail::ipow<R>(R(1) - d, k + 1);
    c2 = (d - R(k + 2)) / R(k + 1);
  }
  return c1 * detail::ipow<R>(w - d, k + 1) * (w + c2) + d;
}

template <class R>
R eval_ppm5(R w, R d) {
  if (w <= d) {
    using std::expm1;
    using std::log1p;
    const R a = w / d;
    if (w < d / 2) return -d * expm1(5 * log1p(-a));
    return d * (1 + detail::ipow<R>(a - 1, 5));
  }
  const R b = 1 / (d - 1);
  return d + detail::ipow<R>(b, 4) * detail::ipow<R>(w - d, 5);
}

//! Denominator coefficients (a0, a1, a2, a3) of the rational mapping with m = 2, n = 6.
template <class R>
std::array<R, 4> rm260_coefficients(R d) {
  const R a0 = detail::ipow<R>(d, 6);
  const R a1 = -7 * detail::ipow<R>(d, 5);
  const R a2 = 21 * detail::ipow<R>(d, 4);
  const R a3 = detail::ipow<R>(R(1) - d, 6) - (a0 + a1 + a2);
  return {a0, a1, a2, a3};
}

template <class R>
R eval_rm260(R w, R d) {
  const auto a = rm260_coefficients(d);
  const R den = a[0] + w * (a[1] + w * (a[2] + w * a[3]));
  if (w < d / 2) {
    // The w^0..w^2 terms of d*den + (w-d)^7 vanish identically.
    const R q = (d * a[3] + 35 * detail::ipow<R>(d, 4)) +
                w * (-35 * detail::ipow<R>(d, 3) + w * (21 * d * d + w * (-7 * d + w)));
    return w * w * w * q / den;
  }
  return d + detail::ipow<R>(w - d, 7) / den;
}

template <class R>
R eval_sgm(R x, R delta, R B, int k) {
  using std::abs;
  const R ax = abs(x);
  if (ax >= delta) return x / ax;
  return x / (detail::ipow<R>(B * (delta * delta - x * x), k + 3) + ax);
}

template <class R>
R eval_maim1(R w, R d, R m, int k, R A, R delta, R eps_a) {
  const R t = w - d;
  const R gate = (k % 2 == 0) ? R(1) : eval_sgm(t, delta, R(1), k);
  const R tk = detail::ipow<R>(t, k);
  const R p = detail::clamped_pow<R>(w, d / (m * w + eps_a)) *
              detail::clamped_pow<R>(R(1) - w, (1 - d) / (m * (1 - w) + eps_a));
  const R den = A * gate * tk + p;
  if (w < d / 2) return (A * gate * tk * w + d * p) / den;
  return d + A * gate * tk * t / den;
}

//! Largest admissible sgm half-width for ACM, capped by \p mu.
inline double acm_delta(double d, double cfs, double mu) {
  const double bound = std::min({cfs, d - cfs, (1.0 - d) * (1.0 - cfs / d), cfs * (1.0 - d) / d});
  return std::min(mu, 0.5 * bound);
}

template <class R>
R eval_acm(R w, R d, R cfs, R delta, R B, int k) {
  if (w <= d) return d / 2 * eval_sgm(w - cfs, delta, B, k) + d / 2;
  const R cfs_bar = 1 - (1 - d) / d * cfs;
  return (1 - d) / 2 * eval_sgm(w - cfs_bar, delta, B, k) + (1 + d) / 2;
}

template <class R>
R eval_mip_acmk(R w, R d, R cfs, R ks) {
  const R cfs_bar = 1 - (1 - d) / d * cfs;
  if (w < cfs) return ks * w;
  if (w <= cfs_bar) return d;
  return 1 - ks * (1 - w);
}

//! g^X(omega; P) for the family of \p spec, using the parameter row \p p.
template <class R>
R evaluate(const MappingSpec& spec, const ParamRow& p, R w) {
  const R d(p[0]);
  switch (spec.family) {
    case Family::identity: return w;
    case Family::m: return eval_m(w, d);
    case Family::im: return eval_im(w, d, spec.k, R(spec.A));
    case Family::pm: return eval_pm(w, d, spec.k);
    case Family::ppm5: return eval_ppm5(w, d);
    case Family::rm260: return eval_rm260(w, d);
    case Family::maim1:
      return eval_maim1(w, d, R(p[1]), spec.k, R(spec.A), R(spec.delta), R(spec.eps_a));
    case Family::acm:
      return eval_acm(w, d, R(p[1]), R(acm_delta(p[0], p[1], spec.delta)), R(spec.B), spec.k);
    case Family::mip_acmk: return eval_mip_acmk(w, d, R(p[1]), R(p[2]));
  }
  return w;
}

//! Number of per-substencil parameters for each family.
inline int parameter_count(Family f) {
  switch (f) {
    case Family::identity: return 0;
    case Family::m:
    case Family::im:
    case Family::pm:
    case Family::ppm5:
    case Family::rm260: return 1;
    case Family::maim1:
    case Family::acm: return 2;
    case Family::mip_acmk: return 3;
  }
  return 0;
}

//! Critical-point order at omega = d_s; negative means unbounded (plateau families).
inline int critical_order(Family f, const MappingSpec& spec) {
  switch (f) {
    case Family::identity: return 0;
    case Family::m: return 2;
    case Family::im: return spec.k;
    case Family::pm: return spec.k;
    case Family::ppm5: return 4;
    case Family::rm260: return 3;
    case Family::maim1: return spec.k;
    case Family::acm:
    case Family::mip_acmk: return -1;
  }
  return 0;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::identity: return "js";
    case Family::m: return "m";
    case Family::im: return "im_2_0.1";
    case Family::pm: return "pm6";
    case Family::ppm5: return "ppm5";
    case Family::rm260: return "rm260";
    case Family::maim1: return "maim1";
    case Family::acm: return "acm";
    case Family::mip_acmk: return "mip_acmk";
  }
  return "?";
}

inline constexpr std::array<Family, 9> kAllFamilies{Family::identity, Family::m,     Family::im,
                                                    Family::pm,       Family::ppm5,  Family::rm260,
                                                    Family::maim1,    Family::acm,   Family::mip_acmk};

//! Throws std::invalid_argument when the spec does not match its family's parameter layout.
inline void validate(const MappingSpec& spec) {
  const int want = parameter_count(spec.family);
  if (spec.m_p != want)
    throw std::invalid_argument(std::string("mapping '") + family_name(spec.family) + "' expects m_P=" +
                                std::to_string(want) + ", got " + std::to_string(spec.m_p));
  for (int s = 0; s < 3; ++s) {
    const auto& p = spec.params[static_cast<std::size_t>(s)];
    if (want >= 1 && !(p[0] > 0.0 && p[0] < 1.0))
      throw std::invalid_argument("mapping parameter d_s must lie in (0,1)");
    if ((spec.family == Family::acm || spec.family == Family::mip_acmk) && !(p[1] > 0.0 && p[1] < p[0]))
      throw std::invalid_argument("CFS_s must lie in (0, d_s)");
    if (spec.family == Family::mip_acmk && !(p[2] >= 0.0 && p[2] <= p[0] / p[1]))
      throw std::invalid_argument("k_s must lie in [0, d_s/CFS_s]");
    if (spec.family == Family::maim1 && !(p[1] > 0.0)) throw std::invalid_argument("m_s must be positive");
  }
  if (spec.family == Family::im && (spec.k <= 0 || spec.k % 2 != 0 || !(spec.A > 0.0)))
    throw std::invalid_argument("IM mapping needs even k > 0 and A > 0");
  if (spec.family == Family::pm && (spec.k < 2 || spec.k > 60)) throw std::invalid_argument("PM mapping needs 2 <= k <= 60");
  if (spec.family == Family::rm260) {
    for (const auto& p : spec.params) {
      const auto a = rm260_coefficients(p[0]);
      for (int i = 0; i <= 1000; ++i) {
        const double w = i / 1000.0;
        if (!(a[0] + w * (a[1] + w * (a[2] + w * a[3])) > 0.0))
          throw std::invalid_argument("RM denominator is not positive on [0,1]");
      }
    }
  }
}

//! Default parameter set of each family on the ideal weights \p d.
inline MappingSpec default_spec(Family f, const Triple& d = kIdealWeights) {
  MappingSpec spec;
  spec.family = f;
  spec.m_p = parameter_count(f);
  for (int s = 0; s < 3; ++s) {
    auto& p = spec.params[static_cast<std::size_t>(s)];
    const double ds = d[static_cast<std::size_t>(s)];
    switch (f) {
      case Family::identity: p = {0.0, 0.0, 0.0}; break;
      case Family::maim1: p = {ds, 0.06, 0.0}; break;
      case Family::acm: p = {ds, ds / 10.0, 0.0}; break;
      case Family::mip_acmk: p = {ds, ds / 10.0, 0.0}; break;
      default: p = {ds, 0.0, 0.0}; break;
    }
  }
  switch (f) {
    case Family::im: spec.k = 2; spec.A = 0.1; break;
    case Family::pm: spec.k = 6; break;
    case Family::maim1:
      spec.k = 10;
      spec.A = 1e-6;
      spec.B = 1.0;
      spec.delta = 1e-6;
      spec.eps_a = 1e-40;
      break;
    case Family::acm:
      spec.k = 2;
      spec.A = 20.0;
      spec.B = 20.0;
      spec.delta = 1e-6;
      break;
    default: break;
  }
  return spec;
}

inline Family family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  throw std::invalid_argument("unknown mapping family '" + std::string(name) + "'");
}

//! A single mapping function g_s bound to its spec and substencil.
class MappingFn {
 public:
  MappingFn(MappingSpec spec, int s) : spec_(spec), s_(s) {
    if (s < 0 || s > 2) throw std::invalid_argument("substencil index must be 0, 1 or 2");
  }

  double operator()(double w) const { return evaluate(spec_, spec_.params[static_cast<std::size_t>(s_)], w); }
  const MappingSpec& spec() const { return spec_; }
  int substencil() const { return s_; }
  double ideal_weight() const { return spec_.params[static_cast<std::size_t>(s_)][0]; }

 private:
  MappingSpec spec_;
  int s_;
};

inline MappingFn make_mapping(Family family, int s, const MappingSpec& spec) {
  if (spec.family != family) throw std::invalid_argument("make_mapping: spec family mismatch");
  validate(spec);
  return MappingFn(spec, s);
}

inline MappingFn make_mapping(Family family, int s) { return make_mapping(family, s, default_spec(family)); }

inline MappingFn make_mapping(std::string_view name, int s) { return make_mapping(family_from_name(name), s); }

}  // namespace mopweno
