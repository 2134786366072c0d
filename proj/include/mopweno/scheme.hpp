#pragma once
//! \file scheme.hpp
//! \brief Reconstruction pipeline: JS weights, optional mapping (plain X or MOP-X), renormalize.

#include <stdexcept>
#include <string>
#include <string_view>

#include "mappings.hpp"
#include "op_transform.hpp"
#include "weno_core.hpp"

namespace mopweno {

struct Scheme {
  MappingSpec spec = default_spec(Family::identity);
  bool mop = false;
  std::string name = "weno-js";

  Family family() const { return spec.family; }

  //! Mapped (unnormalized) values for the given JS weights.
  Triple alphas(const WeightTriple& js) const {
    if (spec.family == Family::identity) return js;
    return mop ? mop_alphas(spec, js) : plain_alphas(spec, js);
  }

  //! Final normalized weights; records the mapping step in \p counter when given.
  WeightTriple weights(const WeightTriple& js, NonOpCounter* counter = nullptr) const {
    if (spec.family == Family::identity) {
      if (counter) ++counter->points;
      return js;
    }
    const Triple a = alphas(js);
    if (counter) counter->record(js, a);
    return normalize_or_ideal(a);
  }

  //! u^-_{j+1/2} from the stencil centered at j.
  double reconstruct(const Stencil5& u, NonOpCounter* counter = nullptr) const {
    const WeightTriple w = weights(js_weights(smoothness_indicators(u)), counter);
    const Triple q = substencil_values(u);
    return w[0] * q[0] + w[1] * q[1] + w[2] * q[2];
  }

  //! u^+_{j-1/2} from the stencil centered at j.
  double reconstruct_right(const Stencil5& u, NonOpCounter* counter = nullptr) const {
    return reconstruct(Stencil5{u[4], u[3], u[2], u[1], u[0]}, counter);
  }
};

namespace detail {
struct SchemeName {
  std::string_view name;
  Family family;
};
inline constexpr SchemeName kSchemeNames[] = {
    {"weno-js", Family::identity}, {"weno-m", Family::m},         {"weno-im", Family::im},
    {"weno-pm6", Family::pm},      {"weno-ppm5", Family::ppm5},   {"weno-rm260", Family::rm260},
    {"weno-maim1", Family::maim1}, {"weno-acm", Family::acm},     {"mip-weno-acmk", Family::mip_acmk},
    {"weno-acmk", Family::mip_acmk},
};
}  // namespace detail

//! Canonical display name, e.g. "MOP-WENO-M".
inline std::string display_name(Family f, bool mop) {
  std::string base;
  switch (f) {
    case Family::identity: base = "WENO-JS"; break;
    case Family::m: base = "WENO-M"; break;
    case Family::im: base = "WENO-IM(2,0.1)"; break;
    case Family::pm: base = "WENO-PM6"; break;
    case Family::ppm5: base = "WENO-PPM5"; break;
    case Family::rm260: base = "WENO-RM(260)"; break;
    case Family::maim1: base = "WENO-MAIM1"; break;
    case Family::acm: base = "WENO-ACM"; break;
    case Family::mip_acmk: base = mop ? "WENO-ACMk" : "MIP-WENO-ACMk"; break;
  }
  return mop ? "MOP-" + base : base;
}

inline std::string scheme_name(Family f, bool mop) {
  std::string base;
  for (const auto& e : detail::kSchemeNames) {
    if (e.family == f) {
      base = std::string(e.name);
      break;
    }
  }
  return mop ? "mop-" + base : base;
}

inline Scheme make_scheme(Family f, bool mop) {
  if (mop && f == Family::identity) throw std::invalid_argument("the OP transform needs a mapped family");
  Scheme s;
  s.spec = default_spec(f);
  validate(s.spec);
  s.mop = mop;
  s.name = scheme_name(f, mop);
  return s;
}

//! Parses names such as "weno-m", "mop-weno-pm6", "mip-weno-acmk" or "mop-weno-acmk".
inline Scheme parse_scheme(std::string_view name) {
  bool mop = false;
  std::string_view rest = name;
  if (rest.starts_with("mop-")) {
    mop = true;
    rest.remove_prefix(4);
  }
  for (const auto& e : detail::kSchemeNames) {
    if (rest == e.name) return make_scheme(e.family, mop);
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

}  // namespace mopweno
