#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <string>

#include "mopweno/mappings.hpp"

using namespace mopweno;
using HP = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>, boost::multiprecision::et_off>;

namespace {
constexpr double kTol = 1e-12;

std::string label(Family f, int s) { return std::string(family_name(f)) + " s=" + std::to_string(s); }
}  // namespace

TEST(EvalM, Examples) {
  for (double d : {0.1, 0.3, 0.6}) EXPECT_NEAR(eval_m(d, d), d, 1e-15);
  EXPECT_EQ(eval_m(0.0, 0.1), 0.0);
  EXPECT_NEAR(eval_m(1.0, 0.1), 1.0, 1e-15);
  EXPECT_NEAR(eval_m(0.5, 0.1), 0.105 / 0.41, 1e-15);
  EXPECT_NEAR(eval_m(0.5, 0.1), 0.2560976, 1e-7);
}

TEST(EvalM, ConstructedNonOpValues) {
  EXPECT_NEAR(eval_m(0.15, 0.1), 0.100962, 1e-6);
  EXPECT_NEAR(eval_m(0.14, 0.1), 0.100525, 1e-6);
  EXPECT_NEAR(eval_m(0.14, 0.3), 0.27195, 1e-5);
}

TEST(EvalIM, Examples) {
  for (double d : {0.1, 0.3, 0.6}) EXPECT_NEAR(eval_im(d, d, 2, 0.1), d, 1e-15);
  EXPECT_NEAR(eval_im(0.0, 0.1, 2, 0.1), 0.0, 1e-15);
  EXPECT_NEAR(eval_im(1.0, 0.3, 2, 0.1), 1.0, 1e-15);
}

TEST(EvalPM, Examples) {
  for (double d : {0.1, 0.3, 0.6}) {
    EXPECT_NEAR(eval_pm(d, d, 6), d, 1e-15);
    EXPECT_NEAR(eval_pm(0.0, d, 6), 0.0, 1e-13);
    EXPECT_NEAR(eval_pm(1.0, d, 6), 1.0, 1e-13);
  }
}

TEST(EvalPPM5, Examples) {
  for (double d : {0.1, 0.3, 0.6}) {
    EXPECT_NEAR(eval_ppm5(d, d), d, 1e-15);
    EXPECT_NEAR(eval_ppm5(0.0, d), 0.0, 1e-15);
  }
  EXPECT_NEAR(eval_ppm5(1.0, 0.6), 1.0, 1e-14);
}

TEST(EvalRM260, ExamplesAndDenominator) {
  for (double d : {0.1, 0.3, 0.6}) {
    EXPECT_NEAR(eval_rm260(d, d), d, 1e-15);
    EXPECT_NEAR(eval_rm260(0.0, d), 0.0, 1e-13);
    EXPECT_NEAR(eval_rm260(1.0, d), 1.0, 1e-13);
    const auto a = rm260_coefficients(d);
    EXPECT_NEAR(a[0] + a[1] + a[2] + a[3], std::pow(1.0 - d, 6), 1e-15);
  }
}

TEST(EvalSgm, Examples) {
  const double delta = 1e-6;
  EXPECT_EQ(eval_sgm(2 * delta, delta, 1.0, 10), 1.0);
  EXPECT_EQ(eval_sgm(-2 * delta, delta, 1.0, 10), -1.0);
  EXPECT_EQ(eval_sgm(0.0, delta, 1.0, 10), 0.0);
  EXPECT_NEAR(eval_sgm(delta / 2, delta, 1.0, 10), 1.0, 1e-12);
}

TEST(EvalMAIM1, Examples) {
  for (double d : {0.1, 0.3, 0.6}) {
    EXPECT_NEAR(eval_maim1(d, d, 0.06, 10, 1e-6, 1e-6, 1e-40), d, 1e-15);
    EXPECT_NEAR(eval_maim1(0.0, d, 0.06, 10, 1e-6, 1e-6, 1e-40), 0.0, 1e-12);
    EXPECT_NEAR(eval_maim1(1.0, d, 0.06, 10, 1e-6, 1e-6, 1e-40), 1.0, 1e-12);
  }
}

TEST(EvalACM, Examples) {
  for (double d : {0.1, 0.3, 0.6}) {
    const double cfs = d / 10, delta = acm_delta(d, cfs, 1e-6);
    EXPECT_NEAR(eval_acm(d, d, cfs, delta, 20.0, 2), d, 1e-15);
    EXPECT_NEAR(eval_acm(0.0, d, cfs, delta, 20.0, 2), 0.0, 1e-15);
    EXPECT_NEAR(eval_acm(1.0, d, cfs, delta, 20.0, 2), 1.0, 1e-15);
  }
}

TEST(EvalACM, DeltaRespectsStrictBound) {
  for (double d : {0.1, 0.3, 0.6}) {
    const double cfs = d / 10;
    const double bound = std::min({cfs, d - cfs, (1 - d) * (1 - cfs / d), cfs * (1 - d) / d});
    EXPECT_LT(acm_delta(d, cfs, 1e-6), bound);
    EXPECT_LE(acm_delta(d, cfs, 1e-6), 1e-6);
  }
}

TEST(EvalMipAcmk, Examples) {
  for (double d : {0.1, 0.3, 0.6}) {
    const double cfs = d / 10, cfs_bar = 1 - (1 - d) / d * cfs;
    EXPECT_EQ(eval_mip_acmk(cfs, d, cfs, 0.0), d);
    EXPECT_EQ(eval_mip_acmk(0.5 * (cfs + cfs_bar), d, cfs, 0.0), d);
    EXPECT_EQ(eval_mip_acmk(cfs / 2, d, cfs, 0.0), 0.0);
    EXPECT_EQ(eval_mip_acmk((1 + cfs_bar) / 2, d, cfs, 0.0), 1.0);
  }
}

TEST(Registry, NamesRoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_THROW(family_from_name("weno-z"), std::invalid_argument);
}

TEST(Registry, TableParameterCounts) {
  EXPECT_EQ(parameter_count(Family::m), 1);
  EXPECT_EQ(parameter_count(Family::rm260), 1);
  EXPECT_EQ(parameter_count(Family::maim1), 2);
  EXPECT_EQ(parameter_count(Family::acm), 2);
  EXPECT_EQ(parameter_count(Family::mip_acmk), 3);
  const auto im = default_spec(Family::im);
  EXPECT_EQ(im.k, 2);
  EXPECT_DOUBLE_EQ(im.A, 0.1);
  EXPECT_EQ(default_spec(Family::pm).k, 6);
  const auto maim = default_spec(Family::maim1);
  EXPECT_EQ(maim.k, 10);
  EXPECT_DOUBLE_EQ(maim.A, 1e-6);
  EXPECT_DOUBLE_EQ(maim.params[1][1], 0.06);
  const auto acm = default_spec(Family::acm);
  EXPECT_DOUBLE_EQ(acm.B, 20.0);
  EXPECT_EQ(acm.k, 2);
  EXPECT_DOUBLE_EQ(acm.params[2][1], 0.03);
  EXPECT_DOUBLE_EQ(default_spec(Family::mip_acmk).params[1][2], 0.0);
}

TEST(MakeMapping, Examples) {
  EXPECT_NEAR(make_mapping(Family::m, 0)(0.5), 0.105 / 0.41, 1e-15);
  EXPECT_EQ(make_mapping(Family::identity, 1)(0.37), 0.37);
  EXPECT_NEAR(make_mapping(Family::im, 1)(0.6), 0.6, 1e-15);
  EXPECT_NEAR(make_mapping("m", 2)(0.3), 0.3, 1e-15);
  EXPECT_THROW(make_mapping(Family::m, 3), std::invalid_argument);
  EXPECT_THROW(make_mapping("nope", 0), std::invalid_argument);
}

TEST(MakeMapping, RejectsBadSpecs) {
  auto spec = default_spec(Family::m);
  spec.m_p = 2;
  EXPECT_THROW(make_mapping(Family::m, 0, spec), std::invalid_argument);
  EXPECT_THROW(make_mapping(Family::im, 0, default_spec(Family::m)), std::invalid_argument);
  auto im = default_spec(Family::im);
  im.k = 3;
  EXPECT_THROW(validate(im), std::invalid_argument);
  auto acm = default_spec(Family::acm);
  acm.params[0][1] = 0.2;  // CFS > d
  EXPECT_THROW(validate(acm), std::invalid_argument);
  auto mip = default_spec(Family::mip_acmk);
  mip.params[0][2] = 11.0;  // k_s > d/CFS
  EXPECT_THROW(validate(mip), std::invalid_argument);
}

// Fixed points, endpoints, range and monotonicity for every family and substencil.
TEST(MappingProperties, FixedPointsEndpointsMonotone) {
  for (Family f : kAllFamilies) {
    for (int s = 0; s < 3; ++s) {
      const MappingFn g = make_mapping(f, s);
      const double d = kIdealWeights[static_cast<std::size_t>(s)];
      SCOPED_TRACE(label(f, s));
      if (f != Family::identity) EXPECT_LE(std::abs(g(d) - d), kTol);
      EXPECT_LE(std::abs(g(0.0)), kTol);
      EXPECT_LE(std::abs(g(1.0) - 1.0), kTol);
      double prev = g(0.0);
      for (int i = 1; i <= 10000; ++i) {
        const double w = i / 10000.0, v = g(w);
        ASSERT_GE(v, prev - kTol) << "at omega=" << w;
        ASSERT_GE(v, -kTol);
        ASSERT_LE(v, 1.0 + kTol);
        prev = v;
      }
    }
  }
}

// |g(d +- h) - d| = O(h^{n+1}): slope fit between h = 1e-2 and 1e-3 in 100-digit arithmetic.
TEST(MappingProperties, FlatnessAtIdealWeights) {
  for (Family f : kAllFamilies) {
    const auto spec = default_spec(f);
    const int n = critical_order(f, spec);
    for (int s = 0; s < 3; ++s) {
      SCOPED_TRACE(label(f, s));
      const auto& row = spec.params[static_cast<std::size_t>(s)];
      const HP d(row[0]);
      if (f == Family::identity) continue;
      for (int side : {-1, 1}) {
        const HP h1("1e-2"), h2("1e-3");
        const HP e1 = abs(evaluate<HP>(spec, row, d + side * h1) - d);
        const HP e2 = abs(evaluate<HP>(spec, row, d + side * h2) - d);
        if (n < 0) {
          // Plateau families map a neighbourhood of d_s to d_s exactly.
          EXPECT_EQ(e1, 0) << "side " << side;
          EXPECT_EQ(e2, 0) << "side " << side;
          continue;
        }
        const double order = static_cast<double>(log10(e1 / e2));
        EXPECT_GE(order, n + 0.5) << "side " << side;
      }
    }
  }
}

// Same fit one decade closer to d_s, where the MAIM1 exponent weights no longer vary by orders of magnitude.
TEST(MappingProperties, FlatnessOneDecadeCloser) {
  for (Family f : kAllFamilies) {
    const auto spec = default_spec(f);
    const int n = critical_order(f, spec);
    if (f == Family::identity || n < 0) continue;
    for (int s = 0; s < 3; ++s) {
      SCOPED_TRACE(label(f, s));
      const auto& row = spec.params[static_cast<std::size_t>(s)];
      const HP d(row[0]);
      for (int side : {-1, 1}) {
        const HP e1 = abs(evaluate<HP>(spec, row, d + side * HP("1e-3")) - d);
        const HP e2 = abs(evaluate<HP>(spec, row, d + side * HP("1e-4")) - d);
        EXPECT_GE(static_cast<double>(log10(e1 / e2)), n + 0.5) << "side " << side;
      }
    }
  }
}

TEST(MappingProperties, MultiprecisionAgreesWithDouble) {
  for (Family f : kAllFamilies) {
    const auto spec = default_spec(f);
    for (int s = 0; s < 3; ++s) {
      for (double w : {0.05, 0.2, 0.45, 0.77, 0.99}) {
        const double lo = evaluate(spec, spec.params[static_cast<std::size_t>(s)], w);
        const double hi = static_cast<double>(evaluate<HP>(spec, spec.params[static_cast<std::size_t>(s)], HP(w)));
        EXPECT_NEAR(lo, hi, 1e-12) << label(f, s) << " omega=" << w;
      }
    }
  }
}
