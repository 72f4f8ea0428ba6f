#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "sg/errors.hpp"
#include "sg/reference.hpp"
#include "sg/transform.hpp"
#include "support.hpp"

namespace sg {
namespace {

// Closed-form matrix entries, written out independently of src/.
double mid_entry(std::size_t n, std::size_t j, std::size_t m) {
  const double am = m == 0 ? 2.0 : 1.0;
  return std::sqrt(2.0 / (n * am)) * std::cos(m * (j + 0.5) * std::numbers::pi / n);
}

double reg_entry(std::size_t n, std::size_t j, std::size_t m) {
  const double aj = (j == 0 || j == n) ? 2.0 : 1.0;
  const double am = (m == 0 || m == n) ? 2.0 : 1.0;
  return std::sqrt(2.0 / (n * aj * am)) * std::cos(j * m * std::numbers::pi / n);
}

std::vector<double> matvec(std::size_t len, auto entry, const std::vector<double>& x,
                           bool transpose) {
  std::vector<double> y(len, 0.0);
  for (std::size_t j = 0; j < len; ++j) {
    for (std::size_t m = 0; m < len; ++m) y[j] += (transpose ? entry(m, j) : entry(j, m)) * x[m];
  }
  return y;
}

TEST(TransformPlan, EigenvaluesStartAtZeroAndDecrease) {
  for (GridFamily f : {GridFamily::MidPoint, GridFamily::Regular}) {
    const TransformPlan plan(f, 12, 3.0);
    const auto& ev = plan.eigenvalues();
    EXPECT_EQ(ev[0], 0.0);
    for (std::size_t j = 1; j < ev.size(); ++j) EXPECT_LT(ev[j], ev[j - 1]);
    const double mu = std::numbers::pi / 3.0;
    EXPECT_NEAR(plan.wavenumbers()[5], 5 * mu, 1e-14);
    EXPECT_NEAR(ev[5], -25 * mu * mu, 1e-12);
  }
}

TEST(TransformPlan, AxisLengthByFamily) {
  EXPECT_EQ(TransformPlan(GridFamily::MidPoint, 8, 1.0).axis_length(), 8u);
  EXPECT_EQ(TransformPlan(GridFamily::Regular, 8, 1.0).axis_length(), 9u);
}

TEST(TransformPlan, RegularTScale) {
  const TransformPlan plan(GridFamily::Regular, 4, 1.0);
  const auto& t = plan.t_scale();
  EXPECT_DOUBLE_EQ(t.front(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(t.back(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(t[2], 1.0);
  const TransformPlan mid(GridFamily::MidPoint, 4, 1.0);
  for (double x : mid.t_scale()) EXPECT_EQ(x, 1.0);
}

TEST(TransformPlan, RejectsZeroCellsAndBadExtent) {
  EXPECT_THROW(TransformPlan(GridFamily::MidPoint, 0, 1.0), ArgumentError);
  EXPECT_THROW(TransformPlan(GridFamily::Regular, 4, 0.0), ArgumentError);
}

TEST(DctMid, OnesGiveScaledConstantMode) {
  const TransformPlan plan(GridFamily::MidPoint, 4, 1.0);
  const std::vector<double> ones(4, 1.0);
  const auto k = dct_mid_forward(ones, plan);
  EXPECT_NEAR(k[0], 2.0, 1e-14);
  for (std::size_t m = 1; m < 4; ++m) EXPECT_NEAR(k[m], 0.0, 1e-14);
  const auto back = dct_mid_inverse(k, plan);
  for (double x : back) EXPECT_NEAR(x, 1.0, 1e-14);
}

TEST(DctMid, ZeroMapsToZero) {
  for (std::size_t n : {1u, 3u, 8u}) {
    const TransformPlan plan(GridFamily::MidPoint, n, 2.0);
    const std::vector<double> z(n, 0.0);
    for (double x : dct_mid_forward(z, plan)) EXPECT_EQ(x, 0.0);
    for (double x : dct_mid_inverse(z, plan)) EXPECT_EQ(x, 0.0);
  }
}

TEST(DctMid, UnitModeOneIsCosineColumn) {
  const std::size_t n = 4;
  const TransformPlan plan(GridFamily::MidPoint, n, 1.0);
  std::vector<double> e1(n, 0.0);
  e1[1] = 1.0;
  const auto x = dct_mid_inverse(e1, plan);
  // x_j - a = (j + 1/2) h with h = 1/N, mu = pi.
  for (std::size_t j = 0; j < n; ++j) {
    EXPECT_NEAR(x[j], std::sqrt(2.0 / n) * std::cos(std::numbers::pi * (j + 0.5) / n), 1e-14);
  }
}

TEST(DctMid, MatchesDenseOracleForAllSmallN) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const TransformPlan plan(GridFamily::MidPoint, n, 1.0);
    const auto x = test::random_vector(n, 100 + n);
    auto entry = [n](std::size_t j, std::size_t m) { return mid_entry(n, j, m); };
    // C is orthogonal, so C^{-1} x = C^T x.
    const auto k_oracle = matvec(n, entry, x, true);
    const auto x_oracle = matvec(n, entry, x, false);
    EXPECT_LE(test::max_abs_diff(dct_mid_forward(x, plan), k_oracle), 1e-12) << "N=" << n;
    EXPECT_LE(test::max_abs_diff(dct_mid_inverse(x, plan), x_oracle), 1e-12) << "N=" << n;
  }
}

TEST(DctMid, InverseUndoesForward) {
  const TransformPlan plan(GridFamily::MidPoint, 37, 5.0);
  const auto x = test::random_vector(37, 7);
  EXPECT_LE(test::max_abs_diff(dct_mid_inverse(dct_mid_forward(x, plan), plan), x), 1e-13);
}

TEST(DctMid, LengthMismatchThrows) {
  const TransformPlan plan(GridFamily::MidPoint, 4, 1.0);
  EXPECT_THROW(dct_mid_forward(std::vector<double>(5), plan), DimensionError);
  EXPECT_THROW(dct_mid_inverse(std::vector<double>(3), plan), DimensionError);
}

TEST(DctMid, WrongFamilyThrows) {
  const TransformPlan plan(GridFamily::Regular, 4, 1.0);
  EXPECT_THROW(dct_mid_forward(std::vector<double>(5), plan), ArgumentError);
}

TEST(DctReg, IsAnInvolution) {
  const TransformPlan plan(GridFamily::Regular, 8, 1.0);
  const auto x = test::random_vector(9, 11);
  EXPECT_LE(test::max_abs_diff(dct_reg_forward(dct_reg_forward(x, plan), plan), x), 1e-12);
}

TEST(DctReg, MatchesDenseOracleN5) {
  const std::size_t n = 5;
  const TransformPlan plan(GridFamily::Regular, n, 1.0);
  const auto x = test::random_vector(n + 1, 12);
  auto entry = [n](std::size_t j, std::size_t m) { return reg_entry(n, j, m); };
  EXPECT_LE(test::max_abs_diff(dct_reg_forward(x, plan), matvec(n + 1, entry, x, false)), 1e-13);
}

TEST(DctReg, MatchesDenseOracleForAllSmallN) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const TransformPlan plan(GridFamily::Regular, n, 2.5);
    const auto x = test::random_vector(n + 1, 200 + n);
    auto entry = [n](std::size_t j, std::size_t m) { return reg_entry(n, j, m); };
    EXPECT_LE(test::max_abs_diff(dct_reg_forward(x, plan), matvec(n + 1, entry, x, false)),
              1e-12)
        << "N=" << n;
  }
}

TEST(DctReg, ZeroAndLengthChecks) {
  const TransformPlan plan(GridFamily::Regular, 6, 1.0);
  for (double x : dct_reg_forward(std::vector<double>(7, 0.0), plan)) EXPECT_EQ(x, 0.0);
  EXPECT_THROW(dct_reg_forward(std::vector<double>(6), plan), DimensionError);
}

TEST(ReferenceCosineMatrix, AgreesWithClosedForm) {
  for (std::size_t n : {1u, 4u, 9u}) {
    const auto cm = reference::cosine_matrix(GridFamily::MidPoint, n);
    const auto cr = reference::cosine_matrix(GridFamily::Regular, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) EXPECT_NEAR(cm(j, m), mid_entry(n, j, m), 1e-15);
    }
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t m = 0; m <= n; ++m) EXPECT_NEAR(cr(j, m), reg_entry(n, j, m), 1e-15);
    }
  }
}

TEST(TransformPlan, InPlaceMatchesFreeFunctions) {
  const TransformPlan plan(GridFamily::MidPoint, 10, 1.0);
  auto x = test::random_vector(10, 3);
  const auto expected = dct_mid_forward(x, plan);
  plan.forward_inplace(x);
  EXPECT_LE(test::max_abs_diff(x, expected), 0.0);
}

}  // namespace
}  // namespace sg
