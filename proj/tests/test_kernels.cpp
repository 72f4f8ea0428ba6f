#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sg/kernels.hpp"
#include "sg/transform.hpp"
#include "support.hpp"

namespace sg::kernels {
namespace {

constexpr std::size_t kRows = 33;
constexpr std::size_t kCols = 20;

class KernelEquivalence : public ::testing::TestWithParam<GridFamily> {};

TEST_P(KernelEquivalence, RowAndColumnTransforms) {
  const GridFamily f = GetParam();
  const std::size_t extra = f == GridFamily::Regular ? 1 : 0;
  const std::size_t rows = kRows + extra;
  const std::size_t cols = kCols + extra;
  const TransformPlan px(f, kRows, 2.0);
  const TransformPlan py(f, kCols, 3.0);
  for (Direction d : {Direction::Forward, Direction::Inverse}) {
    auto a = test::random_vector(rows * cols, 5);
    auto b = a;
    serial::transform_rows(a, rows, cols, py, d);
    omp::transform_rows(b, rows, cols, py, d);
    EXPECT_EQ(a, b);
    serial::transform_cols(a, rows, cols, px, d);
    omp::transform_cols(b, rows, cols, px, d);
    EXPECT_EQ(a, b);
  }
}

INSTANTIATE_TEST_SUITE_P(Families, KernelEquivalence,
                         ::testing::Values(GridFamily::MidPoint, GridFamily::Regular));

TEST(Kernels, ScaleOuterMultiplyAndDivide) {
  const auto rf = test::random_vector(kRows, 1, 0.5, 2.0);
  const auto cf = test::random_vector(kCols, 2, 0.5, 2.0);
  for (bool divide : {false, true}) {
    auto a = test::random_vector(kRows * kCols, 3);
    const auto original = a;
    auto b = a;
    serial::scale_outer(a, rf, cf, divide);
    omp::scale_outer(b, rf, cf, divide);
    EXPECT_EQ(a, b);
    const double f = rf[4] * cf[7];
    const double want = divide ? original[4 * kCols + 7] / f : original[4 * kCols + 7] * f;
    EXPECT_DOUBLE_EQ(a[4 * kCols + 7], want);
  }
}

TEST(Kernels, MultiplyAndPhiSin) {
  const std::size_t n = 1000;
  auto a = test::random_vector(n, 4);
  auto b = a;
  const auto f = test::random_vector(n, 5);
  serial::multiply(a, f);
  omp::multiply(b, f);
  EXPECT_EQ(a, b);

  const auto u = test::random_vector(n, 6, -4.0, 4.0);
  std::vector<double> s1(n), s2(n);
  serial::phi_sin(f, u, s1);
  omp::phi_sin(f, u, s2);
  EXPECT_EQ(s1, s2);
  EXPECT_DOUBLE_EQ(s1[17], f[17] * std::sin(u[17]));
}

TEST(Kernels, ReductionsAgreeAcrossPolicies) {
  const std::size_t n = 50000;
  const auto w = test::random_vector(n, 7, 0.1, 1.0);
  const auto u = test::random_vector(n, 8, -3.0, 3.0);
  const auto v = test::random_vector(n, 9);
  const auto lap = test::random_vector(n, 10, -50.0, 50.0);
  const auto phi = test::random_vector(n, 11, 0.5, 1.5);
  const auto du = test::random_vector(n, 12);
  const auto dv = test::random_vector(n, 13);

  const double d1 = serial::weighted_dot(w, u, v);
  const double d2 = omp::weighted_dot(w, u, v);
  EXPECT_NEAR(d1, d2, 1e-12 * std::abs(d1) + 1e-13);

  const EnergyTerms e1 = serial::energy_terms(w, u, v, lap, phi);
  const EnergyTerms e2 = omp::energy_terms(w, u, v, lap, phi);
  EXPECT_NEAR(e1.kinetic, e2.kinetic, 1e-12 * std::abs(e1.kinetic));
  EXPECT_NEAR(e1.gradient, e2.gradient, 1e-12 * std::abs(e1.gradient));
  EXPECT_NEAR(e1.potential, e2.potential, 1e-12 * std::abs(e1.potential));

  const double s1 = serial::energy_slope(w, u, v, lap, phi, du, dv);
  const double s2 = omp::energy_slope(w, u, v, lap, phi, du, dv);
  EXPECT_NEAR(s1, s2, 1e-12 * std::abs(s1) + 1e-12);
}

TEST(Kernels, EnergyTermsDefinition) {
  const std::vector<double> w{0.5, 2.0};
  const std::vector<double> u{0.3, -1.2};
  const std::vector<double> v{1.0, 0.25};
  const std::vector<double> lap{-2.0, 4.0};
  const std::vector<double> phi{1.0, 3.0};
  const EnergyTerms t = serial::energy_terms(w, u, v, lap, phi);
  EXPECT_NEAR(t.kinetic, 0.5 * (0.5 * 1.0 + 2.0 * 0.0625), 1e-15);
  EXPECT_NEAR(t.gradient, -0.5 * (0.5 * 0.3 * -2.0 + 2.0 * -1.2 * 4.0), 1e-15);
  EXPECT_NEAR(t.potential, 0.5 * (1 - std::cos(0.3)) + 2.0 * 3.0 * (1 - std::cos(-1.2)), 1e-14);
  EXPECT_DOUBLE_EQ(t.total(), t.kinetic + t.gradient + t.potential);
}

TEST(Kernels, DispatchFollowsPolicy) {
  const auto w = test::random_vector(100, 1, 0.1, 1.0);
  const auto a = test::random_vector(100, 2);
  EXPECT_EQ(weighted_dot(Exec::Serial, w, a, a), serial::weighted_dot(w, a, a));
  EXPECT_EQ(weighted_dot(Exec::Parallel, w, a, a), omp::weighted_dot(w, a, a));
}

TEST(CompensatedSum, RecoversCancelledLowOrderBits) {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-13, 1e-25);

  CompensatedSum a, b;
  a.add(1e16);
  b.add(1.0);
  b.add(-1e16);
  a.add(b);
  EXPECT_EQ(a.value(), 1.0);
}

TEST(Kernels, EmptyInputsReduceToZero) {
  const std::vector<double> e;
  EXPECT_EQ(omp::weighted_dot(e, e, e), 0.0);
  EXPECT_EQ(omp::energy_terms(e, e, e, e, e).total(), 0.0);
}

}  // namespace
}  // namespace sg::kernels
