#include "hsh/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace hsh {
namespace {

constexpr double kPi = std::numbers::pi;

AngularPoint random_point(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> polar(0.2, kPi - 0.2);
  std::vector<double> theta{azimuth(rng)};
  for (int k = 1; k < n; ++k) theta.push_back(polar(rng));
  return AngularPoint(theta);
}

TEST(AngularPoint, RejectsOutOfRangeAngles) {
  EXPECT_THROW(AngularPoint({}), std::domain_error);
  EXPECT_THROW(AngularPoint({2.0 * kPi}), std::domain_error);
  EXPECT_THROW(AngularPoint({-0.1}), std::domain_error);
  EXPECT_THROW(AngularPoint({0.0, kPi + 1e-3}), std::domain_error);
  EXPECT_THROW(AngularPoint({0.0, std::nan("")}), std::domain_error);
  EXPECT_NO_THROW(AngularPoint({0.0, kPi}));
}

TEST(AngularPoint, WithAngleWrapsAzimuth) {
  const AngularPoint p({0.1, 1.0});
  EXPECT_NEAR(p.with_angle(0, -0.1)[0], 2.0 * kPi - 0.1, 1e-15);
  EXPECT_NEAR(p.with_angle(0, 2.0 * kPi + 0.3)[0], 0.3, 1e-15);
  EXPECT_THROW(p.with_angle(1, -0.1), std::domain_error);
  EXPECT_NEAR(wrap_azimuth(-2.0 * kPi), 0.0, 1e-15);
}

TEST(Chart, Examples) {
  const CartesianPoint a = to_cartesian(1.0, AngularPoint({1.3, 0.0}));
  EXPECT_NEAR(a.coords[2], 1.0, 1e-15);
  EXPECT_NEAR(a.coords[1], 0.0, 1e-15);
  EXPECT_NEAR(a.coords[0], 0.0, 1e-15);

  const CartesianPoint b = to_cartesian(2.0, AngularPoint({kPi / 2.0}));
  EXPECT_NEAR(b.coords[1], 0.0, 1e-15);
  EXPECT_NEAR(b.coords[0], 2.0, 1e-15);

  const CartesianPoint c = to_cartesian(1.0, AngularPoint({kPi / 2, kPi / 2, kPi / 2}));
  EXPECT_NEAR(c.coords[3], 0.0, 1e-15);
  EXPECT_NEAR(c.coords[2], 0.0, 1e-15);
  EXPECT_NEAR(c.coords[1], 0.0, 1e-15);
  EXPECT_NEAR(c.coords[0], 1.0, 1e-15);

  EXPECT_THROW(to_cartesian(-1.0, AngularPoint({0.0})), std::domain_error);
}

TEST(Chart, UnitRadiusForEveryPoint) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      EXPECT_NEAR(to_cartesian(1.0, random_point(n, rng)).radius(), 1.0, 1e-14);
    }
  }
}

TEST(Chart, RoundTrip) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const AngularPoint p = random_point(n, rng);
      const double r = 0.5 + trial * 0.1;
      const SphericalCoordinates back = to_spherical(to_cartesian(r, p));
      EXPECT_NEAR(back.radius, r, 1e-13 * r);
      for (int i = 0; i < n; ++i) EXPECT_NEAR(back.angles[i], p[i], 1e-12) << "n=" << n;
    }
  }
}

TEST(Chart, InverseAtDegeneratePoints) {
  const SphericalCoordinates origin = to_spherical(CartesianPoint{{0.0, 0.0, 0.0}});
  EXPECT_EQ(origin.radius, 0.0);
  EXPECT_EQ(origin.angles[0], 0.0);
  EXPECT_EQ(origin.angles[1], 0.0);

  // North pole of S^2: theta_2 = 0, azimuth undetermined.
  const SphericalCoordinates pole = to_spherical(CartesianPoint{{0.0, 0.0, 3.0}});
  EXPECT_NEAR(pole.radius, 3.0, 1e-15);
  EXPECT_EQ(pole.angles[0], 0.0);
  EXPECT_EQ(pole.angles[1], 0.0);

  const SphericalCoordinates south = to_spherical(CartesianPoint{{0.0, 0.0, -1.0}});
  EXPECT_NEAR(south.angles[1], kPi, 1e-15);

  EXPECT_THROW(to_spherical(CartesianPoint{{1.0}}), std::domain_error);
}

TEST(Metric, Examples) {
  const DiagonalMetric a = metric(1.0, AngularPoint({0.4, kPi / 2}));
  ASSERT_EQ(a.entries.size(), 3u);
  for (double e : a.entries) EXPECT_NEAR(e, 1.0, 1e-15);

  const DiagonalMetric b = metric(3.0, AngularPoint({2.0}));
  ASSERT_EQ(b.entries.size(), 2u);
  EXPECT_NEAR(b.entries[0], 9.0, 1e-14);
  EXPECT_NEAR(b.entries[1], 1.0, 1e-15);

  const DiagonalMetric c = metric(1.0, AngularPoint({0.0, kPi / 2, kPi / 6}));
  ASSERT_EQ(c.entries.size(), 4u);
  EXPECT_NEAR(c.entries[0], 0.25, 1e-15);
  EXPECT_NEAR(c.entries[1], 0.25, 1e-15);
  EXPECT_NEAR(c.entries[2], 1.0, 1e-15);
  EXPECT_NEAR(c.entries[3], 1.0, 1e-15);

  EXPECT_THROW(metric(0.0, AngularPoint({0.0})), std::domain_error);
}

// Columns of the Jacobian of (t_1..t_N, r) -> x by central differences.
std::vector<std::vector<double>> numerical_jacobian(double r, const AngularPoint& p) {
  const int n = p.dimension();
  const double h = 1e-5;
  std::vector<std::vector<double>> columns;
  for (int i = 0; i < n; ++i) {
    std::vector<double> plus(p.theta().begin(), p.theta().end());
    std::vector<double> minus = plus;
    plus[static_cast<std::size_t>(i)] += h;
    minus[static_cast<std::size_t>(i)] -= h;
    if (i == 0) {
      plus[0] = wrap_azimuth(plus[0]);
      minus[0] = wrap_azimuth(minus[0]);
    }
    const auto xp = to_cartesian(r, AngularPoint(plus)).coords;
    const auto xm = to_cartesian(r, AngularPoint(minus)).coords;
    std::vector<double> col;
    for (std::size_t j = 0; j < xp.size(); ++j) col.push_back((xp[j] - xm[j]) / (2 * h));
    columns.push_back(col);
  }
  const auto xp = to_cartesian(r + h, p).coords;
  const auto xm = to_cartesian(r - h, p).coords;
  std::vector<double> col;
  for (std::size_t j = 0; j < xp.size(); ++j) col.push_back((xp[j] - xm[j]) / (2 * h));
  columns.push_back(col);
  return columns;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

TEST(Metric, MatchesNumericalJacobian) {
  std::mt19937 rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const AngularPoint p = random_point(n, rng);
      const double r = 0.7 + 0.3 * trial;
      const auto jac = numerical_jacobian(r, p);
      const DiagonalMetric g = metric(r, p);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const double gij = dot(jac[static_cast<std::size_t>(i)], jac[static_cast<std::size_t>(j)]);
          const double expected = i == j ? g.entries[static_cast<std::size_t>(i)] : 0.0;
          EXPECT_NEAR(gij, expected, 1e-6 * std::max(1.0, r * r)) << "n=" << n;
        }
      }
    }
  }
}

TEST(SqrtDetG, Examples) {
  EXPECT_NEAR(sqrt_det_g(1.0, AngularPoint({0.3, kPi / 2})), 1.0, 1e-15);
  EXPECT_NEAR(sqrt_det_g(2.0, AngularPoint({0.3, kPi / 6})), 2.0, 1e-14);
  EXPECT_NEAR(sqrt_det_g(1.0, AngularPoint({4.0})), 1.0, 1e-15);
}

TEST(SqrtDetG, EqualsProductOfMetricRoots) {
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const AngularPoint p = random_point(n, rng);
      const double r = 0.5 + 0.2 * trial;
      double product = 1.0;
      for (double e : metric(r, p).entries) product *= std::sqrt(e);
      EXPECT_NEAR(sqrt_det_g(r, p), product, 1e-13 * product);
    }
  }
}

TEST(LaplaceBeltramiCoefficients, Examples) {
  const auto a = laplace_beltrami_coefficients(AngularPoint({1.0, kPi / 2}));
  ASSERT_EQ(a.inverse_metric.size(), 2u);
  EXPECT_NEAR(a.inverse_metric[0], 1.0, 1e-15);
  EXPECT_NEAR(a.inverse_metric[1], 1.0, 1e-15);
  EXPECT_NEAR(a.first_order[0], 0.0, 1e-15);
  EXPECT_NEAR(a.first_order[1], 0.0, 1e-15);

  const auto b = laplace_beltrami_coefficients(AngularPoint({2.5}));
  ASSERT_EQ(b.inverse_metric.size(), 1u);
  EXPECT_EQ(b.inverse_metric[0], 1.0);
  EXPECT_EQ(b.first_order[0], 0.0);

  const auto c = laplace_beltrami_coefficients(AngularPoint({0.5, kPi / 3, kPi / 2}));
  EXPECT_NEAR(c.inverse_metric[0], 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(c.inverse_metric[1], 1.0, 1e-15);
  EXPECT_NEAR(c.inverse_metric[2], 1.0, 1e-15);
  EXPECT_NEAR(c.first_order[1], 1.0 / std::tan(kPi / 3), 1e-15);
}

TEST(LaplaceBeltramiCoefficients, InverseOfUnitMetric) {
  std::mt19937 rng(9);
  for (int n = 1; n <= 6; ++n) {
    const AngularPoint p = random_point(n, rng);
    const auto coeff = laplace_beltrami_coefficients(p);
    const auto g = metric(1.0, p);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(coeff.inverse_metric[static_cast<std::size_t>(i)] *
                      g.entries[static_cast<std::size_t>(i)],
                  1.0, 1e-13);
    }
  }
}

TEST(LaplaceBeltramiCoefficients, PoleIsSingular) {
  EXPECT_THROW(laplace_beltrami_coefficients(AngularPoint({0.3, 0.0})), SingularPointError);
  EXPECT_THROW(laplace_beltrami_coefficients(AngularPoint({0.3, 1.0, kPi})), SingularPointError);
  // Azimuth zero is not a pole.
  EXPECT_NO_THROW(laplace_beltrami_coefficients(AngularPoint({0.0, 1.0})));
}

}  // namespace
}  // namespace hsh
