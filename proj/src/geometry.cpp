#include "hsh/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hsh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPoleSine = 1e-12;

void check_angle(std::size_t i, double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("angle theta_" + std::to_string(i + 1) + " is not finite");
  }
  if (i == 0) {
    if (value < 0.0 || value >= kTwoPi) {
      throw std::domain_error("theta_1 must lie in [0, 2pi), got " + std::to_string(value));
    }
  } else if (value < 0.0 || value > std::numbers::pi) {
    throw std::domain_error("theta_" + std::to_string(i + 1) + " must lie in [0, pi], got " +
                            std::to_string(value));
  }
}

}  // namespace

double wrap_azimuth(double theta) {
  double wrapped = std::fmod(theta, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative number can round back up to 2 pi.
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

AngularPoint::AngularPoint(std::vector<double> theta) : theta_(std::move(theta)) {
  if (theta_.empty()) throw std::domain_error("angular point needs N >= 1 angles");
  for (std::size_t i = 0; i < theta_.size(); ++i) check_angle(i, theta_[i]);
}

AngularPoint AngularPoint::with_angle(std::size_t i, double value) const {
  std::vector<double> theta = theta_;
  theta.at(i) = (i == 0) ? wrap_azimuth(value) : value;
  return AngularPoint(std::move(theta));
}

double CartesianPoint::radius() const {
  double sum = 0.0;
  for (double x : coords) sum += x * x;
  return std::sqrt(sum);
}

CartesianPoint to_cartesian(double radius, const AngularPoint& p) {
  if (!(radius >= 0.0)) throw std::domain_error("radius must be non-negative");
  const int n = p.dimension();
  CartesianPoint x;
  x.coords.assign(static_cast<std::size_t>(n) + 1, 0.0);
  double sines = radius;
  for (int i = n; i >= 1; --i) {
    const double t = p[static_cast<std::size_t>(i - 1)];
    x.coords[static_cast<std::size_t>(i)] = sines * std::cos(t);
    sines *= std::sin(t);
  }
  x.coords[0] = sines;
  return x;
}

SphericalCoordinates to_spherical(const CartesianPoint& x) {
  const int n = x.dimension();
  if (n < 1) throw std::domain_error("inverse chart needs at least two coordinates");
  std::vector<double> theta(static_cast<std::size_t>(n), 0.0);

  // partial[i] = |(x_1, ..., x_i)| in 1-based terms.
  std::vector<double> partial(static_cast<std::size_t>(n) + 2, 0.0);
  for (int i = 1; i <= n + 1; ++i) {
    const double xi = x.coords[static_cast<std::size_t>(i - 1)];
    partial[static_cast<std::size_t>(i)] =
        std::hypot(partial[static_cast<std::size_t>(i - 1)], xi);
  }
  const double radius = partial[static_cast<std::size_t>(n) + 1];

  for (int i = n; i >= 2; --i) {
    const double below = partial[static_cast<std::size_t>(i)];
    const double along = x.coords[static_cast<std::size_t>(i)];
    if (below == 0.0 && along == 0.0) break;  // remaining angles stay 0
    theta[static_cast<std::size_t>(i - 1)] = std::atan2(below, along);
    if (below == 0.0) break;
  }
  if (partial[2] > 0.0) theta[0] = wrap_azimuth(std::atan2(x.coords[0], x.coords[1]));
  return SphericalCoordinates{radius, AngularPoint(std::move(theta))};
}

DiagonalMetric metric(double radius, const AngularPoint& p) {
  if (!(radius > 0.0)) throw std::domain_error("metric needs r > 0");
  const int n = p.dimension();
  DiagonalMetric g;
  g.entries.assign(static_cast<std::size_t>(n) + 1, 1.0);
  double product = radius * radius;
  for (int i = n; i >= 1; --i) {
    g.entries[static_cast<std::size_t>(i - 1)] = product;
    const double s = std::sin(p[static_cast<std::size_t>(i - 1)]);
    product *= s * s;
  }
  return g;
}

double sqrt_det_g(double radius, const AngularPoint& p) {
  if (!(radius >= 0.0)) throw std::domain_error("sqrt_det_g needs r >= 0");
  const int n = p.dimension();
  double value = std::pow(radius, n);
  for (int k = 2; k <= n; ++k) {
    value *= std::pow(std::sin(p[static_cast<std::size_t>(k - 1)]), k - 1);
  }
  return value;
}

LaplaceBeltramiCoefficients laplace_beltrami_coefficients(const AngularPoint& p) {
  const int n = p.dimension();
  for (int k = 2; k <= n; ++k) {
    if (std::abs(std::sin(p[static_cast<std::size_t>(k - 1)])) < kPoleSine) {
      throw SingularPointError("Laplace-Beltrami coefficients are singular: sin(theta_" +
                               std::to_string(k) + ") = 0");
    }
  }
  LaplaceBeltramiCoefficients c;
  c.inverse_metric.assign(static_cast<std::size_t>(n), 1.0);
  c.first_order.assign(static_cast<std::size_t>(n), 0.0);
  double product = 1.0;
  for (int i = n; i >= 1; --i) {
    const double t = p[static_cast<std::size_t>(i - 1)];
    c.inverse_metric[static_cast<std::size_t>(i - 1)] = product;
    if (i >= 2) {
      c.first_order[static_cast<std::size_t>(i - 1)] = (i - 1) * std::cos(t) / std::sin(t);
      const double s = std::sin(t);
      product /= s * s;
    }
  }
  return c;
}

}  // namespace hsh
