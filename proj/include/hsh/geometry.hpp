#ifndef HSH_GEOMETRY_HPP
#define HSH_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

/// Hyperspherical chart on R^{N+1}:
///
///   x_{N+1} = r cos t_N
///   x_N     = r sin t_N cos t_{N-1}
///   ...
///   x_2     = r sin t_N ... sin t_2 cos t_1
///   x_1     = r sin t_N ... sin t_2 sin t_1
///
/// with 0 <= t_1 < 2 pi and 0 <= t_i <= pi (i >= 2).
///
/// Index convention: the math is 1-based, storage is 0-based. theta()[i]
/// holds t_{i+1}; coords[k] holds x_{k+1}; metric entries[i] holds eta_{i+1},
/// so entries.back() is the radial eta_{N+1} = 1.

namespace hsh {

/// Raised where an angular formula divides by sin t_k = 0 (k >= 2).
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Maps any finite angle into [0, 2 pi).
double wrap_azimuth(double theta);

class AngularPoint {
 public:
  /// Throws std::domain_error on empty input, non-finite angles or angles
  /// outside the ranges above.
  explicit AngularPoint(std::vector<double> theta);

  int dimension() const { return static_cast<int>(theta_.size()); }
  std::span<const double> theta() const { return theta_; }
  double operator[](std::size_t i) const { return theta_[i]; }

  /// Copy with theta()[i] replaced; the azimuth is wrapped, polar angles are
  /// range-checked as usual.
  AngularPoint with_angle(std::size_t i, double value) const;

 private:
  std::vector<double> theta_;
};

struct CartesianPoint {
  std::vector<double> coords;

  int dimension() const { return static_cast<int>(coords.size()) - 1; }
  double radius() const;
};

struct DiagonalMetric {
  std::vector<double> entries;
};

struct SphericalCoordinates {
  double radius;
  AngularPoint angles;
};

CartesianPoint to_cartesian(double radius, const AngularPoint& p);

/// Inverse chart. Where the lower angles are undetermined (r = 0 or a pole)
/// they are returned as 0. Requires at least two coordinates.
SphericalCoordinates to_spherical(const CartesianPoint& x);

/// eta_{N+1} = 1, eta_i = r^2 prod_{k=i+1}^{N} sin^2 t_k. Requires r > 0.
DiagonalMetric metric(double radius, const AngularPoint& p);

/// sqrt|g| = r^N prod_{k=2}^{N} sin^{k-1} t_k. Requires r >= 0.
double sqrt_det_g(double radius, const AngularPoint& p);

/// Coefficients of the unit-sphere operator
///   sum_i h_i [ (i-1) cot t_i d_i + d_i^2 ],  h_i = prod_{k=i+1}^{N} sin^{-2} t_k.
struct LaplaceBeltramiCoefficients {
  std::vector<double> inverse_metric;  ///< h_i, i = 1..N
  std::vector<double> first_order;     ///< (i-1) cot t_i, i = 1..N
};

/// Throws SingularPointError when |sin t_k| < 1e-12 for some k >= 2.
LaplaceBeltramiCoefficients laplace_beltrami_coefficients(const AngularPoint& p);

}  // namespace hsh

#endif  // HSH_GEOMETRY_HPP
