#include "hsh/poschl_teller.hpp"

#include "hsh/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hsh {

namespace {

constexpr double kWallClearance = 1e-3;

void check_level(int n) {
  if (n < 0) throw std::domain_error("level n must be non-negative, got " + std::to_string(n));
}

// 5-point central second derivative.
double second_derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) /
         (12.0 * h * h);
}

void check_interior(double x, double end, double h) {
  if (!(h > 0.0)) throw std::domain_error("finite-difference step must be positive");
  const double clearance = std::max(kWallClearance, 2.0 * h);
  if (!(x >= clearance && x <= end - clearance)) {
    throw std::domain_error("point " + std::to_string(x) + " is too close to a wall");
  }
}

// sin^p for angles in the closed well; rounding can make sin slightly negative.
double sine_power(double s, double p) { return s <= 0.0 ? 0.0 : std::pow(s, p); }

}  // namespace

double GeneralPTWell::domain_end() const { return std::numbers::pi / (2.0 * c); }

void validate(const GeneralPTWell& well) {
  if (!(well.c > 0.0) || !std::isfinite(well.c)) {
    throw std::domain_error("Poschl-Teller scale c must be positive");
  }
  if (!(well.mu > 1.0) || !std::isfinite(well.mu)) {
    throw std::domain_error("Poschl-Teller mu must exceed 1");
  }
  if (!(well.kappa > 1.0) || !std::isfinite(well.kappa)) {
    throw std::domain_error("Poschl-Teller kappa must exceed 1");
  }
}

void validate(const SymmetricPTWell& well) {
  if (!(well.mu > 1.0) || !std::isfinite(well.mu)) {
    throw std::domain_error("symmetric Poschl-Teller mu must exceed 1");
  }
}

double potential(const GeneralPTWell& well, double x) {
  const double s = std::sin(well.c * x);
  const double c = std::cos(well.c * x);
  return well.c * well.c *
         (well.mu * (well.mu - 1.0) / (s * s) + well.kappa * (well.kappa - 1.0) / (c * c));
}

double potential(const SymmetricPTWell& well, double theta) {
  const double s = std::sin(theta);
  return well.mu * (well.mu - 1.0) / (s * s);
}

PTEigenpair general_pt_eigenpair(const GeneralPTWell& well, int n) {
  validate(well);
  check_level(n);
  const double width = 2.0 * n + well.mu + well.kappa;
  PTEigenpair pair;
  pair.level = n;
  pair.energy = well.c * well.c * width * width;
  pair.wavefunction = [well, n](double x) {
    const double s = std::sin(well.c * x);
    const double c = std::cos(well.c * x);
    return sine_power(s, well.mu) * sine_power(c, well.kappa) *
           terminating_hypergeometric(n, n + well.mu + well.kappa, well.mu + 0.5, s * s);
  };
  return pair;
}

PTEigenpair symmetric_pt_eigenpair(double mu, int n, Normalization normalization) {
  validate(SymmetricPTWell{mu});
  check_level(n);
  const GegenbauerOrder order{n, mu};
  const double scale =
      normalization == Normalization::unit_l2 ? 1.0 / std::sqrt(gegenbauer_norm_sq(order)) : 1.0;
  PTEigenpair pair;
  pair.level = n;
  pair.energy = (n + mu) * (n + mu);
  pair.wavefunction = [order, scale](double theta) {
    return scale * sine_power(std::sin(theta), order.mu) * gegenbauer(order, std::cos(theta));
  };
  return pair;
}

double schrodinger_residual(const SymmetricPTWell& well, const PTEigenpair& pair, double theta,
                            double h) {
  validate(well);
  check_interior(theta, std::numbers::pi, h);
  const double psi = pair.wavefunction(theta);
  return -second_derivative(pair.wavefunction, theta, h) + potential(well, theta) * psi -
         pair.energy * psi;
}

double schrodinger_residual(const GeneralPTWell& well, const PTEigenpair& pair, double x,
                            double h) {
  validate(well);
  check_interior(x, well.domain_end(), h);
  const double psi = pair.wavefunction(x);
  return -second_derivative(pair.wavefunction, x, h) + potential(well, x) * psi -
         pair.energy * psi;
}

}  // namespace hsh
