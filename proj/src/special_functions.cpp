#include "hsh/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hsh {

namespace {

using Wide = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

constexpr double kClampSlack = 1e-12;

double gegenbauer_unchecked(int n, double mu, double z) {
  if (n == 0) return 1.0;
  double previous = 1.0;
  double current = 2.0 * mu * z;
  for (int k = 2; k <= n; ++k) {
    const double next =
        (2.0 * (k + mu - 1.0) * z * current - (k + 2.0 * mu - 2.0) * previous) / k;
    previous = current;
    current = next;
  }
  return current;
}

Wide terminating_sum(int n, const Wide& b, const Wide& c, const Wide& x) {
  Wide term(1);
  Wide sum(1);
  for (int j = 0; j < n; ++j) {
    term *= Wide(j - n) * (b + j) * x;
    term /= (c + j) * Wide(j + 1);
    sum += term;
  }
  return sum;
}

}  // namespace

void validate(const GegenbauerOrder& order) {
  if (order.degree < 0) {
    throw std::domain_error("Gegenbauer degree must be non-negative, got " +
                            std::to_string(order.degree));
  }
  if (!(order.mu > 0.0) || !std::isfinite(order.mu)) {
    throw std::domain_error("Gegenbauer parameter mu must be positive, got " +
                            std::to_string(order.mu));
  }
}

double clamp_unit_interval(double z) {
  if (std::abs(z) <= 1.0) return z;
  if (std::abs(z) - 1.0 <= kClampSlack) return std::copysign(1.0, z);
  throw std::domain_error("Gegenbauer argument outside [-1, 1]: " + std::to_string(z));
}

double log_gamma(double x) { return boost::math::lgamma(x); }

double gegenbauer(GegenbauerOrder order, double z) {
  validate(order);
  const double value = gegenbauer_unchecked(order.degree, order.mu, clamp_unit_interval(z));
  if (!std::isfinite(value)) {
    throw std::range_error("Gegenbauer value overflows double");
  }
  return value;
}

GegenbauerJet gegenbauer_jet(GegenbauerOrder order, double z) {
  validate(order);
  z = clamp_unit_interval(z);
  const int n = order.degree;
  const double mu = order.mu;
  GegenbauerJet jet;
  jet.value = gegenbauer_unchecked(n, mu, z);
  if (n >= 1) jet.first = 2.0 * mu * gegenbauer_unchecked(n - 1, mu + 1.0, z);
  if (n >= 2) jet.second = 4.0 * mu * (mu + 1.0) * gegenbauer_unchecked(n - 2, mu + 2.0, z);
  return jet;
}

double terminating_hypergeometric(int n, double b, double c, double x) {
  if (n < 0) throw std::domain_error("terminating 2F1 needs n >= 0");
  if (!(c > 0.0)) throw std::domain_error("terminating 2F1 needs c > 0");
  const double result = static_cast<double>(terminating_sum(n, Wide(b), Wide(c), Wide(x)));
  if (!std::isfinite(result)) throw std::range_error("terminating 2F1 overflows double");
  return result;
}

double gegenbauer_hypergeometric(GegenbauerOrder order, double z) {
  validate(order);
  const int n = order.degree;
  const double two_mu = 2.0 * order.mu;

  // Gamma(n+2mu) / (Gamma(n+1) Gamma(2mu)), range-checked in log space.
  const double log_prefactor = log_gamma(n + two_mu) - log_gamma(n + 1.0) - log_gamma(two_mu);
  if (log_prefactor > std::log(std::numeric_limits<double>::max())) {
    throw std::range_error("Gegenbauer Gamma prefactor overflows double");
  }
  // The same ratio as the finite product (2mu)_n / n!, computed in wide precision.
  Wide prefactor(1);
  for (int j = 1; j <= n; ++j) prefactor = prefactor * (Wide(two_mu) + (j - 1)) / j;

  const Wide x = (Wide(1) - Wide(z)) / 2;
  const Wide sum = terminating_sum(n, Wide(n) + Wide(two_mu), Wide(order.mu) + Wide(0.5), x);
  const double result = static_cast<double>(prefactor * sum);
  if (!std::isfinite(result)) throw std::range_error("Gegenbauer value overflows double");
  return result;
}

double log_gegenbauer_norm_sq(GegenbauerOrder order) {
  validate(order);
  const double n = order.degree;
  const double mu = order.mu;
  return (1.0 - 2.0 * mu) * std::numbers::ln2 + std::log(std::numbers::pi) +
         log_gamma(n + 2.0 * mu) - log_gamma(n + 1.0) - std::log(n + mu) -
         2.0 * log_gamma(mu);
}

double gegenbauer_norm_sq(GegenbauerOrder order) {
  return std::exp(log_gegenbauer_norm_sq(order));
}

double GegenbauerOdeTerms::scale() const {
  return std::abs(curvature) + std::abs(drift) + std::abs(source);
}

GegenbauerOdeTerms gegenbauer_ode_terms(GegenbauerOrder order, double z) {
  const GegenbauerJet jet = gegenbauer_jet(order, z);
  z = clamp_unit_interval(z);
  const double n = order.degree;
  const double mu = order.mu;
  return GegenbauerOdeTerms{
      .curvature = (1.0 - z * z) * jet.second,
      .drift = -(2.0 * mu + 1.0) * z * jet.first,
      .source = n * (n + 2.0 * mu) * jet.value,
  };
}

double gegenbauer_ode_residual(GegenbauerOrder order, double z) {
  return gegenbauer_ode_terms(order, z).residual();
}

}  // namespace hsh
