#ifndef HSH_SPECIAL_FUNCTIONS_HPP
#define HSH_SPECIAL_FUNCTIONS_HPP

/// Gegenbauer (ultraspherical) polynomials C_n^mu and the terminating
/// hypergeometric series that defines them.
///
/// Two evaluation routes are provided on purpose:
///  - gegenbauer()                 three-term recurrence, O(n), double precision;
///  - gegenbauer_hypergeometric()  direct summation of
///        Gamma(n+2mu)/(Gamma(n+1)Gamma(2mu)) 2F1(-n, n+2mu; mu+1/2; (1-z)/2)
///    in 256-bit floating point. The alternating series cancels by up to ~40
///    decimal orders for n ~ 50, so double summation is useless; this route is
///    the reference the recurrence is checked against.

namespace hsh {

struct GegenbauerOrder {
  int degree = 0;   ///< n >= 0
  double mu = 1.0;  ///< mu > 0
};

/// Throws std::domain_error unless degree >= 0 and mu > 0 (finite).
void validate(const GegenbauerOrder& order);

/// Arguments within 1e-12 of [-1, 1] are clamped onto it; anything further
/// out (or NaN) is a std::domain_error.
double clamp_unit_interval(double z);

/// C_n^mu(z) by the recurrence
///   n C_n = 2(n+mu-1) z C_{n-1} - (n+2mu-2) C_{n-2},  C_0 = 1, C_1 = 2 mu z.
double gegenbauer(GegenbauerOrder order, double z);

/// Value with first and second z-derivatives, using
/// d/dz C_n^mu = 2 mu C_{n-1}^{mu+1}.
struct GegenbauerJet {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};
GegenbauerJet gegenbauer_jet(GegenbauerOrder order, double z);

/// 2F1(-n, b; c; x) as the finite sum of its n+1 terms, accumulated in
/// 256-bit floating point. Requires n >= 0 and c > 0.
double terminating_hypergeometric(int n, double b, double c, double x);

/// C_n^mu(z) from the hypergeometric definition. Any real z is accepted.
/// Throws std::range_error when the Gamma prefactor or result leaves the
/// double range.
double gegenbauer_hypergeometric(GegenbauerOrder order, double z);

/// ln of the squared norm below (overflow-free).
double log_gegenbauer_norm_sq(GegenbauerOrder order);

/// int_{-1}^{1} [C_n^mu(z)]^2 (1-z^2)^{mu-1/2} dz
///   = 2^{1-2mu} pi Gamma(n+2mu) / (n! (n+mu) Gamma(mu)^2).
double gegenbauer_norm_sq(GegenbauerOrder order);

/// The three terms of (1-z^2) y'' - (2mu+1) z y' + n(n+2mu) y for y = C_n^mu.
struct GegenbauerOdeTerms {
  double curvature = 0.0;
  double drift = 0.0;
  double source = 0.0;

  double residual() const { return curvature + drift + source; }
  /// Sum of the term magnitudes; the natural yardstick for residual().
  double scale() const;
};
GegenbauerOdeTerms gegenbauer_ode_terms(GegenbauerOrder order, double z);
double gegenbauer_ode_residual(GegenbauerOrder order, double z);

/// Thread-safe ln Gamma for positive arguments.
double log_gamma(double x);

}  // namespace hsh

#endif  // HSH_SPECIAL_FUNCTIONS_HPP
