#ifndef HSH_POSCHL_TELLER_HPP
#define HSH_POSCHL_TELLER_HPP

#include <functional>

/// Bound states of the Poschl-Teller wells
///
///   general:    -psi'' + c^2 [ mu(mu-1)/sin^2(cx) + kappa(kappa-1)/cos^2(cx) ] psi = q^2 psi,
///               x in (0, pi/(2c)),
///   symmetric:  -psi'' + mu(mu-1)/sin^2(theta) psi = sigma^2 psi,  theta in (0, pi).
///
/// The domains are treated as open, with psi -> 0 at both walls. Only the
/// symmetric well feeds the harmonic construction; the general one is kept
/// for the spectrum tables and its own residual checks.

namespace hsh {

struct GeneralPTWell {
  double c = 1.0;      ///< > 0
  double mu = 2.0;     ///< > 1
  double kappa = 2.0;  ///< > 1

  double domain_end() const;  ///< pi / (2c)
};

struct SymmetricPTWell {
  double mu = 2.0;  ///< > 1
};

/// Throws std::domain_error on invalid well parameters.
void validate(const GeneralPTWell& well);
void validate(const SymmetricPTWell& well);

double potential(const GeneralPTWell& well, double x);
double potential(const SymmetricPTWell& well, double theta);

struct PTEigenpair {
  int level = 0;
  double energy = 0.0;  ///< q_n^2 (general) or sigma_n^2 (symmetric)
  std::function<double(double)> wavefunction;
};

enum class Normalization {
  none,     ///< the closed forms as written
  unit_l2,  ///< scaled so that int psi^2 = 1 over the well
};

/// psi_n(x) = sin^mu(cx) cos^kappa(cx) 2F1(-n, n+mu+kappa; mu+1/2; sin^2(cx)),
/// q_n^2 = c^2 (2n+mu+kappa)^2. Unnormalized.
PTEigenpair general_pt_eigenpair(const GeneralPTWell& well, int n);

/// psi_n(theta) = sin^mu(theta) C_n^mu(cos theta), sigma_n^2 = (n+mu)^2.
/// With unit_l2 the wavefunction is divided by sqrt(gegenbauer_norm_sq).
PTEigenpair symmetric_pt_eigenpair(double mu, int n,
                                   Normalization normalization = Normalization::none);

/// -psi'' + V psi - E psi with psi'' from the 5-point central stencil of step h.
/// Throws std::domain_error unless the point is at least max(1e-3, 2h) away
/// from both walls.
double schrodinger_residual(const SymmetricPTWell& well, const PTEigenpair& pair, double theta,
                            double h = 1e-3);
double schrodinger_residual(const GeneralPTWell& well, const PTEigenpair& pair, double x,
                            double h = 1e-3);

}  // namespace hsh

#endif  // HSH_POSCHL_TELLER_HPP
