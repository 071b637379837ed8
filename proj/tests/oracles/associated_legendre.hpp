#ifndef HSH_TESTS_ASSOCIATED_LEGENDRE_HPP
#define HSH_TESTS_ASSOCIATED_LEGENDRE_HPP

#include <complex>

// Classical S^2 basis, written independently of the library: associated
// Legendre functions from the standard m-then-l recurrence, with the
// Condon-Shortley phase and orthonormal scaling.
namespace oracle {

// P_l^m(x) for 0 <= m <= l.
double associated_legendre(int l, int m, double x);

// Y_l^m(theta, phi), -l <= m <= l, theta the polar angle, phi the azimuth.
std::complex<double> classical_ylm(int l, int m, double theta, double phi);

}  // namespace oracle

#endif
