#ifndef HSH_QUADRATURE_HPP
#define HSH_QUADRATURE_HPP

#include <vector>

namespace hsh {

struct QuadratureRule {
  std::vector<double> nodes;    ///< ascending
  std::vector<double> weights;  ///< positive
};

/// Gauss rule for int_{-1}^{1} f(z) (1-z^2)^alpha dz, exact for polynomials
/// of degree <= 2 order - 1. Requires order >= 1 and alpha > -1/2.
///
/// Nodes come from the eigenvalues of the symmetric Jacobi matrix, are polished
/// by Newton steps on the orthonormal recurrence, and the weights are the
/// Christoffel numbers 1 / sum_k p_k(z_i)^2.
QuadratureRule gauss_gegenbauer(int order, double alpha);

/// alpha = 0.
QuadratureRule gauss_legendre(int order);

/// Nodes 2 pi j / order on [0, 2 pi) with equal weights 2 pi / order:
/// exact for e^{i m t} with |m| < order.
QuadratureRule uniform_periodic(int order);

}  // namespace hsh

#endif  // HSH_QUADRATURE_HPP
