#include "hsh/quadrature.hpp"

#include "hsh/special_functions.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsh {

namespace {

// Monic recurrence coefficient beta_k for the weight (1-z^2)^alpha, k >= 1.
double symmetric_jacobi_beta(int k, double alpha) {
  const double two_k_a = 2.0 * k + 2.0 * alpha;
  return k * (k + 2.0 * alpha) / ((two_k_a + 1.0) * (two_k_a - 1.0));
}

struct OrthonormalValues {
  double value = 0.0;       // p_n(z)
  double derivative = 0.0;  // p_n'(z)
  double christoffel = 0.0; // sum_{k<n} p_k(z)^2
};

OrthonormalValues orthonormal_at(int n, double alpha, double mass, double z) {
  // sqrt(beta_{k+1}) p_{k+1} = z p_k - sqrt(beta_k) p_{k-1}
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(mass);
  double d_prev = 0.0;
  double d = 0.0;
  double sum = 0.0;
  double root_beta_k = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += p * p;
    const double root_beta_next = std::sqrt(symmetric_jacobi_beta(k + 1, alpha));
    const double p_next = (z * p - root_beta_k * p_prev) / root_beta_next;
    const double d_next = (p + z * d - root_beta_k * d_prev) / root_beta_next;
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    root_beta_k = root_beta_next;
  }
  return {p, d, sum};
}

}  // namespace

QuadratureRule gauss_gegenbauer(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (!(alpha > -0.5) || !std::isfinite(alpha)) {
    throw std::invalid_argument("Gauss-Gegenbauer exponent must exceed -1/2");
  }
  // int_{-1}^{1} (1-z^2)^alpha dz
  const double mass = std::sqrt(std::numbers::pi) *
                      std::exp(log_gamma(alpha + 1.0) - log_gamma(alpha + 1.5));

  QuadratureRule rule;
  if (order == 1) {
    rule.nodes = {0.0};
    rule.weights = {mass};
    return rule;
  }

  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd off_diagonal(order - 1);
  for (int k = 1; k < order; ++k) off_diagonal(k - 1) = std::sqrt(symmetric_jacobi_beta(k, alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, off_diagonal, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Jacobi matrix eigen-solve failed");
  }

  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double z = solver.eigenvalues()(i);
    for (int step = 0; step < 3; ++step) {
      const OrthonormalValues v = orthonormal_at(order, alpha, mass, z);
      if (v.derivative == 0.0) break;
      const double dz = v.value / v.derivative;
      z -= dz;
      if (std::abs(dz) < 1e-17) break;
    }
    const OrthonormalValues v = orthonormal_at(order, alpha, mass, z);
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = 1.0 / v.christoffel;
  }
  // Symmetrize: the rule is exactly symmetric about 0.
  for (int i = 0, j = order - 1; i < j; ++i, --j) {
    const double z = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                            rule.nodes[static_cast<std::size_t>(i)]);
    const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                            rule.weights[static_cast<std::size_t>(j)]);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(j)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(j)] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(int order) { return gauss_gegenbauer(order, 0.0); }

QuadratureRule uniform_periodic(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  QuadratureRule rule;
  const double step = 2.0 * std::numbers::pi / order;
  for (int j = 0; j < order; ++j) {
    rule.nodes.push_back(j * step);
    rule.weights.push_back(step);
  }
  return rule;
}

}  // namespace hsh
