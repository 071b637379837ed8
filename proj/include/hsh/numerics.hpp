#ifndef HSH_NUMERICS_HPP
#define HSH_NUMERICS_HPP

#include "hsh/geometry.hpp"
#include "hsh/harmonics.hpp"

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Verification engines: tensor-product quadrature over S^N and a
/// finite-difference Laplace-Beltrami operator.

namespace hsh {

using SphereFunction = std::function<std::complex<double>(const AngularPoint&)>;

/// |S^N| = 2 pi^{(N+1)/2} / Gamma((N+1)/2).
double sphere_area(int dimension);

/// Product rule for int_{S^N} f dOmega, dOmega = prod_k sin^{k-1} t_k dt_k.
///
/// Axis 1 uses uniform periodic nodes. Axis k >= 2 uses the substitution
/// z = cos t_k, sin^{k-1} t dt -> (1-z^2)^{(k-2)/2} dz, integrated by the
/// Gauss-Gegenbauer rule for that weight (plain Gauss-Legendre on axis 2), so
/// no node sits on a pole.
class QuadratureGrid {
 public:
  struct Axis {
    std::vector<double> theta;
    std::vector<double> weight;
  };
  struct Node {
    AngularPoint point;
    double weight;
  };

  /// orders[k-1] = node count on axis k. Throws std::invalid_argument for a
  /// size mismatch or non-positive order.
  QuadratureGrid(int dimension, std::vector<int> orders);

  /// Orders that integrate Y_a^* Y_b exactly for all indices with
  /// l_N <= max_degree: 2 max_degree + 2 azimuthal nodes, max_degree + 2 per
  /// polar axis.
  static QuadratureGrid for_degree(int dimension, int max_degree);

  int dimension() const { return static_cast<int>(axes_.size()); }
  const std::vector<int>& orders() const { return orders_; }
  const std::vector<Axis>& axes() const { return axes_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double total_weight() const;

 private:
  std::vector<int> orders_;
  std::vector<Axis> axes_;
  std::vector<Node> nodes_;
};

/// Raised when an integrand is non-finite at a node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, AngularPoint node)
      : std::runtime_error(what), node_(std::move(node)) {}
  const AngularPoint& node() const { return node_; }

 private:
  AngularPoint node_;
};

std::complex<double> integrate_sphere(const SphereFunction& f, const QuadratureGrid& grid);

/// <Y_a, Y_b> = int Y_a^* Y_b dOmega on the grid, using that both are
/// products of one-variable factors: the tensor sum collapses to a product of
/// per-axis sums. Equal to integrate_sphere of the pointwise product up to
/// rounding.
std::complex<double> inner_product(const MultiIndex& a, const MultiIndex& b,
                                   const QuadratureGrid& grid, Basis basis = Basis::complex);

enum class StencilOrder { second = 2, fourth = 4 };

struct StencilConfig {
  double step = 1e-3;
  StencilOrder order = StencilOrder::fourth;
};

/// Throws std::invalid_argument unless step lies in [1e-6, 1e-1].
void validate(const StencilConfig& cfg);

/// sum_i h_i [ (i-1) cot t_i D1_i f + D2_i f ] with central differences;
/// azimuth steps wrap periodically. Throws SingularPointError unless
/// sin t_k >= 10 h for every k >= 2.
std::complex<double> laplace_beltrami_fd(const SphereFunction& f, const AngularPoint& p,
                                         const StencilConfig& cfg = {});

/// Deterministic interior sample: Halton points with sin t_k >= 0.2 for
/// k >= 2 and t_1 over [0, 2 pi).
std::vector<AngularPoint> interior_sample(int dimension, int count = 20, unsigned seed = 0);

struct VerificationTolerances {
  double eigen = 1e-4;  ///< max |Lap Y + lambda Y| / (1 + lambda |Y|)
  double ortho = 1e-8;  ///< max |<Y_a, Y_b>| / sqrt(norm_a norm_b)
  double norm = 1e-8;   ///< |<Y, Y> - norm_integral| / norm_integral
};

struct VerificationReport {
  MultiIndex index;
  double lambda = 0.0;
  double eigen_residual_max = 0.0;
  double norm_relerr = 0.0;
  double ortho_max = 0.0;
  bool passed = false;
};

/// Checks one harmonic: eigen-residual on interior_sample(N), quadrature norm
/// against norm_integral, and the largest scaled overlap with every other
/// index of the same l_N. Failures are reported, not thrown.
VerificationReport residual_report(const MultiIndex& idx, const QuadratureGrid& grid,
                                   const StencilConfig& cfg = {},
                                   const VerificationTolerances& tol = {});

}  // namespace hsh

#endif  // HSH_NUMERICS_HPP
