#include "hsh/numerics.hpp"

#include "hsh/quadrature.hpp"
#include "hsh/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hsh {

namespace {

constexpr double kInteriorSine = 0.2;

double radical_inverse(unsigned index, unsigned base) {
  double result = 0.0;
  double scale = 1.0 / base;
  while (index > 0) {
    result += (index % base) * scale;
    index /= base;
    scale /= base;
  }
  return result;
}

std::vector<unsigned> first_primes(int count) {
  std::vector<unsigned> primes;
  for (unsigned candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

std::string describe(const AngularPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.theta().size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace

double sphere_area(int dimension) {
  if (dimension < 1) throw std::invalid_argument("sphere dimension must be >= 1");
  const double half = 0.5 * (dimension + 1);
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - log_gamma(half));
}

QuadratureGrid::QuadratureGrid(int dimension, std::vector<int> orders)
    : orders_(std::move(orders)) {
  if (dimension < 1) throw std::invalid_argument("grid dimension must be >= 1");
  if (static_cast<int>(orders_.size()) != dimension) {
    throw std::invalid_argument("grid needs one order per axis");
  }
  for (int order : orders_) {
    if (order < 1) throw std::invalid_argument("grid orders must be positive");
  }

  const QuadratureRule azimuth = uniform_periodic(orders_.front());
  axes_.push_back(Axis{azimuth.nodes, azimuth.weights});
  for (int k = 2; k <= dimension; ++k) {
    const QuadratureRule rule =
        gauss_gegenbauer(orders_[static_cast<std::size_t>(k - 1)], 0.5 * (k - 2));
    Axis axis;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      axis.theta.push_back(std::acos(rule.nodes[j]));
      axis.weight.push_back(rule.weights[j]);
    }
    axes_.push_back(std::move(axis));
  }

  // Materialize the tensor grid, axis 1 varying fastest.
  std::size_t total = 1;
  for (int order : orders_) total *= static_cast<std::size_t>(order);
  nodes_.reserve(total);
  std::vector<std::size_t> counter(axes_.size(), 0);
  std::vector<double> theta(axes_.size(), 0.0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double weight = 1.0;
    for (std::size_t a = 0; a < axes_.size(); ++a) {
      theta[a] = axes_[a].theta[counter[a]];
      weight *= axes_[a].weight[counter[a]];
    }
    nodes_.push_back(Node{AngularPoint(theta), weight});
    for (std::size_t a = 0; a < axes_.size(); ++a) {
      if (++counter[a] < axes_[a].theta.size()) break;
      counter[a] = 0;
    }
  }
}

QuadratureGrid QuadratureGrid::for_degree(int dimension, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  std::vector<int> orders(static_cast<std::size_t>(dimension), max_degree + 2);
  if (!orders.empty()) orders.front() = 2 * max_degree + 2;
  return QuadratureGrid(dimension, std::move(orders));
}

double QuadratureGrid::total_weight() const {
  double sum = 0.0;
  for (const Node& node : nodes_) sum += node.weight;
  return sum;
}

std::complex<double> integrate_sphere(const SphereFunction& f, const QuadratureGrid& grid) {
  std::complex<double> sum = 0.0;
  for (const auto& node : grid.nodes()) {
    const std::complex<double> value = f(node.point);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw EvaluationError("integrand is not finite at node " + describe(node.point),
                            node.point);
    }
    sum += node.weight * value;
  }
  return sum;
}

std::complex<double> inner_product(const MultiIndex& a, const MultiIndex& b,
                                   const QuadratureGrid& grid, Basis basis) {
  if (a.dimension() != grid.dimension() || b.dimension() != grid.dimension()) {
    throw std::invalid_argument("inner product: index and grid dimensions differ");
  }
  std::complex<double> product = 1.0;
  for (int k = 1; k <= grid.dimension(); ++k) {
    const auto& axis = grid.axes()[static_cast<std::size_t>(k - 1)];
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < axis.theta.size(); ++j) {
      sum += axis.weight[j] * std::conj(factor_function(k, a, axis.theta[j], basis)) *
             factor_function(k, b, axis.theta[j], basis);
    }
    product *= sum;
  }
  return product;
}

void validate(const StencilConfig& cfg) {
  if (!(cfg.step >= 1e-6 && cfg.step <= 1e-1)) {
    throw std::invalid_argument("stencil step must lie in [1e-6, 1e-1], got " +
                                std::to_string(cfg.step));
  }
  if (cfg.order != StencilOrder::second && cfg.order != StencilOrder::fourth) {
    throw std::invalid_argument("stencil order must be 2 or 4");
  }
}

std::complex<double> laplace_beltrami_fd(const SphereFunction& f, const AngularPoint& p,
                                         const StencilConfig& cfg) {
  validate(cfg);
  const double h = cfg.step;
  for (int k = 2; k <= p.dimension(); ++k) {
    if (std::sin(p[static_cast<std::size_t>(k - 1)]) < 10.0 * h) {
      throw SingularPointError("finite-difference point too close to a pole on axis " +
                               std::to_string(k));
    }
  }
  const LaplaceBeltramiCoefficients coeff = laplace_beltrami_coefficients(p);
  const std::complex<double> center = f(p);

  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < p.theta().size(); ++i) {
    const double t = p[i];
    const auto shifted = [&](double offset) { return f(p.with_angle(i, t + offset)); };
    std::complex<double> d1;
    std::complex<double> d2;
    if (cfg.order == StencilOrder::second) {
      const auto fp = shifted(h);
      const auto fm = shifted(-h);
      d1 = (fp - fm) / (2.0 * h);
      d2 = (fp - 2.0 * center + fm) / (h * h);
    } else {
      const auto fp1 = shifted(h);
      const auto fm1 = shifted(-h);
      const auto fp2 = shifted(2.0 * h);
      const auto fm2 = shifted(-2.0 * h);
      d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
      d2 = (-fp2 + 16.0 * fp1 - 30.0 * center + 16.0 * fm1 - fm2) / (12.0 * h * h);
    }
    total += coeff.inverse_metric[i] * (coeff.first_order[i] * d1 + d2);
  }
  return total;
}

std::vector<AngularPoint> interior_sample(int dimension, int count, unsigned seed) {
  if (dimension < 1) throw std::invalid_argument("sample dimension must be >= 1");
  const std::vector<unsigned> primes = first_primes(dimension);
  const double low = std::asin(kInteriorSine);
  const double span = std::numbers::pi - 2.0 * low;
  std::vector<AngularPoint> points;
  points.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int j = 0; j < count; ++j) {
    const unsigned index = seed + static_cast<unsigned>(j) + 1;
    std::vector<double> theta(static_cast<std::size_t>(dimension));
    theta[0] = 2.0 * std::numbers::pi * radical_inverse(index, primes[0]);
    for (int k = 2; k <= dimension; ++k) {
      theta[static_cast<std::size_t>(k - 1)] =
          low + span * radical_inverse(index, primes[static_cast<std::size_t>(k - 1)]);
    }
    points.emplace_back(std::move(theta));
  }
  return points;
}

VerificationReport residual_report(const MultiIndex& idx, const QuadratureGrid& grid,
                                   const StencilConfig& cfg, const VerificationTolerances& tol) {
  VerificationReport report{.index = idx, .lambda = eigenvalue(idx)};
  const SphereFunction y = [&idx](const AngularPoint& p) { return evaluate(idx, p); };

  for (const AngularPoint& p : interior_sample(idx.dimension())) {
    const std::complex<double> value = y(p);
    const std::complex<double> lap = laplace_beltrami_fd(y, p, cfg);
    const double scaled = std::abs(lap + report.lambda * value) /
                          (1.0 + report.lambda * std::abs(value));
    report.eigen_residual_max = std::max(report.eigen_residual_max, scaled);
  }

  const double norm = norm_integral(idx);
  const double quadrature_norm = inner_product(idx, idx, grid).real();
  report.norm_relerr = std::abs(quadrature_norm - norm) / norm;

  for (const MultiIndex& other : enumerate_indices(idx.dimension(), idx.top())) {
    if (other == idx) continue;
    const double overlap =
        std::abs(inner_product(idx, other, grid)) / std::sqrt(norm * norm_integral(other));
    report.ortho_max = std::max(report.ortho_max, overlap);
  }

  report.passed = report.eigen_residual_max <= tol.eigen && report.norm_relerr <= tol.norm &&
                  report.ortho_max <= tol.ortho;
  return report;
}

}  // namespace hsh
