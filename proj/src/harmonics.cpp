#include "hsh/harmonics.hpp"

#include "hsh/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace hsh {

namespace {

// Polar factor for k >= 2: sin^{l_{k-1}} C_{l_k - l_{k-1}}^{l_{k-1} + (k-1)/2}(cos theta).
double polar_factor(int k, int lower, int upper, double theta) {
  const GegenbauerOrder order{upper - lower, lower + 0.5 * (k - 1)};
  const double s = std::sin(theta);
  double sine_power = 1.0;
  for (int i = 0; i < lower; ++i) sine_power *= s;
  return sine_power * gegenbauer(order, std::cos(theta));
}

// Fills chain[position..N-2] in increasing lexicographic order; chain.back() = l_N is fixed.
void enumerate_chains(std::vector<int>& chain, std::size_t position, std::vector<MultiIndex>& out) {
  if (position + 1 == chain.size()) {
    out.emplace_back(chain, Branch::plus);
    if (chain.front() >= 1) out.emplace_back(chain, Branch::minus);
    return;
  }
  const int floor = position == 0 ? 0 : chain[position - 1];
  for (int value = floor; value <= chain.back(); ++value) {
    chain[position] = value;
    enumerate_chains(chain, position + 1, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> chain, Branch branch)
    : chain_(std::move(chain)), branch_(branch) {
  if (chain_.empty()) throw InvalidMultiIndex("multi-index needs N >= 1 entries");
  if (chain_.front() < 0) {
    throw InvalidMultiIndex("multi-index entries must be non-negative, l_1 = " +
                            std::to_string(chain_.front()));
  }
  for (std::size_t k = 1; k < chain_.size(); ++k) {
    if (chain_[k] < chain_[k - 1]) {
      throw InvalidMultiIndex("multi-index chain must be non-decreasing: l_" +
                              std::to_string(k + 1) + " = " + std::to_string(chain_[k]) +
                              " < l_" + std::to_string(k) + " = " +
                              std::to_string(chain_[k - 1]));
    }
  }
  if (chain_.front() == 0) branch_ = Branch::plus;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = chain_.size() <=> other.chain_.size(); c != 0) return c;
  if (auto c = chain_ <=> other.chain_; c != 0) return c;
  return branch_ <=> other.branch_;
}

SeparationConstants derive_constants(const MultiIndex& idx) {
  const int n_dim = idx.dimension();
  SeparationConstants sc;
  sc.azimuthal = idx.azimuthal_number();
  sc.lambda.push_back(static_cast<double>(sc.azimuthal) * sc.azimuthal);
  if (n_dim == 1) return sc;

  // mu_2 (mu_2 - 1) = lambda_1 - 1/4, positive root: mu_2 = 1/2 + sqrt(lambda_1) = l_1 + 1/2.
  const int l1 = idx.l(1);
  const double mu2 = 0.5 + std::sqrt(sc.lambda.front());
  HalfInteger mu = HalfInteger::from_twice(2 * l1 + 1);
  if (mu.value() != mu2) {
    throw std::logic_error("mu_2 does not equal l_1 + 1/2");
  }

  for (int k = 2; k <= n_dim; ++k) {
    if (k >= 3) {
      // mu_k = n_{k-1} + mu_{k-1} + 1/2
      mu = HalfInteger::from_twice(mu.twice() + 2 * sc.degree.back() + 1);
    }
    const int degree = idx.l(k) - idx.l(k - 1);
    sc.mu.push_back(mu);
    sc.degree.push_back(degree);
    // lambda_k = (n_k + mu_k)^2 - (k-1)^2/4 = l_k (l_k + k - 1); the product form is exact.
    const double alpha = degree + mu.value();
    const double shift = 0.5 * (k - 1);
    sc.lambda.push_back((alpha - shift) * (alpha + shift));
  }
  return sc;
}

std::complex<double> factor_function(int k, const MultiIndex& idx, double theta, Basis basis) {
  if (k < 1 || k > idx.dimension()) {
    throw std::out_of_range("factor index k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(idx.dimension()) + "]");
  }
  if (k == 1) {
    const double phase = idx.azimuthal_number() * theta;
    if (basis == Basis::complex) return {std::cos(phase), std::sin(phase)};
    const int l1 = idx.l(1);
    if (l1 == 0) return {1.0, 0.0};
    return {idx.branch() == Branch::plus ? std::cos(l1 * theta) : std::sin(l1 * theta), 0.0};
  }
  return {polar_factor(k, idx.l(k - 1), idx.l(k), theta), 0.0};
}

std::complex<double> evaluate(const MultiIndex& idx, const AngularPoint& p, Basis basis) {
  if (idx.dimension() != p.dimension()) {
    throw std::invalid_argument("multi-index dimension " + std::to_string(idx.dimension()) +
                                " does not match point dimension " +
                                std::to_string(p.dimension()));
  }
  double polar = 1.0;
  for (int k = 2; k <= idx.dimension(); ++k) {
    polar *= polar_factor(k, idx.l(k - 1), idx.l(k), p[static_cast<std::size_t>(k - 1)]);
  }
  return factor_function(1, idx, p[0], basis) * polar;
}

std::complex<double> evaluate_normalized(const MultiIndex& idx, const AngularPoint& p,
                                         Basis basis) {
  return evaluate(idx, p, basis) * std::exp(-0.5 * log_norm_integral(idx, basis));
}

double eigenvalue(const MultiIndex& idx) {
  const double top = idx.top();
  return top * (top + idx.dimension() - 1);
}

double log_norm_integral(const MultiIndex& idx, Basis basis) {
  const bool half_azimuth = basis == Basis::real && idx.l(1) > 0;
  double value = std::log(half_azimuth ? std::numbers::pi : 2.0 * std::numbers::pi);
  const SeparationConstants sc = derive_constants(idx);
  for (std::size_t j = 0; j < sc.degree.size(); ++j) {
    value += log_gegenbauer_norm_sq(GegenbauerOrder{sc.degree[j], sc.mu[j].value()});
  }
  return value;
}

double norm_integral(const MultiIndex& idx, Basis basis) {
  return std::exp(log_norm_integral(idx, basis));
}

std::vector<MultiIndex> enumerate_indices(int dimension, int top) {
  if (dimension < 1) throw std::invalid_argument("enumeration needs N >= 1");
  if (top < 0) throw std::invalid_argument("enumeration needs l_N >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> chain(static_cast<std::size_t>(dimension), 0);
  chain.back() = top;
  enumerate_chains(chain, 0, out);
  return out;
}

}  // namespace hsh
