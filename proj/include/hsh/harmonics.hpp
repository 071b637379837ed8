#ifndef HSH_HARMONICS_HPP
#define HSH_HARMONICS_HPP

#include "hsh/geometry.hpp"

#include <compare>
#include <complex>
#include <stdexcept>
#include <vector>

/// Hyperspherical harmonics on S^N built by separation of variables:
///
///   Y_{l_1..l_N}(t) = e^{+-i l_1 t_1} prod_{k=2}^{N} sin^{l_{k-1}}(t_k)
///                      C_{l_k - l_{k-1}}^{l_{k-1} + (k-1)/2}(cos t_k),
///
///   l_N >= l_{N-1} >= ... >= l_1 >= 0,   eigenvalue -l_N (l_N + N - 1).
///
/// Each polar factor is a symmetric Poschl-Teller bound state
/// sin^{mu_k} C_{n_k}^{mu_k} divided by sin^{(k-1)/2}, with
/// mu_k = l_{k-1} + (k-1)/2 and n_k = l_k - l_{k-1}.
///
/// Normalization: norm_integral() is the raw value of int |Y|^2 dOmega.
/// evaluate_normalized() divides Y by its square root. (An alternative
/// reading of the normalization constant as the inverse square of that
/// integral would divide by its fourth root instead; that convention is
/// not used here.)

namespace hsh {

class InvalidMultiIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sign of the azimuthal exponent e^{+- i l_1 t_1}.
enum class Branch { plus, minus };

/// Azimuthal basis: the complex exponential, or cos/sin for plus/minus.
enum class Basis { complex, real };

/// k/2 stored exactly as the integer k.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

class MultiIndex {
 public:
  /// chain = (l_1, ..., l_N). Throws InvalidMultiIndex for an empty chain, a
  /// negative entry, or l_k < l_{k-1}. The branch is forced to plus when
  /// l_1 = 0, where it has no effect.
  explicit MultiIndex(std::vector<int> chain, Branch branch = Branch::plus);

  int dimension() const { return static_cast<int>(chain_.size()); }
  const std::vector<int>& chain() const { return chain_; }
  /// l_k, 1-based.
  int l(int k) const { return chain_.at(static_cast<std::size_t>(k - 1)); }
  int top() const { return chain_.back(); }
  Branch branch() const { return branch_; }
  /// n_1 = +-l_1.
  int azimuthal_number() const { return branch_ == Branch::plus ? chain_.front() : -chain_.front(); }

  bool operator==(const MultiIndex&) const = default;
  /// Orders by dimension, then the chain lexicographically, then plus < minus.
  std::strong_ordering operator<=>(const MultiIndex& other) const;

 private:
  std::vector<int> chain_;
  Branch branch_;
};

struct SeparationConstants {
  std::vector<double> lambda;     ///< lambda_1..lambda_N
  std::vector<HalfInteger> mu;    ///< mu_2..mu_N
  std::vector<int> degree;        ///< n_2..n_N (Gegenbauer degrees)
  int azimuthal = 0;              ///< n_1, |n_1| = l_1
};

/// lambda_1 = n_1^2; mu_2 from the positive root of mu(mu-1) = lambda_1 - 1/4;
/// mu_k = n_{k-1} + mu_{k-1} + 1/2 for k >= 3; lambda_k = (n_k+mu_k)^2 - (k-1)^2/4.
SeparationConstants derive_constants(const MultiIndex& idx);

/// y_k(theta) for k = 1..N; throws std::out_of_range for other k.
/// k = 1 gives the azimuthal factor in the requested basis, k >= 2 the real
/// polar factor sin^{l_{k-1}} C_{n_k}^{mu_k}(cos theta).
std::complex<double> factor_function(int k, const MultiIndex& idx, double theta,
                                     Basis basis = Basis::complex);

/// Product of all factors. Throws std::invalid_argument on dimension mismatch.
std::complex<double> evaluate(const MultiIndex& idx, const AngularPoint& p,
                              Basis basis = Basis::complex);

/// evaluate() divided by sqrt(norm_integral(idx, basis)).
std::complex<double> evaluate_normalized(const MultiIndex& idx, const AngularPoint& p,
                                         Basis basis = Basis::complex);

/// l_N (l_N + N - 1).
double eigenvalue(const MultiIndex& idx);

/// ln of norm_integral; finite for every valid index.
double log_norm_integral(const MultiIndex& idx, Basis basis = Basis::complex);

/// int_{S^N} |Y|^2 dOmega = 2 pi prod_{k=2}^{N} ||C_{n_k}^{mu_k}||^2.
/// In the real basis the azimuthal factor contributes pi instead of 2 pi when l_1 > 0.
double norm_integral(const MultiIndex& idx, Basis basis = Basis::complex);

/// Every chain 0 <= l_1 <= ... <= l_N = top, in increasing lexicographic
/// order, with both branches (plus first) whenever l_1 >= 1.
std::vector<MultiIndex> enumerate_indices(int dimension, int top);

}  // namespace hsh

#endif  // HSH_HARMONICS_HPP
