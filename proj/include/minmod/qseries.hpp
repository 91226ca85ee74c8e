#pragma once

#include "minmod/kac.hpp"
#include "minmod/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minmod {

/// Truncated formal series in q^(1/D) with exact integer coefficients and an
/// exact rational leading exponent.
///
/// Storage is stride-compressed: coefficients sit on the grid
/// offset, offset+step, offset+2*step, ... with all grid exponents below
/// order() retained exactly.  den() recovers the spec-level denominator D
/// (the smallest D making offset and step integral multiples of 1/D).
///
/// Truncation is explicit: addition carries order = min of operand orders;
/// multiplication carries the exact Cauchy knowledge bound
/// min(order_a + offset_b, order_b + offset_a), snapped up to the next grid
/// exponent (there are no representable exponents in between).
///
/// Immutable value type; safe to share across threads.
class FormalQSeries {
 public:
  /// The zero series, exact below `order`.
  static FormalQSeries zero(const Rational& order);

  /// 1 + O(q^order).
  static FormalQSeries one(const Rational& order);

  static FormalQSeries monomial(const Rational& exponent, Int coeff,
                                const Rational& order);

  /// Coefficients at exponent, exponent+step, ... (normalized on entry).
  FormalQSeries(const Rational& offset, const Rational& step,
                std::vector<Int> coeffs, const Rational& order);

  const Rational& offset() const { return offset_; }
  const Rational& step() const { return step_; }
  const Rational& order() const { return order_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Smallest D with D*offset and D*step integral.
  std::int64_t den() const;

  bool is_zero() const { return coeffs_.empty(); }

  /// Exponent of the first nonzero coefficient; throws std::logic_error on
  /// the zero series.
  Rational leading_exponent() const;

  /// Coefficient at an exact exponent (0 off the grid / below the offset).
  /// Throws std::out_of_range for exponents at or beyond the truncation
  /// order.
  Int coeff(const Rational& exponent) const;

  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<Rational, Int>> terms() const;

  /// Same stored data (canonical form), including truncation order.
  friend bool operator==(const FormalQSeries& a, const FormalQSeries& b) {
    return a.offset_ == b.offset_ && a.step_ == b.step_ &&
           a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  Rational offset_;
  Rational step_;
  std::vector<Int> coeffs_;
  Rational order_;
};

FormalQSeries series_add(const FormalQSeries& a, const FormalQSeries& b);
FormalQSeries series_mul(const FormalQSeries& a, const FormalQSeries& b);
FormalQSeries truncate(const FormalQSeries& a, const Rational& order);

inline FormalQSeries operator+(const FormalQSeries& a, const FormalQSeries& b) {
  return series_add(a, b);
}
inline FormalQSeries operator*(const FormalQSeries& a, const FormalQSeries& b) {
  return series_mul(a, b);
}

/// First exponent <= `through` where the two series differ, if any.  Both
/// series must be exact past `through`; throws std::invalid_argument
/// otherwise.
std::optional<Rational> first_difference(const FormalQSeries& a,
                                         const FormalQSeries& b,
                                         const Rational& through);

/// eta = q^{1/24} prod_{n>=1} (1 - q^n), truncated below `order`.
FormalQSeries eta_series(const Rational& order);

/// Power-series inverse of eta; satisfies eta * eta_inverse = 1 + O(q^order).
FormalQSeries eta_inverse_series(const Rational& order);

/// sigma_3(n) = sum of cubes of divisors.
Int sigma3(std::int64_t n);

/// Theta series of sqrt(2)E8: coefficient of q^{2n} is 240 sigma_3(n)
/// (1 at q^0).  Computed both from the divisor sums and by exact lattice
/// enumeration over the E8 Gram matrix; the two are asserted equal.
FormalQSeries theta_sqrt2_e8(const Rational& order);

/// counts[n] = number of E8 lattice vectors of squared norm n, for
/// n <= max_norm, by exact enumeration (odd norms are 0).
std::vector<Int> e8_norm_counts(int max_norm);

/// Virasoro minimal-model character
///   chi_{r,s} = eta^{-1} sum_{n in Z} [ q^{(2pqn+qr-ps)^2/4pq}
///                                      - q^{(2pqn+qr+ps)^2/4pq} ],
/// truncated below `order`.  Leading exponent h - c/24, leading
/// coefficient 1.  The raw-label overload is Kac-symmetric in (r,s).
FormalQSeries minimal_character(const PrimaryField& field,
                                const Rational& order);
FormalQSeries minimal_character(const MinimalModel& model, int r, int s,
                                const Rational& order);

/// Expression tree for characters: minimal-model leaves, eta^{-n} and
/// theta_sqrt2_e8 building blocks, tensor products and direct sums.
class CharacterSpec {
 public:
  enum class Kind { Minimal, EtaInversePower, ThetaE8Scaled, Tensor, Sum };

  static CharacterSpec minimal(const PrimaryField& field);
  /// Resolves the weight against the Kac table; throws std::invalid_argument
  /// when no primary has weight h.
  static CharacterSpec minimal(const MinimalModel& model, const Rational& h);
  static CharacterSpec eta_inverse_power(int n);
  static CharacterSpec theta_e8_scaled();
  static CharacterSpec tensor(std::vector<CharacterSpec> factors);
  static CharacterSpec sum(std::vector<CharacterSpec> summands);

  Kind kind() const { return kind_; }
  const PrimaryField& field() const;
  int power() const { return power_; }
  const std::vector<CharacterSpec>& children() const { return children_; }

  /// Exact leading exponent of the evaluated series.
  Rational leading_offset() const;

  /// Minimal conformal weight of the module the spec denotes: leaf weight,
  /// sum of factor minima for tensors, minimum over summands.  Throws
  /// std::logic_error on non-module leaves (eta/theta).
  Rational min_weight() const;

 private:
  CharacterSpec() = default;

  Kind kind_ = Kind::Sum;
  std::optional<PrimaryField> field_;
  int power_ = 0;
  std::vector<CharacterSpec> children_;
};

/// Recursive evaluation, exact below `order`.
FormalQSeries evaluate(const CharacterSpec& spec, const Rational& order);

struct SeriesComparison {
  bool pass = false;
  Rational compared_through;  // inclusive exponent bound
  std::optional<Rational> first_mismatch;
  Int lhs_at_mismatch;
  Int rhs_at_mismatch;
  std::string summary() const;
};

/// Certifies Theta_{sqrt2 E8} * eta^{-8} against the 14400-term character
/// sum over tuples (k_0..k_8), 0 <= k_j <= j+1 even, with factors
/// L(c_m, h^m_{k_{m-1}+1, k_m+1}) and the trailing module character given by
/// u_specs[k_8/2].  `rel_order` counts exponents above the common leading
/// exponent -1/3; comparison is exact integer equality through
/// -1/3 + rel_order inclusive.
SeriesComparison verify_e8_decomposition(
    const Rational& rel_order, const std::vector<CharacterSpec>& u_specs);

struct WeightPositivityReport {
  std::vector<Rational> min_weights;
  std::size_t vacuum_index = 0;
  bool pass = false;
  std::string summary() const;
};

/// Checks that every spec except the vacuum has strictly positive minimal
/// weight and the vacuum has weight exactly 0.
WeightPositivityReport verify_weight_positivity(
    const std::vector<CharacterSpec>& specs, std::size_t vacuum_index = 0);

}  // namespace minmod
