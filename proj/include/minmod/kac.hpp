#pragma once

#include "minmod/rational.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace minmod {

/// Unitary Virasoro minimal model with central charge
/// c_m = 1 - 6/((m+2)(m+3)), m >= 1.  Immutable.
class MinimalModel {
 public:
  explicit MinimalModel(int m);

  int m() const { return m_; }
  int p() const { return m_ + 2; }
  int q() const { return m_ + 3; }

  Rational central_charge() const;

  friend bool operator==(const MinimalModel& a, const MinimalModel& b) {
    return a.m_ == b.m_;
  }

 private:
  int m_;
};

/// A Kac-table label (r,s), 1 <= r <= m+1, 1 <= s <= m+2, stored as the
/// lexicographically smallest representative of {(r,s), (p-r,q-s)}.
class PrimaryField {
 public:
  /// Canonicalizes on construction; throws std::invalid_argument when the
  /// label is outside the Kac table.
  PrimaryField(const MinimalModel& model, int r, int s);

  const MinimalModel& model() const { return model_; }
  int r() const { return r_; }
  int s() const { return s_; }

  Rational weight() const;

  bool is_vacuum() const { return r_ == 1 && s_ == 1; }

  std::string label() const;            // "r.s"
  std::string qualified_label() const;  // "m:r.s"

  friend bool operator==(const PrimaryField& a, const PrimaryField& b) {
    return a.model_ == b.model_ && a.r_ == b.r_ && a.s_ == b.s_;
  }

 private:
  MinimalModel model_;
  int r_;
  int s_;
};

Rational central_charge(const MinimalModel& model);

/// h^m_{r,s} = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3)) for a raw label;
/// invariant under (r,s) -> (p-r,q-s).  Throws on out-of-range labels.
Rational conformal_weight(const MinimalModel& model, int r, int s);

/// All (p-1)(q-1)/2 canonical primaries, sorted by (weight, r, s).
std::vector<PrimaryField> enumerate_primaries(const MinimalModel& model);

/// The canonical primary with the given conformal weight, if any.
std::optional<PrimaryField> field_with_weight(const MinimalModel& model,
                                              const Rational& h);

/// The minimal model with the given central charge, if any.
std::optional<MinimalModel> model_with_central_charge(const Rational& c);

/// Parses the "r.s" label syntax.  Throws std::invalid_argument.
PrimaryField parse_field(const MinimalModel& model, std::string_view text);

}  // namespace minmod
