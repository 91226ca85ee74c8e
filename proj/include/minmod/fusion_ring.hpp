#pragma once

#include "minmod/kac.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace minmod {

using Label = std::string;

/// Formal non-negative integer combination of labels.
using Multiset = std::map<Label, std::int64_t>;

/// A finite commutative fusion ring: ordered label set, unit, and sparse
/// structure constants N_{ab}^c (absent = 0).  Immutable once built; all
/// query paths are const and thread-safe.
class FusionRing {
 public:
  FusionRing(std::vector<Label> labels, Label unit);

  const std::vector<Label>& labels() const { return labels_; }
  const Label& unit() const { return unit_; }
  std::size_t size() const { return labels_.size(); }

  /// Throws std::invalid_argument for labels outside the ring.
  std::size_t index_of(const Label& label) const;

  void set_constant(const Label& a, const Label& b, const Label& c,
                    std::int64_t n);

  std::int64_t n(const Label& a, const Label& b, const Label& c) const;
  std::int64_t n(std::size_t a, std::size_t b, std::size_t c) const;

  /// Bilinear extension of the product to formal sums of labels.
  Multiset fuse(const Multiset& a, const Multiset& b) const;

  /// Product of two single labels as a multiset.
  Multiset fuse(const Label& a, const Label& b) const;

  /// {"labels": [...], "unit": ..., "constants": [{"a","b","c","n"}...]}
  nlohmann::json to_json() const;
  static FusionRing from_json(const nlohmann::json& j);

  friend bool operator==(const FusionRing& x, const FusionRing& y) {
    return x.labels_ == y.labels_ && x.unit_ == y.unit_ &&
           x.constants_ == y.constants_;
  }

 private:
  std::vector<Label> labels_;
  Label unit_;
  std::map<Label, std::size_t> index_;
  std::map<std::array<std::size_t, 3>, std::int64_t> constants_;
};

/// The twelve-condition fusion criterion on an ordered triple of (r,s) pairs.
struct AdmissibleTriple {
  int p;
  int q;
  std::array<std::pair<int, int>, 3> fields;
};

/// Throws std::invalid_argument unless p, q >= 2 and gcd(p,q) = 1; condition
/// failures are a false return, not an error.
bool is_admissible(const AdmissibleTriple& triple);

/// Fusion ring of the canonical primaries of a minimal model.  N = 1 iff some
/// choice of Kac representatives for the three labels is admissible.
FusionRing minimal_model_fusion(const MinimalModel& model);

/// Number of the 2x2x2 representative choices that are admissible (exposed
/// for orbit-structure property tests).
int admissible_representative_count(const MinimalModel& model,
                                    const PrimaryField& a,
                                    const PrimaryField& b,
                                    const PrimaryField& c);

struct AxiomViolation {
  enum class Kind { Unit, Commutativity, Associativity };
  Kind kind;
  std::array<Label, 4> labels;  // a,b,c[,d]
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string describe() const;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive unit / commutativity / associativity check.
AxiomReport check_axioms(const FusionRing& ring);

/// Frobenius-Perron dimension of every label: the spectral radius of its
/// fusion matrix.  Uniquely determined by the ring.
std::map<Label, double> fp_dimensions(const FusionRing& ring);

/// max_{a,b} | d(a) d(b) - sum_c N_{ab}^c d(c) |
double dimension_hom_max_error(const FusionRing& ring,
                               const std::map<Label, double>& dims);

}  // namespace minmod
