#pragma once

#include "minmod/fusion_ring.hpp"
#include "minmod/modular.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace minmod {

/// Branching decomposition M^i = sum_{alpha in J_i} W^alpha (x) M^(i,alpha):
/// big-algebra labels I (vacuum first), subalgebra labels J (vacuum first),
/// and per-row pairs (alpha, commutant label).
class BranchingTable {
 public:
  BranchingTable(std::vector<Label> big_labels, std::vector<Label> sub_labels,
                 std::map<Label, std::vector<std::pair<Label, Label>>> rows);

  const std::vector<Label>& big_labels() const { return big_labels_; }
  const std::vector<Label>& sub_labels() const { return sub_labels_; }
  const Label& big_vacuum() const { return big_labels_.front(); }
  const Label& sub_vacuum() const { return sub_labels_.front(); }

  const std::vector<std::pair<Label, Label>>& row(const Label& i) const;

  /// J_i: the subalgebra labels appearing in row i.
  std::vector<Label> row_sub_labels(const Label& i) const;

  /// Commutant label at (i, alpha); throws when the pair is absent.
  const Label& commutant_label(const Label& i, const Label& alpha) const;

  /// All commutant labels in row-major order (may contain duplicates when
  /// the table is inconsistent; validate() reports that).
  std::vector<Label> commutant_labels() const;

  /// {"I": [...], "J": [...], "rows": {"i": [["alpha","label"], ...]}}
  /// Vacua are the first entries of I and J.  Structurally strict: every
  /// i needs a non-empty row, row entries must name labels from J.
  static BranchingTable from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  std::vector<Label> big_labels_;
  std::vector<Label> sub_labels_;
  std::map<Label, std::vector<std::pair<Label, Label>>> rows_;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::string summary() const;
};

/// Hypothesis and consistency checks for the factorization theorem:
/// (a) J_1 = J, (b) J_i = J for all i, (c) the dimension relation
/// sum_{J_1} d^2 <= sum_{J_i} d^2 (and its equality form), (d) global
/// distinctness of commutant labels, (e) the |I| x |J| count.
ValidationReport validate(const BranchingTable& table,
                          const FusionRing& big_ring,
                          const ModularData& sub_data);

/// Commutant fusion ring with constants
///   N_{(i,a),(j,b)}^{(k,c)} = N_big(i,j,k) * N_sub(a,b,c).
/// Requires J_i = J for every row and distinct commutant labels; throws
/// std::invalid_argument otherwise (the factorization hypothesis fails).
FusionRing derive_commutant_ring(const BranchingTable& table,
                                 const FusionRing& big_ring,
                                 const FusionRing& sub_ring);

/// Checks (i,vac) x (1,alpha) = (i,alpha), multiplicity 1, no other
/// summands, for all i in I and alpha in J.
ValidationReport check_product_structure(const BranchingTable& table,
                                         const FusionRing& derived);

}  // namespace minmod
