#pragma once

#include "minmod/fusion_ring.hpp"
#include "minmod/kac.hpp"

#include <vector>

namespace minmod {

/// S-matrix and quantum dimensions of a minimal model, indexed by the
/// canonical primaries in enumerate_primaries order.  Immutable.
class ModularData {
 public:
  ModularData(MinimalModel model, std::vector<PrimaryField> primaries,
              std::vector<double> s);

  const MinimalModel& model() const { return model_; }
  const std::vector<PrimaryField>& primaries() const { return primaries_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return primaries_.size(); }

  double s(std::size_t i, std::size_t j) const {
    return s_[i * primaries_.size() + j];
  }
  std::size_t vacuum_index() const { return vacuum_; }

  double qdim(std::size_t i) const { return qdim_[i]; }
  double qdim(const Label& label) const;

  std::size_t index_of(const Label& label) const;

 private:
  MinimalModel model_;
  std::vector<PrimaryField> primaries_;
  std::vector<Label> labels_;
  std::vector<double> s_;  // row-major, symmetric
  std::vector<double> qdim_;
  std::size_t vacuum_;
};

/// Builds the S-matrix
///   S_{(r,s),(rho,sigma)} = 2 sqrt(2/pq) (-1)^{1+s rho+r sigma}
///                           sin(pi q r rho / p) sin(pi p s sigma / q)
/// over canonical labels (the formula is Kac-symmetric in each index) and
/// verifies orthogonality, vacuum-row positivity and qdim >= 1 before
/// returning.  Throws std::runtime_error with a diagnostic on violation.
ModularData s_matrix(const MinimalModel& model);

/// Verlinde oracle: N_{ab}^c = round(sum_x S_ax S_bx S_cx / S_vac,x).
/// Throws std::runtime_error when a pre-rounding value deviates from an
/// integer by more than 1e-6.
FusionRing verlinde_fusion(const ModularData& data);

/// sum over the subset of qdim^2.  Throws on unknown labels.
double total_dim_squared(const ModularData& data,
                         const std::vector<Label>& subset);

}  // namespace minmod
