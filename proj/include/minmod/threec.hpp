#pragma once

#include "minmod/commutant.hpp"
#include "minmod/fusion_ring.hpp"
#include "minmod/qseries.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minmod {

/// Resolution order: explicit argument > MINMOD_DATA_DIR env var > the
/// compiled-in location of the checked-in dataset.
std::string default_data_dir();

/// Fusion ring of the five modules U(0)..U(8): N = 1 iff
/// ((2i+1,1),(2j+1,1),(2k+1,1)) is admissible for (p,q) = (11,12).
FusionRing build_u_ring();

/// The admissible k-set for U(2i) x U(2j) under the same criterion.
std::vector<int> u_fusion_k_set(int i, int j);

/// Bundled dataset of the running example: the branching of the five
/// U(2k) over Ising x M with M = L(21/22,0) + L(21/22,8), the constituent
/// weights of each M_{k,l}, and the shipped lowest-weight sidecar.
///
/// Files (under the data directory):
///   threec.json         branching table, {"I", "J", "rows"} schema
///   threec_decomp.json  {"M_{k,l}": ["h1", "h2"]} constituent weights
///   threec_weights.json {"label": "num/den"} lowest weights, U and M labels
class ThreeCDataset {
 public:
  static ThreeCDataset load(const std::string& data_dir = default_data_dir());

  const BranchingTable& branching() const { return branching_; }
  const FusionRing& u_ring() const { return u_ring_; }
  const FusionRing& ising_ring() const { return ising_ring_; }

  /// The two L(21/22, .) constituent weights of a commutant label.
  const std::map<Label, std::pair<Rational, Rational>>& constituents() const {
    return constituents_;
  }

  /// Conformal weight of the Ising factor named by a J label.
  Rational sub_weight(const Label& alpha) const;

  /// Character spec of U(2k): sum over alpha of
  /// L(1/2, h_alpha) (x) (L(21/22, h1) + L(21/22, h2)).
  CharacterSpec decomp_spec(int k) const;
  std::vector<CharacterSpec> decomp_specs() const;

  /// Minimal conformal weight of every U(2k) and every M_{k,l}.
  std::map<Label, Rational> lowest_weights() const;

  const std::map<Label, Rational>& shipped_lowest_weights() const {
    return shipped_lowest_;
  }

 private:
  ThreeCDataset(BranchingTable branching,
                std::map<Label, std::pair<Rational, Rational>> constituents,
                std::map<Label, Rational> shipped);

  BranchingTable branching_;
  FusionRing u_ring_;
  FusionRing ising_ring_;
  std::map<Label, std::pair<Rational, Rational>> constituents_;
  std::map<Label, Rational> shipped_lowest_;
};

/// derive_commutant_ring on the bundled table with the U and Ising rings.
FusionRing build_m_ring(const ThreeCDataset& dataset);

/// Eq-by-eq reproduction of the commutant fusion table: hypothesis checks,
/// ring axioms on all three rings, the product structure, the four fusion
/// rule families of the 15 M_{k,l}, the restriction isomorphisms, and the
/// quantum-dimension homomorphism.
ValidationReport verify_factorization(const ThreeCDataset& dataset);

/// Character certification of the sqrt(2)E8 decomposition using the bundled
/// U(2k) specs; rel_order counts exponents above the leading -1/3.
SeriesComparison verify_e8(const ThreeCDataset& dataset,
                           const Rational& rel_order);

}  // namespace minmod
