#include "minmod/threec.hpp"

#include "minmod/kac.hpp"
#include "minmod/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace minmod {

namespace {

constexpr int kP = 11;
constexpr int kQ = 12;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

Label u_label(int k2) { return "U(" + std::to_string(k2) + ")"; }

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("MINMOD_DATA_DIR")) return env;
  return MINMOD_DEFAULT_DATA_DIR;
}

std::vector<int> u_fusion_k_set(int i, int j) {
  std::vector<int> out;
  for (int k = 0; k < 5; ++k) {
    // (2i-1,1) as printed underflows the 0 < r bound at i = 0 and breaks
    // the unit axiom; 2i+1 is the reading consistent with both.
    AdmissibleTriple t{kP, kQ,
                       {{{2 * i + 1, 1}, {2 * j + 1, 1}, {2 * k + 1, 1}}}};
    if (is_admissible(t)) out.push_back(k);
  }
  return out;
}

FusionRing build_u_ring() {
  std::vector<Label> labels;
  for (int k = 0; k < 5; ++k) labels.push_back(u_label(2 * k));
  FusionRing ring(labels, u_label(0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k : u_fusion_k_set(i, j))
        ring.set_constant(u_label(2 * i), u_label(2 * j), u_label(2 * k), 1);
  return ring;
}

ThreeCDataset::ThreeCDataset(
    BranchingTable branching,
    std::map<Label, std::pair<Rational, Rational>> constituents,
    std::map<Label, Rational> shipped)
    : branching_(std::move(branching)),
      u_ring_(build_u_ring()),
      ising_ring_(minimal_model_fusion(MinimalModel(1))),
      constituents_(std::move(constituents)),
      shipped_lowest_(std::move(shipped)) {
  if (branching_.big_labels() != u_ring_.labels())
    throw std::runtime_error("dataset I labels do not match the U ring");
  {
    auto j = branching_.sub_labels();
    auto k = ising_ring_.labels();
    std::sort(j.begin(), j.end());
    std::sort(k.begin(), k.end());
    if (j != k)
      throw std::runtime_error("dataset J labels do not match the Ising ring");
  }
  if (branching_.sub_vacuum() != ising_ring_.unit())
    throw std::runtime_error("dataset J vacuum is not the Ising vacuum");
  for (const auto& label : branching_.commutant_labels())
    if (!constituents_.count(label))
      throw std::runtime_error("missing constituents for " + label);
  if (constituents_.size() != branching_.commutant_labels().size())
    throw std::runtime_error("constituent table has extra labels");

  auto computed = lowest_weights();
  if (computed.size() != shipped_lowest_.size())
    throw std::runtime_error("weights sidecar has wrong label set");
  for (const auto& [label, w] : computed) {
    auto it = shipped_lowest_.find(label);
    if (it == shipped_lowest_.end() || it->second != w)
      throw std::runtime_error("weights sidecar disagrees at " + label);
  }
}

ThreeCDataset ThreeCDataset::load(const std::string& data_dir) {
  auto table = BranchingTable::from_json(load_json(data_dir + "/threec.json"));

  std::map<Label, std::pair<Rational, Rational>> constituents;
  nlohmann::json decomp = load_json(data_dir + "/threec_decomp.json");
  for (const auto& [label, pair] : decomp.items()) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::runtime_error("constituents of " + label +
                               " must be a pair of rationals");
    constituents.emplace(label,
                         std::make_pair(parse_rational(pair[0].get<std::string>()),
                                        parse_rational(pair[1].get<std::string>())));
  }

  std::map<Label, Rational> shipped;
  nlohmann::json weights = load_json(data_dir + "/threec_weights.json");
  for (const auto& [label, w] : weights.items())
    shipped.emplace(label, parse_rational(w.get<std::string>()));

  return ThreeCDataset(std::move(table), std::move(constituents),
                       std::move(shipped));
}

Rational ThreeCDataset::sub_weight(const Label& alpha) const {
  return parse_field(MinimalModel(1), alpha).weight();
}

CharacterSpec ThreeCDataset::decomp_spec(int k) const {
  if (k < 0 || k > 4) throw std::invalid_argument("U(2k) needs 0 <= k <= 4");
  const MinimalModel ising(1);
  const MinimalModel m9(9);
  const Label big = u_label(2 * k);
  std::vector<CharacterSpec> summands;
  for (const auto& [alpha, label] : branching_.row(big)) {
    const auto& [h1, h2] = constituents_.at(label);
    summands.push_back(CharacterSpec::tensor(
        {CharacterSpec::minimal(ising, sub_weight(alpha)),
         CharacterSpec::sum({CharacterSpec::minimal(m9, h1),
                             CharacterSpec::minimal(m9, h2)})}));
  }
  return CharacterSpec::sum(std::move(summands));
}

std::vector<CharacterSpec> ThreeCDataset::decomp_specs() const {
  std::vector<CharacterSpec> out;
  for (int k = 0; k < 5; ++k) out.push_back(decomp_spec(k));
  return out;
}

std::map<Label, Rational> ThreeCDataset::lowest_weights() const {
  std::map<Label, Rational> out;
  for (const auto& [label, pair] : constituents_)
    out.emplace(label, std::min(pair.first, pair.second));
  for (int k = 0; k < 5; ++k)
    out.emplace(u_label(2 * k), decomp_spec(k).min_weight());
  return out;
}

FusionRing build_m_ring(const ThreeCDataset& dataset) {
  return derive_commutant_ring(dataset.branching(), dataset.u_ring(),
                               dataset.ising_ring());
}

namespace {

// J label of the Ising factor indexed as in M_{k,l}: l = 0, 1, 2 names the
// weight-0, weight-1/2, weight-1/16 factor.
Label alpha_for_l(const ThreeCDataset& ds, int l) {
  Rational want = (l == 0) ? Rational(0)
                 : (l == 1) ? Rational(1, 2)
                            : Rational(1, 16);
  for (const auto& alpha : ds.branching().sub_labels())
    if (ds.sub_weight(alpha) == want) return alpha;
  throw std::logic_error("no Ising label of weight " + to_string(want));
}

std::string multiset_to_string(const Multiset& m) {
  std::string out = "{";
  for (const auto& [label, n] : m)
    out += " " + label + (n == 1 ? "" : ":" + std::to_string(n));
  return out + " }";
}

}  // namespace

ValidationReport verify_factorization(const ThreeCDataset& dataset) {
  ValidationReport report;
  const auto& table = dataset.branching();

  ModularData ising_data = s_matrix(MinimalModel(1));
  for (auto& check : validate(table, dataset.u_ring(), ising_data).checks)
    report.checks.push_back(std::move(check));

  report.checks.push_back({"U ring axioms",
                           check_axioms(dataset.u_ring()).ok(), ""});
  report.checks.push_back({"Ising ring axioms",
                           check_axioms(dataset.ising_ring()).ok(), ""});

  FusionRing derived = build_m_ring(dataset);
  report.checks.push_back({"derived ring axioms",
                           check_axioms(derived).ok(), ""});
  report.checks.push_back({"derived ring has 15 labels",
                           derived.size() == 15,
                           std::to_string(derived.size())});
  report.checks.push_back({"product structure (i,vac) x (vac,alpha)",
                           check_product_structure(table, derived).ok(), ""});

  // The four fusion-rule families, over every i, j and every l pairing.
  {
    auto commutant = [&](int i, int l) {
      return table.commutant_label(u_label(2 * i), alpha_for_l(dataset, l));
    };
    // (l, l') -> list of result-l values per admissible k
    const std::vector<std::tuple<int, int, std::vector<int>>> families = {
        {0, 0, {0}}, {0, 1, {1}}, {0, 2, {2}},
        {1, 1, {0}}, {1, 2, {2}}, {2, 2, {0, 1}},
    };
    bool all_ok = true;
    std::string detail;
    for (int i = 0; i < 5 && all_ok; ++i)
      for (int j = 0; j < 5 && all_ok; ++j) {
        auto ks = u_fusion_k_set(i, j);
        for (const auto& [l1, l2, out_ls] : families) {
          Multiset expected;
          for (int k : ks)
            for (int lo : out_ls) expected[commutant(k, lo)] += 1;
          Multiset got = derived.fuse(commutant(i, l1), commutant(j, l2));
          if (got != expected) {
            all_ok = false;
            detail = "M_{" + std::to_string(i) + "," + std::to_string(l1) +
                     "} x M_{" + std::to_string(j) + "," + std::to_string(l2) +
                     "}: got " + multiset_to_string(got) + ", expected " +
                     multiset_to_string(expected);
            break;
          }
        }
      }
    report.checks.push_back({"corollary fusion rule families", all_ok, detail});
  }

  // Restrictions along the two embeddings reproduce the input rings.
  {
    bool ok = true;
    for (const auto& a : table.sub_labels())
      for (const auto& b : table.sub_labels())
        for (const auto& c : table.sub_labels())
          if (derived.n(table.commutant_label(table.big_vacuum(), a),
                        table.commutant_label(table.big_vacuum(), b),
                        table.commutant_label(table.big_vacuum(), c)) !=
              dataset.ising_ring().n(a, b, c))
            ok = false;
    report.checks.push_back({"restriction to (vac,alpha) is the Ising ring",
                             ok, ""});
    ok = true;
    for (const auto& a : table.big_labels())
      for (const auto& b : table.big_labels())
        for (const auto& c : table.big_labels())
          if (derived.n(table.commutant_label(a, table.sub_vacuum()),
                        table.commutant_label(b, table.sub_vacuum()),
                        table.commutant_label(c, table.sub_vacuum())) !=
              dataset.u_ring().n(a, b, c))
            ok = false;
    report.checks.push_back({"restriction to (i,vac) is the U ring", ok, ""});
  }

  // d(i,alpha) = d(i) d(alpha) is a homomorphism of the derived ring.
  {
    auto u_dims = fp_dimensions(dataset.u_ring());
    std::map<Label, double> dims;
    for (const auto& i : table.big_labels())
      for (const auto& alpha : table.sub_labels())
        dims[table.commutant_label(i, alpha)] =
            u_dims.at(i) * ising_data.qdim(alpha);
    double err = dimension_hom_max_error(derived, dims);
    report.checks.push_back({"quantum-dimension homomorphism (1e-8)",
                             err <= 1e-8, "max error " + std::to_string(err)});
  }

  return report;
}

SeriesComparison verify_e8(const ThreeCDataset& dataset,
                           const Rational& rel_order) {
  return verify_e8_decomposition(rel_order, dataset.decomp_specs());
}

}  // namespace minmod
