#include "minmod/commutant.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace minmod {

BranchingTable::BranchingTable(
    std::vector<Label> big_labels, std::vector<Label> sub_labels,
    std::map<Label, std::vector<std::pair<Label, Label>>> rows)
    : big_labels_(std::move(big_labels)),
      sub_labels_(std::move(sub_labels)),
      rows_(std::move(rows)) {
  if (big_labels_.empty() || sub_labels_.empty())
    throw std::invalid_argument("empty label set");
  std::set<Label> sub_set(sub_labels_.begin(), sub_labels_.end());
  if (sub_set.size() != sub_labels_.size())
    throw std::invalid_argument("duplicate subalgebra label");
  if (std::set<Label>(big_labels_.begin(), big_labels_.end()).size() !=
      big_labels_.size())
    throw std::invalid_argument("duplicate big-algebra label");
  for (const auto& i : big_labels_) {
    auto it = rows_.find(i);
    if (it == rows_.end() || it->second.empty())
      throw std::invalid_argument("missing or empty row for " + i);
    std::set<Label> seen;
    for (const auto& [alpha, label] : it->second) {
      if (!sub_set.count(alpha))
        throw std::invalid_argument("row " + i + " names unknown label " +
                                    alpha);
      if (!seen.insert(alpha).second)
        throw std::invalid_argument("row " + i + " repeats label " + alpha);
      (void)label;
    }
  }
  if (rows_.size() != big_labels_.size())
    throw std::invalid_argument("row for unknown big-algebra label");
}

const std::vector<std::pair<Label, Label>>& BranchingTable::row(
    const Label& i) const {
  auto it = rows_.find(i);
  if (it == rows_.end()) throw std::invalid_argument("unknown row: " + i);
  return it->second;
}

std::vector<Label> BranchingTable::row_sub_labels(const Label& i) const {
  std::vector<Label> out;
  for (const auto& [alpha, label] : row(i)) out.push_back(alpha);
  return out;
}

const Label& BranchingTable::commutant_label(const Label& i,
                                             const Label& alpha) const {
  for (const auto& [a, label] : row(i))
    if (a == alpha) return label;
  throw std::invalid_argument("no branch (" + i + ", " + alpha + ")");
}

std::vector<Label> BranchingTable::commutant_labels() const {
  std::vector<Label> out;
  for (const auto& i : big_labels_)
    for (const auto& [alpha, label] : row(i)) out.push_back(label);
  return out;
}

BranchingTable BranchingTable::from_json(const nlohmann::json& j) {
  std::map<Label, std::vector<std::pair<Label, Label>>> rows;
  for (const auto& [key, value] : j.at("rows").items()) {
    std::vector<std::pair<Label, Label>> row;
    for (const auto& entry : value) {
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("row entries must be [alpha, label]");
      row.emplace_back(entry[0].get<Label>(), entry[1].get<Label>());
    }
    rows.emplace(key, std::move(row));
  }
  return BranchingTable(j.at("I").get<std::vector<Label>>(),
                        j.at("J").get<std::vector<Label>>(), std::move(rows));
}

nlohmann::json BranchingTable::to_json() const {
  nlohmann::json j;
  j["I"] = big_labels_;
  j["J"] = sub_labels_;
  auto& rows = j["rows"] = nlohmann::json::object();
  for (const auto& i : big_labels_) {
    auto& out = rows[i] = nlohmann::json::array();
    for (const auto& [alpha, label] : row(i))
      out.push_back(nlohmann::json::array({alpha, label}));
  }
  return j;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "pass  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

namespace {

bool same_label_set(std::vector<Label> a, std::vector<Label> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

ValidationReport validate(const BranchingTable& table,
                          const FusionRing& big_ring,
                          const ModularData& sub_data) {
  ValidationReport report;
  if (!same_label_set(big_ring.labels(), table.big_labels()))
    throw std::invalid_argument("big ring labels do not match I");
  if (!same_label_set(sub_data.labels(), table.sub_labels()))
    throw std::invalid_argument("modular data labels do not match J");

  // (a) J_1 = J
  bool j1_full = same_label_set(table.row_sub_labels(table.big_vacuum()),
                                table.sub_labels());
  report.checks.push_back({"J_1 = J", j1_full, ""});

  // (b) J_i = J for every i
  {
    std::string bad;
    for (const auto& i : table.big_labels())
      if (!same_label_set(table.row_sub_labels(i), table.sub_labels())) {
        bad += (bad.empty() ? "" : ", ") + i;
      }
    report.checks.push_back({"J_i = J for all i", bad.empty(),
                             bad.empty() ? "" : "rows: " + bad});
  }

  // (c) dimension relation: sum_{J_1} d^2 <= sum_{J_i} d^2, equality when
  // the rows are full.
  {
    double base = total_dim_squared(
        sub_data, table.row_sub_labels(table.big_vacuum()));
    bool leq = true, eq = true;
    std::string detail;
    for (const auto& i : table.big_labels()) {
      double row = total_dim_squared(sub_data, table.row_sub_labels(i));
      if (row < base - 1e-8) {
        leq = false;
        detail += (detail.empty() ? "" : "; ") + i + ": " +
                  std::to_string(row) + " < " + std::to_string(base);
      }
      if (std::abs(row - base) > 1e-8) eq = false;
    }
    report.checks.push_back({"dimension inequality sum d^2", leq, detail});
    report.checks.push_back(
        {"dimension equality (J_i = J case)", eq,
         eq ? "" : "some row differs from the vacuum row"});
  }

  // (d) commutant labels pairwise distinct
  {
    auto labels = table.commutant_labels();
    std::set<Label> seen;
    std::string dup;
    for (const auto& l : labels)
      if (!seen.insert(l).second) dup += (dup.empty() ? "" : ", ") + l;
    report.checks.push_back(
        {"commutant labels distinct", dup.empty(),
         dup.empty() ? "" : "duplicates: " + dup});
  }

  // (e) completeness count |I| * |J|
  {
    std::size_t got = table.commutant_labels().size();
    std::size_t want = table.big_labels().size() * table.sub_labels().size();
    report.checks.push_back(
        {"count = |I| * |J|", got == want,
         std::to_string(got) + " vs " + std::to_string(want)});
  }
  return report;
}

FusionRing derive_commutant_ring(const BranchingTable& table,
                                 const FusionRing& big_ring,
                                 const FusionRing& sub_ring) {
  if (!same_label_set(big_ring.labels(), table.big_labels()))
    throw std::invalid_argument("big ring labels do not match I");
  if (!same_label_set(sub_ring.labels(), table.sub_labels()))
    throw std::invalid_argument("sub ring labels do not match J");
  for (const auto& i : table.big_labels())
    if (!same_label_set(table.row_sub_labels(i), table.sub_labels()))
      throw std::invalid_argument(
          "factorization hypothesis J_i = J fails at row " + i);
  {
    auto labels = table.commutant_labels();
    if (std::set<Label>(labels.begin(), labels.end()).size() != labels.size())
      throw std::invalid_argument("commutant labels not distinct");
  }

  std::vector<Label> labels;
  for (const auto& i : table.big_labels())
    for (const auto& alpha : table.sub_labels())
      labels.push_back(table.commutant_label(i, alpha));

  FusionRing ring(labels,
                  table.commutant_label(table.big_vacuum(),
                                        table.sub_vacuum()));
  for (const auto& i : table.big_labels())
    for (const auto& j : table.big_labels())
      for (const auto& k : table.big_labels()) {
        std::int64_t nbig = big_ring.n(i, j, k);
        if (nbig == 0) continue;
        for (const auto& a : table.sub_labels())
          for (const auto& b : table.sub_labels())
            for (const auto& c : table.sub_labels()) {
              std::int64_t nsub = sub_ring.n(a, b, c);
              if (nsub == 0) continue;
              ring.set_constant(table.commutant_label(i, a),
                                table.commutant_label(j, b),
                                table.commutant_label(k, c), nbig * nsub);
            }
      }
  return ring;
}

ValidationReport check_product_structure(const BranchingTable& table,
                                         const FusionRing& derived) {
  ValidationReport report;
  const Label& vac_i = table.big_vacuum();
  const Label& vac_a = table.sub_vacuum();
  for (const auto& i : table.big_labels())
    for (const auto& alpha : table.sub_labels()) {
      Multiset product = derived.fuse(table.commutant_label(i, vac_a),
                                      table.commutant_label(vac_i, alpha));
      Multiset expected{{table.commutant_label(i, alpha), 1}};
      bool okay = (product == expected);
      std::string name =
          "(" + i + ",vac) x (vac," + alpha + ") = (" + i + "," + alpha + ")";
      std::string detail;
      if (!okay) {
        detail = "got {";
        for (const auto& [l, n] : product)
          detail += " " + l + ":" + std::to_string(n);
        detail += " }";
      }
      report.checks.push_back({name, okay, detail});
    }
  return report;
}

}  // namespace minmod
