#include "minmod/fusion_ring.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace minmod {

FusionRing::FusionRing(std::vector<Label> labels, Label unit)
    : labels_(std::move(labels)), unit_(std::move(unit)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate label: " + labels_[i]);
  }
  if (!index_.count(unit_))
    throw std::invalid_argument("unit not among labels: " + unit_);
}

std::size_t FusionRing::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw std::invalid_argument("unknown label: " + label);
  return it->second;
}

void FusionRing::set_constant(const Label& a, const Label& b, const Label& c,
                              std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative structure constant");
  std::array<std::size_t, 3> key{index_of(a), index_of(b), index_of(c)};
  if (n == 0)
    constants_.erase(key);
  else
    constants_[key] = n;
}

std::int64_t FusionRing::n(std::size_t a, std::size_t b, std::size_t c) const {
  auto it = constants_.find({a, b, c});
  return it == constants_.end() ? 0 : it->second;
}

std::int64_t FusionRing::n(const Label& a, const Label& b,
                           const Label& c) const {
  return n(index_of(a), index_of(b), index_of(c));
}

Multiset FusionRing::fuse(const Multiset& a, const Multiset& b) const {
  Multiset out;
  for (const auto& [x, mx] : a) {
    std::size_t xi = index_of(x);
    for (const auto& [y, my] : b) {
      std::size_t yi = index_of(y);
      for (std::size_t ci = 0; ci < labels_.size(); ++ci) {
        std::int64_t nc = n(xi, yi, ci);
        if (nc != 0) out[labels_[ci]] += mx * my * nc;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Multiset FusionRing::fuse(const Label& a, const Label& b) const {
  return fuse(Multiset{{a, 1}}, Multiset{{b, 1}});
}

nlohmann::json FusionRing::to_json() const {
  nlohmann::json j;
  j["labels"] = labels_;
  j["unit"] = unit_;
  auto& cs = j["constants"] = nlohmann::json::array();
  for (const auto& [key, value] : constants_) {
    cs.push_back({{"a", labels_[key[0]]},
                  {"b", labels_[key[1]]},
                  {"c", labels_[key[2]]},
                  {"n", value}});
  }
  return j;
}

FusionRing FusionRing::from_json(const nlohmann::json& j) {
  FusionRing ring(j.at("labels").get<std::vector<Label>>(),
                  j.at("unit").get<Label>());
  for (const auto& c : j.at("constants"))
    ring.set_constant(c.at("a").get<Label>(), c.at("b").get<Label>(),
                      c.at("c").get<Label>(), c.at("n").get<std::int64_t>());
  return ring;
}

bool is_admissible(const AdmissibleTriple& t) {
  if (t.p < 2 || t.q < 2 || std::gcd(t.p, t.q) != 1)
    throw std::invalid_argument("admissibility requires coprime p, q >= 2");
  const auto& [f0, f1, f2] = t.fields;
  int r = f0.first, r1 = f1.first, r2 = f2.first;
  int s = f0.second, s1 = f1.second, s2 = f2.second;
  for (int x : {r, r1, r2})
    if (x <= 0 || x >= t.p) return false;
  for (int x : {s, s1, s2})
    if (x <= 0 || x >= t.q) return false;
  if (r + r1 + r2 >= 2 * t.p) return false;
  if (s + s1 + s2 >= 2 * t.q) return false;
  if (r + r1 <= r2 || r + r2 <= r1 || r1 + r2 <= r) return false;
  if (s + s1 <= s2 || s + s2 <= s1 || s1 + s2 <= s) return false;
  if ((r + r1 + r2) % 2 == 0) return false;
  if ((s + s1 + s2) % 2 == 0) return false;
  return true;
}

namespace {

// Both Kac representatives of a canonical label.
std::array<std::pair<int, int>, 2> orbit(const MinimalModel& model,
                                         const PrimaryField& f) {
  return {{{f.r(), f.s()}, {model.p() - f.r(), model.q() - f.s()}}};
}

}  // namespace

int admissible_representative_count(const MinimalModel& model,
                                    const PrimaryField& a,
                                    const PrimaryField& b,
                                    const PrimaryField& c) {
  int count = 0;
  for (const auto& x : orbit(model, a))
    for (const auto& y : orbit(model, b))
      for (const auto& z : orbit(model, c))
        if (is_admissible({model.p(), model.q(), {x, y, z}})) ++count;
  return count;
}

FusionRing minimal_model_fusion(const MinimalModel& model) {
  auto primaries = enumerate_primaries(model);
  std::vector<Label> labels;
  labels.reserve(primaries.size());
  for (const auto& f : primaries) labels.push_back(f.label());

  FusionRing ring(labels, PrimaryField(model, 1, 1).label());
  for (const auto& a : primaries)
    for (const auto& b : primaries)
      for (const auto& c : primaries)
        if (admissible_representative_count(model, a, b, c) > 0)
          ring.set_constant(a.label(), b.label(), c.label(), 1);
  return ring;
}

std::string AxiomViolation::describe() const {
  switch (kind) {
    case Kind::Unit:
      return "unit: N_{" + labels[0] + "," + labels[1] + "}^{" + labels[2] +
             "} = " + std::to_string(lhs) + ", expected " +
             std::to_string(rhs);
    case Kind::Commutativity:
      return "commutativity: N_{" + labels[0] + "," + labels[1] + "}^{" +
             labels[2] + "} = " + std::to_string(lhs) + " but N_{" +
             labels[1] + "," + labels[0] + "}^{" + labels[2] +
             "} = " + std::to_string(rhs);
    case Kind::Associativity:
      return "associativity at (" + labels[0] + "," + labels[1] + "," +
             labels[2] + "," + labels[3] + "): " + std::to_string(lhs) +
             " != " + std::to_string(rhs);
  }
  return {};
}

AxiomReport check_axioms(const FusionRing& ring) {
  AxiomReport report;
  const std::size_t n = ring.size();
  const auto& labels = ring.labels();

  // Dense copy for the O(n^5) associativity sweep.
  std::vector<std::int64_t> t(n * n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        t[(a * n + b) * n + c] = ring.n(a, b, c);

  std::size_t unit = ring.index_of(ring.unit());
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t got = t[(unit * n + b) * n + c];
      std::int64_t want = (b == c) ? 1 : 0;
      if (got != want)
        report.violations.push_back({AxiomViolation::Kind::Unit,
                                     {ring.unit(), labels[b], labels[c], ""},
                                     got,
                                     want});
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::int64_t ab = t[(a * n + b) * n + c];
        std::int64_t ba = t[(b * n + a) * n + c];
        if (ab != ba)
          report.violations.push_back({AxiomViolation::Kind::Commutativity,
                                       {labels[a], labels[b], labels[c], ""},
                                       ab,
                                       ba});
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += t[(a * n + b) * n + e] * t[(e * n + c) * n + d];
            rhs += t[(b * n + c) * n + e] * t[(a * n + e) * n + d];
          }
          if (lhs != rhs)
            report.violations.push_back(
                {AxiomViolation::Kind::Associativity,
                 {labels[a], labels[b], labels[c], labels[d]},
                 lhs,
                 rhs});
        }

  return report;
}

std::map<Label, double> fp_dimensions(const FusionRing& ring) {
  const std::size_t n = ring.size();
  std::map<Label, double> dims;
  std::vector<double> na(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    // Power iteration on N_a + I; the shift separates the Perron eigenvalue
    // from its mirror on bipartite fusion graphs.
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        na[b * n + c] = static_cast<double>(ring.n(a, b, c)) + (b == c);
    std::vector<double> v(n, 1.0), w(n);
    for (int iter = 0; iter < 400; ++iter) {
      for (std::size_t b = 0; b < n; ++b) {
        double acc = 0.0;
        for (std::size_t c = 0; c < n; ++c) acc += na[b * n + c] * v[c];
        w[b] = acc;
      }
      double norm = 0.0;
      for (double x : w) norm += x * x;
      norm = std::sqrt(norm);
      for (std::size_t b = 0; b < n; ++b) v[b] = w[b] / norm;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      double acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += na[b * n + c] * v[c];
      num += acc * v[b];
      den += v[b] * v[b];
    }
    dims[ring.labels()[a]] = num / den - 1.0;
  }
  return dims;
}

double dimension_hom_max_error(const FusionRing& ring,
                               const std::map<Label, double>& dims) {
  double worst = 0.0;
  for (const auto& a : ring.labels())
    for (const auto& b : ring.labels()) {
      double sum = 0.0;
      for (const auto& c : ring.labels()) {
        std::int64_t nc = ring.n(a, b, c);
        if (nc != 0) sum += static_cast<double>(nc) * dims.at(c);
      }
      worst = std::max(worst, std::abs(dims.at(a) * dims.at(b) - sum));
    }
  return worst;
}

}  // namespace minmod
