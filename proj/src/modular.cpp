#include "minmod/modular.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minmod {

namespace {
constexpr double kStructuralTol = 1e-9;
constexpr double kIntegralityTol = 1e-6;
}  // namespace

ModularData::ModularData(MinimalModel model,
                         std::vector<PrimaryField> primaries,
                         std::vector<double> entries)
    : model_(model),
      primaries_(std::move(primaries)),
      s_(std::move(entries)),
      vacuum_(0) {
  const std::size_t n = primaries_.size();
  if (s_.size() != n * n)
    throw std::invalid_argument("S-matrix size mismatch");
  labels_.reserve(n);
  bool vacuum_found = false;
  for (std::size_t i = 0; i < n; ++i) {
    labels_.push_back(primaries_[i].label());
    if (primaries_[i].is_vacuum()) {
      vacuum_ = i;
      vacuum_found = true;
    }
  }
  if (!vacuum_found) throw std::invalid_argument("vacuum label missing");
  qdim_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    qdim_[i] = s(vacuum_, i) / s(vacuum_, vacuum_);
}

std::size_t ModularData::index_of(const Label& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown label: " + label);
}

double ModularData::qdim(const Label& label) const {
  return qdim_[index_of(label)];
}

ModularData s_matrix(const MinimalModel& model) {
  const int p = model.p(), q = model.q();
  auto primaries = enumerate_primaries(model);
  const std::size_t n = primaries.size();

  std::vector<double> s(n * n);
  const double norm = 2.0 * std::sqrt(2.0 / (p * q));
  for (std::size_t i = 0; i < n; ++i) {
    const int r = primaries[i].r(), ss = primaries[i].s();
    for (std::size_t j = 0; j < n; ++j) {
      const int rho = primaries[j].r(), sigma = primaries[j].s();
      const int sign = ((1 + ss * rho + r * sigma) % 2 == 0) ? 1 : -1;
      s[i * n + j] = norm * sign *
                     std::sin(std::numbers::pi * q * r * rho / p) *
                     std::sin(std::numbers::pi * p * ss * sigma / q);
    }
  }

  ModularData data(model, std::move(primaries), std::move(s));

  // Pins the sign convention: orthogonality + positive vacuum row + qdim >= 1.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += data.s(i, k) * data.s(j, k);
      double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - want) > kStructuralTol)
        throw std::runtime_error(
            "S-matrix orthogonality violated at (" + data.labels()[i] + "," +
            data.labels()[j] + "): " + std::to_string(dot));
    }
  for (std::size_t j = 0; j < n; ++j) {
    if (data.s(data.vacuum_index(), j) <= 0.0)
      throw std::runtime_error("vacuum row of S not strictly positive at " +
                               data.labels()[j]);
    if (data.qdim(j) < 1.0 - kStructuralTol)
      throw std::runtime_error("quantum dimension below 1 at " +
                               data.labels()[j]);
  }
  return data;
}

FusionRing verlinde_fusion(const ModularData& data) {
  const std::size_t n = data.size();
  const std::size_t vac = data.vacuum_index();
  FusionRing ring(data.labels(), data.labels()[vac]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        double acc = 0.0;
        for (std::size_t x = 0; x < n; ++x)
          acc += data.s(a, x) * data.s(b, x) * data.s(c, x) / data.s(vac, x);
        double rounded = std::round(acc);
        if (std::abs(acc - rounded) > kIntegralityTol)
          throw std::runtime_error(
              "Verlinde value not integral at (" + data.labels()[a] + "," +
              data.labels()[b] + "," + data.labels()[c] +
              "): " + std::to_string(acc));
        if (rounded != 0.0)
          ring.set_constant(data.labels()[a], data.labels()[b],
                            data.labels()[c],
                            static_cast<std::int64_t>(rounded));
      }
  return ring;
}

double total_dim_squared(const ModularData& data,
                         const std::vector<Label>& subset) {
  double total = 0.0;
  for (const auto& label : subset) {
    double d = data.qdim(label);
    total += d * d;
  }
  return total;
}

}  // namespace minmod
