#include "minmod/qseries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace minmod {

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Int n = gcd(abs(numerator(a)) * denominator(b),
              abs(numerator(b)) * denominator(a));
  return Rational(n, denominator(a) * denominator(b));
}

// Number of grid points offset + k*step that lie strictly below bound.
std::int64_t grid_count(const Rational& offset, const Rational& step,
                        const Rational& bound) {
  if (bound <= offset) return 0;
  Rational t = (bound - offset) / step;
  Int n = rational_ceil(t);
  if (n > 50'000'000) throw std::overflow_error("series length overflow");
  return to_int64(n);
}

// Exact integer ratio a/b for rationals with b | a; throws otherwise.
std::int64_t exact_ratio(const Rational& a, const Rational& b) {
  Rational r = a / b;
  if (denominator(r) != 1)
    throw std::logic_error("exponent off the common grid");
  return to_int64(numerator(r));
}

}  // namespace

FormalQSeries::FormalQSeries(const Rational& offset, const Rational& step,
                             std::vector<Int> coeffs, const Rational& order)
    : offset_(offset), step_(step), coeffs_(std::move(coeffs)), order_(order) {
  if (step_ <= 0) throw std::invalid_argument("series step must be positive");
  normalize();
}

void FormalQSeries::normalize() {
  // Drop slots at or beyond the truncation order.
  std::int64_t keep = grid_count(offset_, step_, order_);
  if (static_cast<std::int64_t>(coeffs_.size()) > keep)
    coeffs_.resize(static_cast<std::size_t>(keep));

  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    offset_ = order_;
    step_ = 1;
    return;
  }
  if (first > 0) {
    offset_ += Rational(first) * step_;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + first);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();

  // Coarsen the grid to the gcd of the populated strides.
  std::int64_t g = 0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) g = std::gcd(g, static_cast<std::int64_t>(k));
  if (g > 1) {
    std::vector<Int> packed;
    packed.reserve(coeffs_.size() / g + 1);
    for (std::size_t k = 0; k < coeffs_.size(); k += g)
      packed.push_back(coeffs_[k]);
    coeffs_ = std::move(packed);
    step_ *= g;
  }
}

FormalQSeries FormalQSeries::zero(const Rational& order) {
  return FormalQSeries(order, 1, {}, order);
}

FormalQSeries FormalQSeries::one(const Rational& order) {
  return monomial(0, 1, order);
}

FormalQSeries FormalQSeries::monomial(const Rational& exponent, Int coeff,
                                      const Rational& order) {
  if (coeff == 0 || exponent >= order) return zero(order);
  return FormalQSeries(exponent, 1, {std::move(coeff)}, order);
}

std::int64_t FormalQSeries::den() const {
  Int d = lcm(denominator(offset_), denominator(step_));
  return to_int64(d);  // throws std::overflow_error beyond int64
}

Rational FormalQSeries::leading_exponent() const {
  if (coeffs_.empty()) throw std::logic_error("zero series has no leading exponent");
  return offset_;
}

Int FormalQSeries::coeff(const Rational& exponent) const {
  if (exponent >= order_)
    throw std::out_of_range("exponent " + to_string(exponent) +
                            " beyond truncation order " + to_string(order_));
  if (coeffs_.empty() || exponent < offset_) return 0;
  Rational t = (exponent - offset_) / step_;
  if (denominator(t) != 1) return 0;
  Int k = numerator(t);
  if (k >= Int(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(to_int64(k))];
}

std::vector<std::pair<Rational, Int>> FormalQSeries::terms() const {
  std::vector<std::pair<Rational, Int>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      out.emplace_back(offset_ + Rational(k) * step_, coeffs_[k]);
  return out;
}

FormalQSeries truncate(const FormalQSeries& a, const Rational& order) {
  Rational o = std::min(a.order(), order);
  return FormalQSeries(a.offset(), a.step(), a.coeffs(), o);
}

FormalQSeries series_add(const FormalQSeries& a, const FormalQSeries& b) {
  Rational order = std::min(a.order(), b.order());
  if (a.is_zero()) return truncate(b, order);
  if (b.is_zero()) return truncate(a, order);

  Rational step = rational_gcd(a.step(), b.step());
  Rational diff = a.offset() - b.offset();
  if (diff != 0) step = rational_gcd(step, abs(diff));
  Rational offset = std::min(a.offset(), b.offset());

  std::int64_t slots = grid_count(offset, step, order);
  std::vector<Int> coeffs(static_cast<std::size_t>(slots), Int(0));
  for (const FormalQSeries* src : {&a, &b}) {
    std::int64_t base = exact_ratio(src->offset() - offset, step);
    std::int64_t stride = exact_ratio(src->step(), step);
    const auto& cs = src->coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::int64_t pos = base + stride * static_cast<std::int64_t>(k);
      if (pos >= slots) break;
      if (cs[k] != 0) coeffs[static_cast<std::size_t>(pos)] += cs[k];
    }
  }
  return FormalQSeries(offset, step, std::move(coeffs), order);
}

FormalQSeries series_mul(const FormalQSeries& a, const FormalQSeries& b) {
  // Exact Cauchy knowledge bound: coefficients of the product are complete
  // below min(order_a + min_b, order_b + min_a) where min_* is the lowest
  // possible exponent of the other factor.
  Rational raw = std::min(a.order() + b.offset(), b.order() + a.offset());
  if (a.is_zero() || b.is_zero()) return FormalQSeries::zero(raw);

  Rational offset = a.offset() + b.offset();
  Rational step = rational_gcd(a.step(), b.step());
  Rational order = raw;
  {
    // Snap up to the next grid exponent; nothing representable in between.
    Rational t = (raw - offset) / step;
    if (denominator(t) != 1) order = offset + Rational(rational_ceil(t)) * step;
  }

  std::int64_t slots = grid_count(offset, step, order);
  if (slots <= 0) return FormalQSeries::zero(order);
  std::vector<Int> coeffs(static_cast<std::size_t>(slots), Int(0));
  std::int64_t stride_a = exact_ratio(a.step(), step);
  std::int64_t stride_b = exact_ratio(b.step(), step);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    std::int64_t base = stride_a * static_cast<std::int64_t>(i);
    if (base >= slots) break;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      std::int64_t pos = base + stride_b * static_cast<std::int64_t>(j);
      if (pos >= slots) break;
      coeffs[static_cast<std::size_t>(pos)] += ca[i] * cb[j];
    }
  }
  return FormalQSeries(offset, step, std::move(coeffs), order);
}

std::optional<Rational> first_difference(const FormalQSeries& a,
                                         const FormalQSeries& b,
                                         const Rational& through) {
  if (a.order() <= through || b.order() <= through)
    throw std::invalid_argument(
        "series not exact through the comparison bound");
  auto ta = a.terms(), tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    Rational e;
    Int va(0), vb(0);
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      e = ta[i].first;
      va = ta[i].second;
      ++i;
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      e = tb[j].first;
      vb = tb[j].second;
      ++j;
    } else {
      e = ta[i].first;
      va = ta[i].second;
      vb = tb[j].second;
      ++i;
      ++j;
    }
    if (e > through) return std::nullopt;
    if (va != vb) return e;
  }
  return std::nullopt;
}

namespace {

// Coefficients of prod_{n=1}^{count-1} (1 - q^n) up to q^{count-1}.
std::vector<Int> euler_product(std::int64_t count) {
  std::vector<Int> e(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)),
                     Int(0));
  if (e.empty()) return e;
  e[0] = 1;
  for (std::int64_t n = 1; n < count; ++n)
    for (std::int64_t i = count - 1; i >= n; --i) e[i] -= e[i - n];
  return e;
}

}  // namespace

FormalQSeries eta_series(const Rational& order) {
  Rational offset(1, 24);
  std::int64_t slots = grid_count(offset, 1, order);
  return FormalQSeries(offset, 1, euler_product(slots), order);
}

FormalQSeries eta_inverse_series(const Rational& order) {
  Rational offset(-1, 24);
  std::int64_t slots = grid_count(offset, 1, order);
  auto e = euler_product(slots);
  std::vector<Int> inv(e.size(), Int(0));
  if (!inv.empty()) {
    inv[0] = 1;
    for (std::size_t k = 1; k < inv.size(); ++k) {
      Int acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += e[j] * inv[k - j];
      inv[k] = -acc;
    }
  }
  return FormalQSeries(offset, 1, std::move(inv), order);
}

Int sigma3(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("sigma3 needs n >= 1");
  Int total(0);
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) total += Int(d) * d * d;
  return total;
}

namespace {

// E8 Cartan matrix, Bourbaki node order (even unimodular Gram matrix).
constexpr std::array<std::array<int, 8>, 8> kE8Gram = {{
    {2, 0, -1, 0, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0},
    {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, 0, -1, 2},
}};

struct E8Enumerator {
  // G = L D L^T in doubles for pruning; exact norms come from the Gram
  // matrix incrementally.
  std::array<std::array<double, 8>, 8> l{};
  std::array<double, 8> d{};
  int max_norm;
  std::vector<Int> counts;
  std::array<std::int64_t, 8> x{};

  explicit E8Enumerator(int max_norm_)
      : max_norm(max_norm_), counts(max_norm_ + 1, Int(0)) {
    for (int i = 0; i < 8; ++i) {
      double di = kE8Gram[i][i];
      for (int k = 0; k < i; ++k) di -= l[i][k] * l[i][k] * d[k];
      d[i] = di;
      l[i][i] = 1.0;
      for (int j = i + 1; j < 8; ++j) {
        double v = kE8Gram[j][i];
        for (int k = 0; k < i; ++k) v -= l[j][k] * l[i][k] * d[k];
        l[j][i] = v / di;
      }
    }
  }

  void run() { descend(7, max_norm + 1e-6, 0); }

  void descend(int i, double budget, std::int64_t exact_so_far) {
    if (i < 0) {
      if (exact_so_far <= max_norm) ++counts[exact_so_far];
      return;
    }
    double center = 0.0;
    std::int64_t gram_dot = 0;
    for (int j = i + 1; j < 8; ++j) {
      center += l[j][i] * static_cast<double>(x[j]);
      gram_dot += static_cast<std::int64_t>(kE8Gram[i][j]) * x[j];
    }
    double half_width = std::sqrt(std::max(budget, 0.0) / d[i]) + 1e-9;
    auto lo = static_cast<std::int64_t>(std::ceil(-center - half_width));
    auto hi = static_cast<std::int64_t>(std::floor(-center + half_width));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[i] = v;
      double t = static_cast<double>(v) + center;
      std::int64_t exact =
          exact_so_far + kE8Gram[i][i] * v * v + 2 * v * gram_dot;
      if (exact > max_norm && i == 0) continue;
      descend(i - 1, budget - d[i] * t * t, exact);
    }
    x[i] = 0;
  }
};

}  // namespace

std::vector<Int> e8_norm_counts(int max_norm) {
  if (max_norm < 0) throw std::invalid_argument("negative norm bound");
  E8Enumerator e(max_norm);
  e.run();
  return e.counts;
}

FormalQSeries theta_sqrt2_e8(const Rational& order) {
  // Exponent of q is the E8 squared norm; even lattice, so step 2.
  std::int64_t slots = grid_count(0, 2, order);
  std::vector<Int> coeffs(static_cast<std::size_t>(slots), Int(0));
  for (std::int64_t k = 0; k < slots; ++k)
    coeffs[static_cast<std::size_t>(k)] = (k == 0) ? Int(1) : 240 * sigma3(k);

  int max_norm = 2 * static_cast<int>(slots) - 2;
  if (max_norm >= 0) {
    auto counts = e8_norm_counts(max_norm);
    for (std::int64_t n = 0; n <= max_norm; ++n) {
      Int expect = (n % 2 == 0) ? coeffs[static_cast<std::size_t>(n / 2)]
                                : Int(0);
      if (counts[static_cast<std::size_t>(n)] != expect)
        throw std::runtime_error(
            "theta self-check failed at norm " + std::to_string(n) + ": " +
            to_string(counts[static_cast<std::size_t>(n)]) + " vs " +
            to_string(expect));
    }
  }
  return FormalQSeries(0, 2, std::move(coeffs), order);
}

FormalQSeries minimal_character(const MinimalModel& model, int r, int s,
                                const Rational& order) {
  if (r < 1 || r > model.m() + 1 || s < 1 || s > model.m() + 2)
    throw std::invalid_argument("Kac label out of range");
  const std::int64_t p = model.p(), q = model.q();
  const std::int64_t dminus = q * r - p * s;
  const std::int64_t dplus = q * r + p * s;
  const Rational e0(dminus * dminus, 4 * p * q);

  const Rational theta_order = order + 1;
  std::int64_t slots = grid_count(e0, 1, theta_order);
  std::vector<Int> theta(static_cast<std::size_t>(std::max<std::int64_t>(slots, 0)),
                         Int(0));
  if (slots > 0) {
    auto nmax = static_cast<std::int64_t>(
        std::sqrt(static_cast<double>(slots) / (p * q))) + 2;
    for (std::int64_t n = -nmax; n <= nmax; ++n) {
      std::int64_t idx1 = p * q * n * n + n * dminus;
      std::int64_t idx2 = p * q * n * n + n * dplus +
                          static_cast<std::int64_t>(r) * s;
      if (idx1 >= 0 && idx1 < slots) theta[static_cast<std::size_t>(idx1)] += 1;
      if (idx2 >= 0 && idx2 < slots) theta[static_cast<std::size_t>(idx2)] -= 1;
    }
  }
  FormalQSeries theta_series(e0, 1, std::move(theta), theta_order);
  FormalQSeries etinv = eta_inverse_series(order + 1);
  return truncate(series_mul(theta_series, etinv), order);
}

FormalQSeries minimal_character(const PrimaryField& field,
                                const Rational& order) {
  return minimal_character(field.model(), field.r(), field.s(), order);
}

CharacterSpec CharacterSpec::minimal(const PrimaryField& field) {
  CharacterSpec spec;
  spec.kind_ = Kind::Minimal;
  spec.field_ = field;
  return spec;
}

CharacterSpec CharacterSpec::minimal(const MinimalModel& model,
                                     const Rational& h) {
  auto field = field_with_weight(model, h);
  if (!field)
    throw std::invalid_argument("no primary of weight " + to_string(h) +
                                " in model m=" + std::to_string(model.m()));
  return minimal(*field);
}

CharacterSpec CharacterSpec::eta_inverse_power(int n) {
  if (n < 0) throw std::invalid_argument("negative eta power");
  CharacterSpec spec;
  spec.kind_ = Kind::EtaInversePower;
  spec.power_ = n;
  return spec;
}

CharacterSpec CharacterSpec::theta_e8_scaled() {
  CharacterSpec spec;
  spec.kind_ = Kind::ThetaE8Scaled;
  return spec;
}

CharacterSpec CharacterSpec::tensor(std::vector<CharacterSpec> factors) {
  CharacterSpec spec;
  spec.kind_ = Kind::Tensor;
  spec.children_ = std::move(factors);
  return spec;
}

CharacterSpec CharacterSpec::sum(std::vector<CharacterSpec> summands) {
  if (summands.empty()) throw std::invalid_argument("empty direct sum");
  CharacterSpec spec;
  spec.kind_ = Kind::Sum;
  spec.children_ = std::move(summands);
  return spec;
}

const PrimaryField& CharacterSpec::field() const {
  if (!field_) throw std::logic_error("spec node has no field");
  return *field_;
}

Rational CharacterSpec::leading_offset() const {
  switch (kind_) {
    case Kind::Minimal:
      return field().weight() - field().model().central_charge() / 24;
    case Kind::EtaInversePower:
      return Rational(-power_, 24);
    case Kind::ThetaE8Scaled:
      return 0;
    case Kind::Tensor: {
      Rational total(0);
      for (const auto& c : children_) total += c.leading_offset();
      return total;
    }
    case Kind::Sum: {
      Rational best = children_.front().leading_offset();
      for (const auto& c : children_)
        best = std::min(best, c.leading_offset());
      return best;
    }
  }
  throw std::logic_error("bad spec kind");
}

Rational CharacterSpec::min_weight() const {
  switch (kind_) {
    case Kind::Minimal:
      return field().weight();
    case Kind::Tensor: {
      Rational total(0);
      for (const auto& c : children_) total += c.min_weight();
      return total;
    }
    case Kind::Sum: {
      Rational best = children_.front().min_weight();
      for (const auto& c : children_) best = std::min(best, c.min_weight());
      return best;
    }
    case Kind::EtaInversePower:
    case Kind::ThetaE8Scaled:
      throw std::logic_error("spec node does not denote a module");
  }
  throw std::logic_error("bad spec kind");
}

FormalQSeries evaluate(const CharacterSpec& spec, const Rational& order) {
  switch (spec.kind()) {
    case CharacterSpec::Kind::Minimal:
      return minimal_character(spec.field(), order);
    case CharacterSpec::Kind::EtaInversePower: {
      if (spec.power() == 0) return FormalQSeries::one(order);
      FormalQSeries base = eta_inverse_series(order + 1);
      FormalQSeries acc = base;
      for (int i = 1; i < spec.power(); ++i) acc = series_mul(acc, base);
      return truncate(acc, order);
    }
    case CharacterSpec::Kind::ThetaE8Scaled:
      return theta_sqrt2_e8(order);
    case CharacterSpec::Kind::Tensor: {
      Rational rel = order - spec.leading_offset();
      FormalQSeries acc = FormalQSeries::one(rel);
      for (const auto& child : spec.children())
        acc = series_mul(acc, evaluate(child, child.leading_offset() + rel));
      return truncate(acc, order);
    }
    case CharacterSpec::Kind::Sum: {
      FormalQSeries acc = FormalQSeries::zero(order);
      for (const auto& child : spec.children())
        acc = series_add(acc, evaluate(child, order));
      return acc;
    }
  }
  throw std::logic_error("bad spec kind");
}

std::string SeriesComparison::summary() const {
  if (pass)
    return "PASS: exact agreement through exponent " +
           to_string(compared_through);
  return "FAIL: first mismatch at exponent " + to_string(*first_mismatch) +
         " (lhs " + to_string(lhs_at_mismatch) + ", rhs " +
         to_string(rhs_at_mismatch) + ")";
}

SeriesComparison verify_e8_decomposition(
    const Rational& rel_order, const std::vector<CharacterSpec>& u_specs) {
  if (u_specs.size() != 5)
    throw std::invalid_argument("expected the five U(2k) character specs");
  if (rel_order < 1) throw std::invalid_argument("order must be >= 1");

  // Leading exponents align only if the central charges balance exactly.
  Rational commutant_c = -24 * u_specs[0].leading_offset();
  Rational balance = commutant_c;
  for (int m = 1; m <= 8; ++m) balance += MinimalModel(m).central_charge();
  if (balance != 8)
    throw std::runtime_error("central-charge balance violated: " +
                             to_string(balance));

  const Rational lead(-1, 3);
  const Rational rel = rel_order + 2;  // slack past the inclusive bound
  FormalQSeries lhs = evaluate(
      CharacterSpec::tensor({CharacterSpec::theta_e8_scaled(),
                             CharacterSpec::eta_inverse_power(8)}),
      lead + rel);

  std::map<std::array<int, 3>, FormalQSeries> char_cache;
  auto factor = [&](int m, int r, int s) -> const FormalQSeries& {
    auto key = std::array<int, 3>{m, r, s};
    auto it = char_cache.find(key);
    if (it == char_cache.end()) {
      MinimalModel model(m);
      Rational offset = conformal_weight(model, r, s) -
                        model.central_charge() / 24;
      it = char_cache.emplace(key, minimal_character(model, r, s,
                                                     offset + rel)).first;
    }
    return it->second;
  };
  std::vector<FormalQSeries> u_chars;
  u_chars.reserve(5);
  for (const auto& spec : u_specs)
    u_chars.push_back(evaluate(spec, spec.leading_offset() + rel));

  FormalQSeries rhs = FormalQSeries::zero(lead + rel);
  std::array<int, 9> k{};
  // Tuples (k_0,...,k_8), k_j even, 0 <= k_j <= j+1.
  auto advance = [&k]() {
    for (int j = 0; j <= 8; ++j) {
      k[j] += 2;
      if (k[j] <= j + 1) return true;
      k[j] = 0;
    }
    return false;
  };
  do {
    FormalQSeries prod = factor(1, k[0] + 1, k[1] + 1);
    for (int m = 2; m <= 8; ++m)
      prod = series_mul(prod, factor(m, k[m - 1] + 1, k[m] + 1));
    prod = series_mul(prod, u_chars[static_cast<std::size_t>(k[8] / 2)]);
    rhs = series_add(rhs, prod);
  } while (advance());

  SeriesComparison result;
  result.compared_through = lead + rel_order;
  auto mismatch = first_difference(lhs, rhs, result.compared_through);
  if (!mismatch) {
    result.pass = true;
  } else {
    result.pass = false;
    result.first_mismatch = *mismatch;
    result.lhs_at_mismatch = lhs.coeff(*mismatch);
    result.rhs_at_mismatch = rhs.coeff(*mismatch);
  }
  return result;
}

std::string WeightPositivityReport::summary() const {
  std::string out = pass ? "PASS:" : "FAIL:";
  for (std::size_t i = 0; i < min_weights.size(); ++i) {
    out += " ";
    out += (i == vacuum_index) ? "[vacuum] " : "";
    out += to_string(min_weights[i]);
  }
  return out;
}

WeightPositivityReport verify_weight_positivity(
    const std::vector<CharacterSpec>& specs, std::size_t vacuum_index) {
  WeightPositivityReport report;
  report.vacuum_index = vacuum_index;
  report.pass = true;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    Rational w = specs[i].min_weight();
    report.min_weights.push_back(w);
    if (i == vacuum_index ? (w != 0) : (w <= 0)) report.pass = false;
  }
  return report;
}

}  // namespace minmod
