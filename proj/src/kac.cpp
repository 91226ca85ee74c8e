#include "minmod/kac.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace minmod {

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("malformed integer");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  return Int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

Int rational_floor(const Rational& x) {
  Int q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Int rational_ceil(const Rational& x) { return -rational_floor(-x); }

std::int64_t to_int64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer out of int64 range");
  return static_cast<std::int64_t>(x);
}

MinimalModel::MinimalModel(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("minimal model index must be >= 1");
}

Rational MinimalModel::central_charge() const {
  return 1 - Rational(6, p() * q());
}

Rational central_charge(const MinimalModel& model) {
  return model.central_charge();
}

Rational conformal_weight(const MinimalModel& model, int r, int s) {
  if (r < 1 || r > model.m() + 1 || s < 1 || s > model.m() + 2)
    throw std::invalid_argument("Kac label out of range");
  long long d = static_cast<long long>(r) * model.q() -
                static_cast<long long>(s) * model.p();
  return Rational(d * d - 1, 4LL * model.p() * model.q());
}

PrimaryField::PrimaryField(const MinimalModel& model, int r, int s)
    : model_(model), r_(r), s_(s) {
  if (r < 1 || r > model.m() + 1 || s < 1 || s > model.m() + 2)
    throw std::invalid_argument("Kac label out of range");
  int mr = model.p() - r, ms = model.q() - s;
  if (std::make_pair(mr, ms) < std::make_pair(r_, s_)) {
    r_ = mr;
    s_ = ms;
  }
}

Rational PrimaryField::weight() const {
  return conformal_weight(model_, r_, s_);
}

std::string PrimaryField::label() const {
  return std::to_string(r_) + "." + std::to_string(s_);
}

std::string PrimaryField::qualified_label() const {
  return std::to_string(model_.m()) + ":" + label();
}

std::vector<PrimaryField> enumerate_primaries(const MinimalModel& model) {
  std::vector<PrimaryField> out;
  for (int r = 1; r <= model.m() + 1; ++r)
    for (int s = 1; s <= model.m() + 2; ++s) {
      PrimaryField f(model, r, s);
      if (f.r() == r && f.s() == s) out.push_back(f);
    }
  std::sort(out.begin(), out.end(),
            [](const PrimaryField& a, const PrimaryField& b) {
              return std::make_tuple(a.weight(), a.r(), a.s()) <
                     std::make_tuple(b.weight(), b.r(), b.s());
            });
  return out;
}

std::optional<PrimaryField> field_with_weight(const MinimalModel& model,
                                              const Rational& h) {
  for (const auto& f : enumerate_primaries(model))
    if (f.weight() == h) return f;
  return std::nullopt;
}

std::optional<MinimalModel> model_with_central_charge(const Rational& c) {
  // c_m is strictly increasing in m with 0 < c_m < 1.
  if (c <= 0 || c >= 1) return std::nullopt;
  Rational pq = Rational(6) / (1 - c);  // (m+2)(m+3)
  if (denominator(pq) != 1) return std::nullopt;
  for (Int m = 1;; ++m) {
    Int prod = (m + 2) * (m + 3);
    if (prod == numerator(pq)) return MinimalModel(static_cast<int>(m));
    if (prod > numerator(pq)) return std::nullopt;
  }
}

PrimaryField parse_field(const MinimalModel& model, std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos)
    throw std::invalid_argument("field label must be of the form r.s");
  auto parse_small = [](std::string_view t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw std::invalid_argument("malformed field label");
    return v;
  };
  return PrimaryField(model, parse_small(text.substr(0, dot)),
                      parse_small(text.substr(dot + 1)));
}

}  // namespace minmod
