#include "minmod/kac.hpp"

#include <doctest.h>

#include <set>

using namespace minmod;

TEST_SUITE_BEGIN("kac");

TEST_CASE("central charges") {
  CHECK(central_charge(MinimalModel(1)) == Rational(1, 2));
  CHECK(central_charge(MinimalModel(9)) == Rational(21, 22));
  CHECK(central_charge(MinimalModel(2)) == Rational(7, 10));
  CHECK_THROWS_AS(MinimalModel(0), std::invalid_argument);
}

TEST_CASE("conformal weights") {
  CHECK(conformal_weight(MinimalModel(9), 1, 7) == 8);
  for (int m : {1, 2, 5, 9, 20})
    CHECK(conformal_weight(MinimalModel(m), 1, 1) == 0);
  CHECK(conformal_weight(MinimalModel(1), 2, 2) == Rational(1, 16));
  CHECK(PrimaryField(MinimalModel(1), 2, 2).weight() == Rational(1, 16));
  CHECK_THROWS_AS(conformal_weight(MinimalModel(1), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(conformal_weight(MinimalModel(1), 1, 0),
                  std::invalid_argument);
}

TEST_CASE("canonicalization") {
  MinimalModel ising(1);
  PrimaryField f(ising, 2, 3);  // Kac mirror of the vacuum
  CHECK(f.r() == 1);
  CHECK(f.s() == 1);
  CHECK(f.is_vacuum());
  // idempotent
  PrimaryField g(ising, f.r(), f.s());
  CHECK(g == f);
  CHECK(PrimaryField(MinimalModel(9), 10, 5) ==
        PrimaryField(MinimalModel(9), 1, 7));
}

TEST_CASE("enumeration") {
  auto p1 = enumerate_primaries(MinimalModel(1));
  REQUIRE(p1.size() == 3);
  CHECK(p1[0].weight() == 0);
  CHECK(p1[1].weight() == Rational(1, 16));
  CHECK(p1[2].weight() == Rational(1, 2));

  CHECK(enumerate_primaries(MinimalModel(9)).size() == 55);

  auto p2 = enumerate_primaries(MinimalModel(2));
  REQUIRE(p2.size() == 6);
  std::vector<Rational> expect = {Rational(0),       Rational(3, 80),
                                  Rational(1, 10),   Rational(7, 16),
                                  Rational(3, 5),    Rational(3, 2)};
  for (std::size_t i = 0; i < 6; ++i) CHECK(p2[i].weight() == expect[i]);
  CHECK(p2[1].label() == "2.2");
}

TEST_CASE("kac symmetry and table structure up to m=30") {
  for (int m = 1; m <= 30; ++m) {
    MinimalModel model(m);
    int p = model.p(), q = model.q();
    for (int r = 1; r <= m + 1; ++r)
      for (int s = 1; s <= m + 2; ++s)
        CHECK(conformal_weight(model, r, s) ==
              conformal_weight(model, p - r, q - s));

    auto primaries = enumerate_primaries(model);
    CHECK(static_cast<int>(primaries.size()) == (p - 1) * (q - 1) / 2);
    std::set<std::pair<int, int>> seen;
    int vacua = 0;
    for (const auto& f : primaries) {
      CHECK(seen.insert({f.r(), f.s()}).second);
      CHECK(f.weight() >= 0);
      if (f.weight() == 0) ++vacua;
      if (!f.is_vacuum()) CHECK(f.weight() > 0);
    }
    CHECK(vacua == 1);
    for (std::size_t i = 1; i < primaries.size(); ++i)
      CHECK(primaries[i - 1].weight() <= primaries[i].weight());
  }
}

TEST_CASE("serialization and parsing") {
  PrimaryField f(MinimalModel(9), 1, 7);
  CHECK(f.label() == "1.7");
  CHECK(f.qualified_label() == "9:1.7");
  CHECK(parse_field(MinimalModel(9), "1.7") == f);
  CHECK(parse_field(MinimalModel(9), "10.5") == f);
  CHECK_THROWS_AS(parse_field(MinimalModel(9), "17"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field(MinimalModel(9), "1.x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field(MinimalModel(9), "99.1"), std::invalid_argument);

  CHECK(to_string(Rational(21, 22)) == "21/22");
  CHECK(to_string(Rational(8)) == "8");
  CHECK(to_string(Rational(-7, 176)) == "-7/176");
  CHECK(parse_rational("21/22") == Rational(21, 22));
  CHECK(parse_rational("-1/48") == Rational(-1, 48));
  CHECK(parse_rational("8") == 8);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("weight and charge lookups") {
  auto f = field_with_weight(MinimalModel(9), 8);
  REQUIRE(f.has_value());
  CHECK(f->label() == "1.7");
  CHECK(!field_with_weight(MinimalModel(9), Rational(1, 7)).has_value());

  auto m9 = model_with_central_charge(Rational(21, 22));
  REQUIRE(m9.has_value());
  CHECK(m9->m() == 9);
  CHECK(model_with_central_charge(Rational(1, 2))->m() == 1);
  CHECK(model_with_central_charge(Rational(7, 10))->m() == 2);
  CHECK(!model_with_central_charge(Rational(3, 4)).has_value());
  CHECK(!model_with_central_charge(Rational(3, 2)).has_value());
}

TEST_SUITE_END();
