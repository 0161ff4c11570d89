#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arinf/hodge.hpp"

#include <stdexcept>

using namespace arinf;

TEST_CASE("builtin data validate and carry the advertised dimensions") {
  for (const auto& name : builtin_names()) {
    const HodgeDatum d = builtin_datum(name);
    CAPTURE(name);
    CHECK(validate(d).empty());
    CHECK(d.name == name);
  }
  CHECK(builtin_names().size() == 5);
  CHECK_THROWS_AS(builtin_datum("no_such_variety"), std::invalid_argument);
}

TEST_CASE("hodge accessor clamps out-of-diamond indices to zero") {
  const HodgeDatum d = builtin_datum("elliptic_curve");
  CHECK(d.hodge(0, 0) == 1);
  CHECK(d.hodge(1, 0) == 1);
  CHECK(d.hodge(0, 1) == 1);
  CHECK(d.hodge(1, 1) == 1);
  CHECK(d.hodge(-1, 0) == 0);
  CHECK(d.hodge(2, 0) == 0);
  CHECK(d.hodge(0, 5) == 0);
}

TEST_CASE("degree dimensions and the total count") {
  const HodgeDatum k3 = builtin_datum("k3");
  CHECK(k3.n == 2);
  CHECK(k3.dim_h(0) == 1);
  CHECK(k3.dim_h(1) == 0);
  CHECK(k3.dim_h(2) == 22);
  CHECK(k3.dim_h(3) == 0);
  CHECK(k3.dim_h(4) == 1);
  CHECK(k3.total_hodge() == 24);

  const HodgeDatum ab = builtin_datum("abelian_surface");
  CHECK(ab.dim_h(1) == 4);
  CHECK(ab.dim_h(2) == 6);
  CHECK(ab.total_hodge() == 16);
}

TEST_CASE("validate reports each broken rule with indices") {
  HodgeDatum d = builtin_datum("k3");

  SUBCASE("negative entry") {
    d.h[1][1] = -3;
    const auto problems = validate(d);
    REQUIRE(!problems.empty());
    CHECK(problems[0].find("1,1") != std::string::npos);
  }

  SUBCASE("conjugation symmetry h^{p,q} = h^{q,p}") {
    d.h[2][0] = 7;
    CHECK(!validate(d).empty());
  }

  SUBCASE("ragged hodge table") {
    d.h[1].pop_back();
    CHECK(!validate(d).empty());
  }

  SUBCASE("real field needs the eigenspace split on even diagonal entries") {
    d.field = Field::R;
    const auto problems = validate(d);
    CHECK(!problems.empty());
  }

  SUBCASE("real split must sum to the diagonal") {
    d.field = Field::R;
    d.h_plus = std::vector<int>{1, 0, 1};
    d.h_minus = std::vector<int>{0, 0, 0};
    const auto problems = validate(d);
    CHECK(!problems.empty());  // h^{1,1} = 20 but 0 + 0 declared
  }

  SUBCASE("consistent real split passes") {
    d.field = Field::R;
    d.h_plus = std::vector<int>{1, 12, 1};
    d.h_minus = std::vector<int>{0, 8, 0};
    CHECK(validate(d).empty());
  }
}

TEST_CASE("filtration dimensions: F and Fbar by p/q threshold, Gamma by min") {
  const HodgeDatum k3 = builtin_datum("k3");
  // degree 2: h^{2,0} = 1, h^{1,1} = 20, h^{0,2} = 1
  CHECK(filtration_dim(k3, FiltrationKind::F, 0, 2) == 22);
  CHECK(filtration_dim(k3, FiltrationKind::F, 1, 2) == 21);
  CHECK(filtration_dim(k3, FiltrationKind::F, 2, 2) == 1);
  CHECK(filtration_dim(k3, FiltrationKind::F, 3, 2) == 0);
  CHECK(filtration_dim(k3, FiltrationKind::Fbar, 1, 2) == 21);
  CHECK(filtration_dim(k3, FiltrationKind::Gamma, 0, 2) == 22);
  CHECK(filtration_dim(k3, FiltrationKind::Gamma, 1, 2) == 20);
  CHECK(filtration_dim(k3, FiltrationKind::Gamma, 2, 2) == 0);
  // a <= 0 thresholds are vacuous for F/Fbar
  CHECK(filtration_dim(k3, FiltrationKind::F, -2, 2) == 22);
  CHECK_THROWS_AS(filtration_dim(k3, FiltrationKind::F, 0, 5), std::domain_error);
  CHECK_THROWS_AS(filtration_dim(k3, FiltrationKind::F, 0, -1), std::domain_error);
}

TEST_CASE("primitive dimensions implement the hard-Lefschetz differences") {
  const HodgeDatum k3 = builtin_datum("k3");
  const auto prim = primitive_dims(k3);
  CHECK(prim.at({0, 0}) == 1);
  CHECK(prim.at({1, 1}) == 19);  // 20 - 1
  CHECK(prim.at({2, 0}) == 1);
  CHECK(prim.at({0, 2}) == 1);
  // p+q > n entries are absent: primitive classes live in low degree
  CHECK(prim.find({2, 2}) == prim.end());

  const HodgeDatum pt = builtin_datum("point");
  const auto prim_pt = primitive_dims(pt);
  CHECK(prim_pt.at({0, 0}) == 1);
  CHECK(prim_pt.size() == 1);

  HodgeDatum bad = builtin_datum("k3");
  bad.h[1][1] = -1;
  CHECK_THROWS_AS(primitive_dims(bad), std::invalid_argument);
}
