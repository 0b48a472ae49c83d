#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locoh/instances.hpp"
#include "locoh/seqcm.hpp"

using namespace locoh;

namespace {

const Field Q = Field::rationals();

MonomialIdeal ideal(const PolyRingContext& r, const std::vector<std::string>& gens) {
  std::vector<Expo> es;
  for (const auto& s : gens) es.push_back(parse_monomial(r, s));
  return MonomialIdeal::make(r, std::move(es));
}

}  // namespace

TEST_CASE("the three-component example is 3-sCM but not 2-sCM") {
  PolyRingContext r5(Q, {"x1", "x2", "x3", "x4", "x5"});
  MonomialIdeal j = intersect(intersect(ideal(r5, {"x1"}), ideal(r5, {"x2", "x3"})),
                              ideal(r5, {"x1^2", "x4", "x5"}));
  DimensionFiltration f = dimension_filtration(j);
  CHECK(f.d == 4);
  CHECK(f.u(-1) == j);
  CHECK(f.u(0) == j);
  CHECK(f.u(1) == j);
  CHECK(f.u(2) == intersect(ideal(r5, {"x1"}), ideal(r5, {"x2", "x3"})));
  CHECK(f.u(3) == ideal(r5, {"x1"}));
  CHECK(f.u(4).is_unit());

  CHECK(is_partially_scm(j, 4));
  CHECK(is_partially_scm(j, 3));
  CHECK_FALSE(is_partially_scm(j, 2));
  CHECK_FALSE(is_sequentially_cm(j));
}

TEST_CASE("prime ideals jump once") {
  PolyRingContext r3(Q, {"x", "y", "z"});
  MonomialIdeal p = ideal(r3, {"x", "y"});
  DimensionFiltration f = dimension_filtration(p);
  CHECK(f.d == 1);
  CHECK(f.u(0) == p);
  CHECK(f.u(1).is_unit());
  CHECK(is_sequentially_cm(p));
}

TEST_CASE("principal squarefree ideal in the plane") {
  PolyRingContext r2(Q, {"x", "y"});
  MonomialIdeal j = ideal(r2, {"x*y"});
  DimensionFiltration f = dimension_filtration(j);
  CHECK(f.d == 1);
  CHECK(f.u(0) == j);
  CHECK(f.u(1).is_unit());
  CHECK(is_sequentially_cm(j));
}

TEST_CASE("skew lines are not sequentially CM") {
  PolyRingContext r4(Q, {"x1", "x2", "x3", "x4"});
  MonomialIdeal i = intersect(ideal(r4, {"x1", "x3"}), ideal(r4, {"x2", "x4"}));
  CHECK_FALSE(is_sequentially_cm(i));
  CHECK_FALSE(duval_cross_check(i));
}

TEST_CASE("cohen-macaulay quotients are sequentially CM") {
  PolyRingContext r4(Q, {"x", "y", "z", "w"});
  CHECK(is_sequentially_cm(ideal(r4, {"x", "y"})));
  CHECK(is_sequentially_cm(MonomialIdeal::maximal(r4)));
}

TEST_CASE("duval skeleton criterion") {
  PolyRingContext r4(Q, {"x1", "x2", "x3", "x4"});
  // two disjoint edges: disconnected pure 1-skeleton
  MonomialIdeal edges = intersect(ideal(r4, {"x1", "x3"}), ideal(r4, {"x2", "x4"}));
  CHECK_FALSE(duval_cross_check(edges));
  // hollow triangle
  PolyRingContext r3(Q, {"x", "y", "z"});
  CHECK(duval_cross_check(ideal(r3, {"x*y*z"})));
  // cone over two points (a path): sequentially CM
  SimplicialComplex path = SimplicialComplex::generated_by(3, {0b011, 0b110});
  CHECK(duval_cross_check(stanley_reisner(path, r3)));
}

TEST_CASE("duval agrees with the filtration route on random squarefree ideals") {
  for (int t = 0; t < 30; ++t) {
    MonomialIdeal i = random_instance(InstanceKind::Squarefree, 5, 4000 + t, Q);
    CHECK(is_sequentially_cm(i) == duval_cross_check(i));
  }
}

TEST_CASE("filtration invariants on random ideals") {
  for (int t = 0; t < 20; ++t) {
    MonomialIdeal j = random_instance(InstanceKind::GeneralMonomial, 4, 4100 + t, Q);
    DimensionFiltration f = dimension_filtration(j);
    CHECK(f.u(-1) == j);
    CHECK(f.u(f.d).is_unit());
    for (int k = 0; k <= f.d; ++k) {
      CHECK(f.u(k).contains(f.u(k - 1)));
      if (!(f.u(k) == f.u(k - 1))) {
        MonomialIdeal ann = colon(f.u(k - 1), f.u(k));
        CHECK_FALSE(ann.is_unit());
        CHECK(dimension(ann) == k);
      }
    }
  }
}

TEST_CASE("level bounds") {
  PolyRingContext r2(Q, {"x", "y"});
  CHECK_THROWS_AS(is_partially_scm(ideal(r2, {"x"}), -1), Error);
  CHECK(is_partially_scm(ideal(r2, {"x"}), 1));
  CHECK_THROWS_AS(dimension_filtration(MonomialIdeal::unit(r2)), Error);
}
