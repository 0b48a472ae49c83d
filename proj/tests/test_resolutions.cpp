#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locoh/instances.hpp"
#include "locoh/resolutions.hpp"

using namespace locoh;

namespace {

const Field Q = Field::rationals();

MonomialIdeal ideal(const PolyRingContext& r, const std::vector<std::string>& gens) {
  std::vector<Expo> es;
  for (const auto& s : gens) es.push_back(parse_monomial(r, s));
  return MonomialIdeal::make(r, std::move(es));
}

MonomialIdeal skew_lines() {
  PolyRingContext r(Q, {"x1", "x2", "x3", "x4"});
  return intersect(ideal(r, {"x1", "x3"}), ideal(r, {"x2", "x4"}));
}

}  // namespace

TEST_CASE("taylor complex structure") {
  PolyRingContext r(Q, {"x", "y", "z"});
  MonomialIdeal j = ideal(r, {"x*y", "x*z"});
  TaylorComplex t = TaylorComplex::build(j);
  CHECK(t.r == 2);
  CHECK(t.lcms[0b11] == parse_monomial(r, "x*y*z"));
  std::vector<int> dims;
  std::vector<Matrix> d;
  t.tensor_k(dims, d);
  CHECK(dims == std::vector<int>{1, 2, 1});
  // d*d = 0 after scalarization at every lattice degree
  for (const auto& alpha : lcm_lattice(j)) {
    Matrix d1 = t.scalarized_differential(1, alpha);
    Matrix d2 = t.scalarized_differential(2, alpha);
    CHECK((d1 * d2).is_zero());
  }
}

TEST_CASE("betti numbers") {
  PolyRingContext r3(Q, {"x", "y", "z"});
  CHECK(betti_numbers(ideal(r3, {"x", "y"})) == std::vector<int>{1, 2, 1, 0});
  CHECK(betti_numbers(ideal(r3, {"x*y", "x*z"})) == std::vector<int>{1, 2, 1, 0});
  PolyRingContext r4(Q, {"x", "y", "z", "w"});
  CHECK(betti_numbers(ideal(r4, {"x*y*z", "x*y*w"})) == std::vector<int>{1, 2, 1, 0, 0});
  CHECK(betti_numbers(MonomialIdeal::zero(r3)) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("stranded betti equals the literal taylor route") {
  for (int t = 0; t < 25; ++t) {
    MonomialIdeal j = random_instance(InstanceKind::GeneralMonomial, 4, 40 + t, Q);
    if (static_cast<int>(j.gens.size()) > 10) continue;
    CHECK(betti_numbers(j) == betti_numbers_literal(j));
  }
  for (int t = 0; t < 25; ++t) {
    MonomialIdeal j = random_instance(InstanceKind::Squarefree, 5, 70 + t, Q);
    if (static_cast<int>(j.gens.size()) > 10) continue;
    CHECK(betti_numbers(j) == betti_numbers_literal(j));
  }
}

TEST_CASE("pd, depth, cohen-macaulayness") {
  PolyRingContext r2(Q, {"x", "y"});
  CHECK(pd(ideal(r2, {"x"})) == 1);
  CHECK(depth_ring(ideal(r2, {"x"})) == 1);
  CHECK(is_cm_ring(ideal(r2, {"x"})));

  MonomialIdeal skew = skew_lines();
  CHECK(pd(skew) == 3);
  CHECK(depth_ring(skew) == 1);
  CHECK(dimension(skew) == 2);
  CHECK_FALSE(is_cm_ring(skew));

  PolyRingContext r3(Q, {"x", "y", "z"});
  MonomialIdeal j = ideal(r3, {"x*y", "x*z"});
  CHECK(pd(j) == 2);
  CHECK(depth_ring(j) == 1);
  CHECK(dimension(j) == 2);
  CHECK_FALSE(is_cm_ring(j));
}

TEST_CASE("hochster formula") {
  PolyRingContext r2(Q, {"x", "y"});
  CHECK(hochster_betti(ideal(r2, {"x*y"}), 0, 0b11) == 1);

  // totals over sigma at p equal beta_{p+1}(R/I)
  auto check_totals = [](const MonomialIdeal& i) {
    int n = i.ring.n();
    std::vector<int> beta = betti_numbers(i);
    for (int p = 0; p + 1 <= n; ++p) {
      long total = 0;
      for (uint32_t sigma = 0; sigma < (1u << n); ++sigma) total += hochster_betti(i, p, sigma);
      CHECK(total == beta[static_cast<size_t>(p + 1)]);
    }
  };
  check_totals(skew_lines());
  for (int t = 0; t < 15; ++t) {
    MonomialIdeal i = random_instance(InstanceKind::Squarefree, 5, 200 + t, Q);
    if (!i.is_zero() && i.is_proper()) check_totals(i);
  }
}

TEST_CASE("depth of a pair") {
  PolyRingContext r2(Q, {"x", "y"});
  // (x)/(xy) is a polynomial line: depth 1
  CHECK(depth_pair(ideal(r2, {"x"}), ideal(r2, {"x*y"})) == 1);
  CHECK_THROWS_AS(depth_pair(ideal(r2, {"x*y"}), ideal(r2, {"x"})), Error);
  CHECK_THROWS_AS(depth_pair(ideal(r2, {"x"}), ideal(r2, {"x"})), Error);

  // depth_pair(R, J) reduces to depth of the quotient ring
  for (int t = 0; t < 15; ++t) {
    MonomialIdeal j = random_instance(InstanceKind::GeneralMonomial, 4, 300 + t, Q);
    if (j.is_zero() || !j.is_proper()) continue;
    CHECK(depth_pair(MonomialIdeal::unit(j.ring), j) == depth_ring(j));
  }

  // the filtration pair of the partially-sCM example: depth 3
  PolyRingContext r5(Q, {"x1", "x2", "x3", "x4", "x5"});
  MonomialIdeal u3 = ideal(r5, {"x1"});
  MonomialIdeal u2 = intersect(u3, ideal(r5, {"x2", "x3"}));
  CHECK(depth_pair(u3, u2) == 3);
}

TEST_CASE("lcm lattice") {
  PolyRingContext r(Q, {"x", "y", "z"});
  MonomialIdeal j = ideal(r, {"x*y", "y*z"});
  auto lattice = lcm_lattice(j);
  CHECK(lattice.size() == 3);  // xy, yz, xyz
}
