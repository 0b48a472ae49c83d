#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locoh/instances.hpp"
#include "locoh/reduction.hpp"

using namespace locoh;

namespace {

const Field Q = Field::rationals();

MonomialIdeal ideal(const PolyRingContext& r, const std::vector<std::string>& gens) {
  std::vector<Expo> es;
  for (const auto& s : gens) es.push_back(parse_monomial(r, s));
  return MonomialIdeal::make(r, std::move(es));
}

}  // namespace

TEST_CASE("the xyz/xyw example reduces in two steps") {
  PolyRingContext r4(Q, {"x", "y", "z", "w"});
  AmbientQuotient a = AmbientQuotient::make(r4, ideal(r4, {"x*y*z", "x*y*w"}));
  MonomialIdeal i = ideal(r4, {"x", "y"});
  ReductionTrace tr = reduce(a, i);
  CHECK(tr.c == 2);
  REQUIRE(tr.steps.size() == 2);
  CHECK(tr.steps[0].variable == "z");
  CHECK(tr.steps[1].variable == "w");
  CHECK(tr.steps[0].c == 2);
  CHECK(tr.steps[1].c == 2);
  CHECK(tr.final_ambient.ring.names == std::vector<std::string>{"x", "y"});
  CHECK(tr.final_ambient.polynomial_like());
  CHECK(tr.final_ideal == MonomialIdeal::maximal(tr.final_ambient.ring));
  // the intermediate ambient is k[x,y,w]/(xyw)
  CHECK(tr.steps[1].ambient_before.ring.names == std::vector<std::string>{"x", "y", "w"});
  CHECK(tr.steps[1].ambient_before.relations.format() == std::vector<std::string>{"x*y*w"});
}

TEST_CASE("zero annihilator stops immediately") {
  PolyRingContext r2(Q, {"x", "y"});
  AmbientQuotient poly = AmbientQuotient::polynomial(r2);
  ReductionTrace tr = reduce(poly, ideal(r2, {"x"}));
  CHECK(tr.steps.empty());
  CHECK(tr.termination == "annihilator is zero");
}

TEST_CASE("low-dimensional input still runs") {
  PolyRingContext r2(Q, {"x", "y"});
  AmbientQuotient poly = AmbientQuotient::polynomial(r2);
  ReductionTrace tr = reduce(poly, MonomialIdeal::maximal(r2));
  CHECK(tr.steps.empty());  // H^2 over k[x,y] is faithful-free of annihilator
}

TEST_CASE("a true instance of the principal-annihilator corollary") {
  // A = k[x,y,z]/(xy) is a CM hypersurface; I = (x) has dim A/I = 2 and c = 1
  PolyRingContext r3(Q, {"x", "y", "z"});
  AmbientQuotient a = AmbientQuotient::make(r3, ideal(r3, {"x*y"}));
  MonomialIdeal i = ideal(r3, {"x"});
  CHECK(cohomological_dimension(a, i) == 1);
  CHECK(main1_hypotheses(a, i));
  CHECK(ann_principal_check(a, i));
  MonomialIdeal ann = annihilator(windowed_module(a, i, 1));
  CHECK(ann.format() == std::vector<std::string>{"y"});
  // and one reduction step is available
  ReductionTrace tr = reduce(a, i);
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].variable == "y");
  CHECK(tr.final_ambient.ring.names == std::vector<std::string>{"x", "z"});
}

TEST_CASE("hypotheses fail for the xyz/xyw ambient") {
  // depth 2 < dim 3: not Cohen-Macaulay, so the corollary is vacuous there
  PolyRingContext r4(Q, {"x", "y", "z", "w"});
  AmbientQuotient a = AmbientQuotient::make(r4, ideal(r4, {"x*y*z", "x*y*w"}));
  MonomialIdeal i = ideal(r4, {"x", "y"});
  CHECK_FALSE(main1_hypotheses(a, i));
  CHECK(ann_principal_check(a, i));  // vacuous
}

TEST_CASE("hypotheses fail when c is above the expected spot") {
  PolyRingContext r4(Q, {"x1", "x2", "x3", "x4"});
  AmbientQuotient poly = AmbientQuotient::polynomial(r4);
  MonomialIdeal skew = intersect(ideal(r4, {"x1", "x3"}), ideal(r4, {"x2", "x4"}));
  // c = 3 = n - (t-1) holds, but Ann is zero over the regular ambient
  CHECK_FALSE(main1_hypotheses(poly, skew));
  // c = 1 but n - (t-1) = 2: the dimension test already fails
  PolyRingContext r3(Q, {"x", "y", "z"});
  CHECK_FALSE(main1_hypotheses(AmbientQuotient::polynomial(r3), ideal(r3, {"x"})));
}

TEST_CASE("q containment on the worked example") {
  PolyRingContext r4(Q, {"x", "y", "z", "w"});
  AmbientQuotient a = AmbientQuotient::make(r4, ideal(r4, {"x*y*z", "x*y*w"}));
  CHECK(q_containment_check(a, ideal(r4, {"x", "y"})));
}

TEST_CASE("q containment is vacuous without a free variable or annihilator") {
  PolyRingContext r2(Q, {"x", "y"});
  AmbientQuotient poly = AmbientQuotient::polynomial(r2);
  CHECK(q_containment_check(poly, MonomialIdeal::maximal(r2)));  // no variable outside the primes
  CHECK(q_containment_check(poly, ideal(r2, {"x"})));            // annihilator is zero
}

TEST_CASE("traces terminate within the variable count") {
  for (int t = 0; t < 10; ++t) {
    MonomialIdeal i = random_instance(InstanceKind::Squarefree, 4, 5100 + t, Q);
    AmbientQuotient poly = AmbientQuotient::polynomial(i.ring);
    ReductionTrace tr = reduce(poly, i);
    CHECK(tr.steps.size() <= 4);
    // each step removes exactly one variable
    int vars = 4;
    for (const auto& s : tr.steps) {
      CHECK(s.ambient_after.ring.n() == vars - 1);
      vars -= 1;
    }
  }
}
