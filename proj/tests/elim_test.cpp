#include <doctest.h>

#include "fixtures.hpp"
#include "trif/curvelab/envelope.hpp"
#include "trif/elim/division.hpp"
#include "trif/elim/elimination.hpp"
#include "trif/elim/gcd.hpp"
#include "trif/elim/groebner.hpp"
#include "trif/elim/resultant.hpp"
#include "trif/error.hpp"

using namespace trif;
using trif::test::plane_fixture;
using trif::test::xy;

namespace {

const Variables& xyt() {
  static const Variables v{"x", "y", "t"};
  return v;
}

MultiPoly p3(const char* text) { return parse_poly(text, xyt()); }

const Variables& xyab() {
  static const Variables v{"x", "y", "a", "b"};
  return v;
}

MultiPoly p4(const char* text) { return parse_poly(text, xyab()); }

}  // namespace

TEST_CASE("sylvester_resultant") {
  CHECK(sylvester_resultant(p3("t^2 - x"), p3("t - y"), "t") == p3("y^2 - x"));
  CHECK(sylvester_resultant(p3("t^2 - 2"), p3("2*t^2 - 4"), "t").is_zero());

  const MultiPoly res = sylvester_resultant(p3("x*(t^2 + 1)^2 + 3*t^2 - 1"), p3("y*(t^2 + 1)^2 + t*(3*t^2 - 1)"), "t");
  const MultiPoly sf = squarefree_part(project_out(res, {"t"}));
  CHECK(sf == xy("x^4 + 2*x^2*y^2 + y^4 - x^3 + 3*x*y^2"));

  CHECK_THROWS_AS(sylvester_resultant(p3("x + 1"), p3("t - y"), "t"), DomainError);
  CHECK_THROWS_AS(sylvester_resultant(p3("t"), p3("t - y"), "z"), DomainError);
}

TEST_CASE("PRS and Bareiss resultants agree") {
  const MultiPoly f = p3("x*(t^2 + 1)^2 + 3*t^2 - 1");
  const MultiPoly g = p3("y*(t^2 + 1)^2 + t*(3*t^2 - 1)");
  CHECK(prs_resultant(f, g, "t") == sylvester_resultant(f, g, "t"));
  CHECK(prs_resultant(p3("t^2 - 2"), p3("2*t^2 - 4"), "t").is_zero());
  CHECK(prs_resultant(p3("3*t + x"), p3("2*t - y"), "t") == p3("-3*y - 2*x"));
}

TEST_CASE("multivar_gcd") {
  CHECK(multivar_gcd(xy("x^2 - y^2"), xy("x^2 + 2*x*y + y^2")) == xy("x + y"));
  CHECK(multivar_gcd(xy("6*x^2 - 4*y"), MultiPoly(plane_variables())) == xy("3*x^2 - 2*y"));
  CHECK(multivar_gcd(xy("x + 1"), xy("y + 1")) == xy("1"));
  CHECK_THROWS_AS(multivar_gcd(MultiPoly(plane_variables()), MultiPoly(plane_variables())), DomainError);
  const MultiPoly f1 = plane_fixture("f1.json");
  const MultiPoly f2 = plane_fixture("f2.json");
  CHECK(multivar_gcd(f1 * f2, f2 * f2) == sign_normalized(primitive_part(f2)));
}

TEST_CASE("divide_exact") {
  const auto q = divide_exact(xy("x^2 - y^2"), xy("x - y"));
  REQUIRE(q);
  CHECK(*q == xy("x + y"));
  CHECK_FALSE(divide_exact(xy("x^2 + y^2"), xy("x - y")));
  CHECK_FALSE(divide_exact(xy("x + 1"), xy("2")));
  CHECK_THROWS_AS(divide_exact(xy("x"), MultiPoly(plane_variables())), DomainError);

  const MultiPoly f1 = plane_fixture("f1.json");
  const MultiPoly f2 = plane_fixture("f2.json");
  const auto back = divide_exact(f1 * f2, f1);
  REQUIRE(back);
  CHECK(*back == f2);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(xy("(x + y)^2")) == xy("x + y"));
  CHECK(squarefree_part(xy("x^2*y + 2*x*y + y")) == xy("x*y + y"));
  const MultiPoly sf = xy("x^3 - y^2");
  CHECK(squarefree_part(sf) == sf);
  CHECK(squarefree_part(xy("-4*x^2 + 8*x - 4")) == xy("x - 1"));
  CHECK_THROWS_AS(squarefree_part(MultiPoly(plane_variables())), DomainError);
}

TEST_CASE("resultant_eliminate normalizes and satisfies the result invariants") {
  const EliminationResult r = resultant_eliminate(p3("t^2 - x"), p3("2*t - 2*y"), "t");
  CHECK(r.method == EliminationMethod::resultant);
  CHECK(r.generator == xy("y^2 - x"));
  CHECK(r.generator.vars() == plane_variables());
  CHECK(divide_exact(primitive_part(r.raw), r.generator).has_value());
  CHECK_THROWS_AS(resultant_eliminate(p3("t^2 - 2"), p3("2*t^2 - 4"), "t"), DomainError);

  const nlohmann::json j = to_json(r);
  CHECK(j["method"] == "resultant");
  CHECK(j["generator_text"] == "y^2 - x");
  CHECK(j["eliminated_vars"] == nlohmann::json::array({"t"}));
}

TEST_CASE("groebner_eliminate: small systems") {
  const EliminationResult r = groebner_eliminate({p3("t^2 - x"), p3("t - y")}, {"t"});
  CHECK(r.method == EliminationMethod::groebner);
  CHECK(r.principal);
  CHECK(r.generator == xy("y^2 - x"));

  GroebnerOptions plain;
  plain.homogenize = false;
  CHECK(groebner_eliminate({p3("t^2 - x"), p3("t - y")}, {"t"}, plain).generator == xy("y^2 - x"));
  GroebnerOptions lex;
  lex.order = EliminationOrder::lex;
  CHECK(groebner_eliminate({p3("t^2 - x"), p3("t - y")}, {"t"}, lex).generator == xy("y^2 - x"));
  GroebnerOptions modular;
  modular.modular = true;
  const EliminationResult m = groebner_eliminate({p3("t^2 - x"), p3("t - y")}, {"t"}, modular);
  CHECK(m.generator == xy("y^2 - x"));
  CHECK(m.primes_used >= 2);

  // Twisted cubic: eliminating t leaves a principal ideal in x, y.
  CHECK(groebner_eliminate({p3("x - t^2"), p3("y - t^3")}, {"t"}).generator == xy("x^3 - y^2"));
}

TEST_CASE("groebner_eliminate: circle offset") {
  const std::vector<MultiPoly> system{p4("a^2 + b^2 - 4"), p4("(x - a)^2 + (y - b)^2 - 1"),
                                      p4("2*a*(y - b) - 2*b*(x - a)")};
  const EliminationResult r = groebner_eliminate(system, {"a", "b"});
  CHECK(r.principal);
  CHECK(equal_up_to_constant(r.generator, xy("(x^2 + y^2 - 9)*(x^2 + y^2 - 1)")));
  GroebnerOptions modular;
  modular.modular = true;
  CHECK(equal_up_to_constant(groebner_eliminate(system, {"a", "b"}, modular).generator,
                             xy("(x^2 + y^2 - 9)*(x^2 + y^2 - 1)")));
}

TEST_CASE("groebner_eliminate: non-principal ideals are flagged") {
  const EliminationResult r = groebner_eliminate({p3("t"), p3("x^2"), p3("x*y")}, {"t"});
  CHECK_FALSE(r.principal);
  CHECK(r.eliminants.size() == 2);
  CHECK(r.generator.total_degree() <= 2);
}

TEST_CASE("groebner_eliminate: argument errors and budgets") {
  CHECK_THROWS_AS(groebner_eliminate({}, {"t"}), DomainError);
  CHECK_THROWS_AS(groebner_eliminate({p3("t - x")}, {}), DomainError);
  CHECK_THROWS_AS(groebner_eliminate({p3("t - x")}, {"x", "y", "t"}), DomainError);
  CHECK_THROWS_AS(groebner_eliminate({p3("t - x")}, {"z"}), DomainError);

  const MultiPoly f = build_family_poly(CircleFamily(test::param_fixture("param_second.json"), Rational(1)));
  GroebnerOptions tight;
  tight.max_pairs = 3;
  CHECK_THROWS_AS(groebner_eliminate({f, partial_derivative(f, "t")}, {"t"}, tight), ResourceLimitError);
  tight = {};
  tight.max_terms = 50;
  CHECK_THROWS_AS(groebner_eliminate({f, partial_derivative(f, "t")}, {"t"}, tight), ResourceLimitError);
}

TEST_CASE("budgets can be set from the environment") {
  ::setenv("TRIF_MAX_TERMS", "1234", 1);
  ::setenv("TRIF_MAX_PAIRS", "junk", 1);
  const GroebnerOptions o = groebner_options_from_env();
  CHECK(o.max_terms == 1234);
  CHECK(o.max_pairs == GroebnerOptions{}.max_pairs);
  ::unsetenv("TRIF_MAX_TERMS");
  ::unsetenv("TRIF_MAX_PAIRS");
  CHECK(groebner_options_from_env().max_terms == 1'000'000);
}

TEST_CASE("groebner and resultant routes agree on trifolium implicitization") {
  const MultiPoly f = p3("x*(t^4 + 2*t^2 + 1) + 3*t^2 - 1");
  const MultiPoly g = p3("y*(t^4 + 2*t^2 + 1) + 3*t^3 - t");
  const EliminationResult res = resultant_eliminate(f, g, "t");
  const EliminationResult gb = groebner_eliminate({f, g}, {"t"});
  CHECK(gb.principal);
  CHECK(equal_up_to_constant(res.generator, gb.generator));
}

TEST_CASE("filter_spurious_factors") {
  const std::vector<std::pair<double, double>> parabola{{0, 0}, {1, 1}, {4, -2}, {0.25, 0.5}};
  const MultiPoly p = xy("y^2 - x");
  const FactorSplit same = filter_spurious_factors(p, parabola, 1e-9);
  CHECK(same.kept == p);
  CHECK(same.removed.empty());

  const MultiPoly candidate = xy("(x^2 + y^2 + 1)*(y^2 - x)");
  const FactorSplit split = filter_spurious_factors(candidate, parabola, 1e-9);
  CHECK(split.kept == p);
  REQUIRE(split.removed.size() == 1);
  CHECK(split.removed[0] == xy("x^2 + y^2 + 1"));
  CHECK(split.kept * split.removed[0] == candidate);

  CHECK_THROWS_AS(filter_spurious_factors(xy("x^2 + y^2 + 1"), parabola, 1e-9), DomainError);
  CHECK_THROWS_AS(filter_spurious_factors(xy("7"), parabola, 1e-9), DomainError);
}

TEST_CASE("filter_spurious_factors keeps both printed envelope components") {
  const MultiPoly f1 = plane_fixture("f1.json");
  const MultiPoly f2 = plane_fixture("f2.json");
  const CircleFamily family(test::param_fixture("param_second.json"), Rational(1));
  std::vector<double> ts;
  for (int k = -20; k <= 20; ++k) ts.push_back(0.25 * k);
  const auto points = oracle_point_list(oracle_envelope_points(family, ts));
  const FactorSplit split = filter_spurious_factors(f1 * f2, points, 1e-8, {f1, f2});
  CHECK(split.removed.empty());
  CHECK(equal_up_to_constant(split.kept, f1 * f2));
}
