#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"
#include "urprior/cohomology.hpp"
#include "urprior/compat.hpp"
#include "urprior/oracle.hpp"
#include "urprior/witness.hpp"

using namespace urprior;
using namespace urprior::testing;

namespace {

void check_round_trip(const SimplicialComplex& x) {
  const auto s = generate_counterexample(x);
  CHECK(build_overlap_complex(s, std::nullopt) == x);
  CHECK(pairwise_compatibility(s).compatible);
  CHECK(pairwise_compatibility(s).asymmetries.empty());
  CHECK(decide_urprior(s).verdict == Verdict::none);
  CHECK_FALSE(feasibility_oracle(s).has_value());

  // Every point of every awareness set carries mass.
  for (const auto& a : s.agents())
    for (const auto& [o, p] : a.mass) CHECK(p > 0);
}

// r_ij / 2^f(i,j) must be a multiplicative coboundary.
void check_quotient_is_coboundary(const SimplicialComplex& x) {
  const auto s = generate_counterexample(x);
  const auto f = *noncoboundary_cocycle(x);
  auto r = ratio_cochain(s, build_overlap_complex(s, 1));
  for (std::size_t e = 0; e < r.edges.size(); ++e) {
    const long exponent = numerator(f.at(x, r.edges[e])).convert_to<long>();
    Rational two_f(1);
    for (long k = 0; k < std::abs(exponent); ++k) two_f *= 2;
    if (exponent < 0) two_f = 1 / two_f;
    r.ratios[e] /= two_f;
  }
  CHECK(std::holds_alternative<Scaling>(solve_scaling(x, r)));
}

}  // namespace

TEST_CASE("counterexample on the hollow triangle", "[witness]") {
  const auto x = load_fixture_complex("tri_unfilled.json");
  const auto s = generate_counterexample(x);
  CHECK(s.space().labels() == std::vector<std::string>{"(1)", "(2)", "(3)", "(1,2)", "(1,3)", "(2,3)"});
  CHECK(s.agent_names() == std::vector<std::string>{"1", "2", "3"});

  CHECK(named_measure(s, s.agent(0).mass) == table({{"(1)", "1/4"}, {"(1,2)", "1/2"}, {"(1,3)", "1/4"}}));
  CHECK(named_measure(s, s.agent(1).mass) == table({{"(2)", "1/3"}, {"(1,2)", "1/3"}, {"(2,3)", "1/3"}}));
  CHECK(named_measure(s, s.agent(2).mass) == table({{"(3)", "1/3"}, {"(1,3)", "1/3"}, {"(2,3)", "1/3"}}));

  const auto r = ratio_cochain(s, build_overlap_complex(s, 1));
  CHECK(r.ratios == std::vector<Rational>{Rational(3, 2), Rational(3, 4), Rational(1)});

  const auto result = decide_urprior(s);
  REQUIRE(result.certificate.has_value());
  const auto& cycle = std::get<CycleCertificate>(*result.certificate);
  CHECK(cycle.failing_edge == Simplex{1, 2});
  CHECK(cycle.holonomy == Rational(2));

  check_round_trip(x);
  check_quotient_is_coboundary(x);
}

TEST_CASE("no counterexample without a hole", "[witness]") {
  CHECK_THROWS_AS(generate_counterexample(load_fixture_complex("tri_filled.json")), NoHoleError);
  CHECK_THROWS_AS(generate_counterexample(load_fixture_complex("plugged.json")), NoHoleError);
}

TEST_CASE("counterexamples on cycles and a wedge", "[witness]") {
  const auto c4 = load_fixture_complex("c4.json");
  CHECK(generate_counterexample(c4).space().size() == 8);
  for (const char* file : {"c4.json", "c5.json", "wedge.json"}) {
    INFO(file);
    const auto x = load_fixture_complex(file);
    check_round_trip(x);
    check_quotient_is_coboundary(x);
  }
}

TEST_CASE("round trip on random complexes with a hole", "[witness][property]") {
  Engine rng(0x5eed'000a);
  int holes = 0;
  for (int trial = 0; trial < 300 && holes < 60; ++trial) {
    const auto x = random_complex(rng, 7, 3);
    if (cohomology_dim(x, 1) == 0) {
      CHECK_THROWS_AS(generate_counterexample(x), NoHoleError);
      continue;
    }
    ++holes;
    INFO("complex with counts " << x.counts().size() << " levels, trial " << trial);
    check_round_trip(x);
    check_quotient_is_coboundary(x);
  }
  CHECK(holes >= 20);
}
