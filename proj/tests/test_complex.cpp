#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "test_support.hpp"
#include "urprior/complex.hpp"
#include "urprior/credence.hpp"

using namespace urprior;
using namespace urprior::testing;

using Counts = std::vector<std::size_t>;

TEST_CASE("overlap complex of the golden systems", "[complex]") {
  CHECK(build_overlap_complex(load_fixture_system("ex1.json"), std::nullopt).counts() == Counts{3, 3, 1});
  CHECK(build_overlap_complex(load_fixture_system("ex2.json"), std::nullopt).counts() == Counts{3, 3});
  CHECK(build_overlap_complex(load_fixture_system("ex4.json"), std::nullopt).counts() == Counts{4, 6, 4});

  const auto ex4 = build_overlap_complex(load_fixture_system("ex4.json"), std::nullopt);
  CHECK(ex4.count(3) == 0);
  CHECK(ex4.dimension() == 2);
  CHECK_FALSE(ex4.max_dim().has_value());
}

TEST_CASE("overlap complex respects max_dim", "[complex]") {
  const auto ex1 = load_fixture_system("ex1.json");
  const auto x = build_overlap_complex(ex1, 1);
  CHECK(x.counts() == Counts{3, 3});
  CHECK(x.max_dim() == std::optional<std::size_t>(1));
  CHECK(x.knows_dim(1));
  CHECK_FALSE(x.knows_dim(2));
  CHECK_THROWS_AS(coboundary_matrix(x, 1), std::invalid_argument);
  CHECK(build_overlap_complex(ex1, 0).counts() == Counts{3});
}

TEST_CASE("one-sided null overlap leaves no edge", "[complex]") {
  const auto x = build_overlap_complex(load_fixture_system("gap.json"), std::nullopt);
  CHECK(x.counts() == Counts{2});
}

TEST_CASE("from_facets builds the closure", "[complex]") {
  const auto hollow = load_fixture_complex("tri_unfilled.json");
  CHECK(hollow.counts() == Counts{3, 3});
  const auto filled = load_fixture_complex("tri_filled.json");
  CHECK(filled.counts() == Counts{3, 3, 1});
  const auto plugged = load_fixture_complex("plugged.json");
  CHECK(plugged.counts() == Counts{4, 6, 3});
  CHECK(plugged.contains({0, 3}));
  CHECK_FALSE(plugged.contains({0, 1, 2}));

  const auto isolated = from_facets({"a", "b", "c"}, {{"a", "b"}});
  CHECK(isolated.counts() == Counts{3, 1});
  CHECK(isolated.facets() == std::vector<Simplex>{{2}, {0, 1}});
}

TEST_CASE("from_facets ignores facet order and vertex order inside facets", "[complex]") {
  CHECK(from_facets({"1", "2", "3"}, {{"3", "1"}, {"2", "1"}, {"3", "2"}}) == load_fixture_complex("tri_unfilled.json"));
}

TEST_CASE("from_facets rejects bad input", "[complex]") {
  CHECK_THROWS_AS(from_facets({"1", "2"}, {{"1", "9"}}), std::invalid_argument);
  CHECK_THROWS_AS(from_facets({"1", "2"}, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(from_facets({"1", "1"}, {{"1"}}), std::invalid_argument);
}

TEST_CASE("simplex labels and canonical order", "[complex]") {
  const auto plugged = load_fixture_complex("plugged.json");
  std::vector<std::string> edges;
  for (const auto& e : plugged.simplices(1)) edges.push_back(plugged.label(e));
  CHECK(edges == std::vector<std::string>{"(1,2)", "(1,3)", "(1,4)", "(2,3)", "(2,4)", "(3,4)"});
  CHECK(plugged.simplices(7).empty());
}

TEST_CASE("coboundary matrices of the filled triangle", "[complex]") {
  const auto filled = load_fixture_complex("tri_filled.json");
  CHECK(coboundary_matrix(filled, 1) == mat({{1, -1, 1}}));
  CHECK(coboundary_matrix(filled, 0) == mat({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
  CHECK(coboundary_matrix(filled, 2).rows() == 0);
  CHECK(coboundary_matrix(filled, 2).cols() == 1);
}

TEST_CASE("coboundary matrices of the plugged hole", "[complex]") {
  const auto plugged = load_fixture_complex("plugged.json");
  CHECK(coboundary_matrix(plugged, 1) == mat({{1, 0, -1, 0, 1, 0}, {0, 1, -1, 0, 0, 1}, {0, 0, 0, 1, -1, 1}}));
  CHECK(coboundary_matrix(plugged, 0) ==
        mat({{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}, {0, -1, 1, 0}, {0, -1, 0, 1}, {0, 0, -1, 1}}));
}

TEST_CASE("coboundary matrix of the hollow tetrahedron", "[complex]") {
  const auto x = build_overlap_complex(load_fixture_system("ex4.json"), std::nullopt);
  CHECK(coboundary_matrix(x, 1) ==
        mat({{1, -1, 0, 1, 0, 0}, {1, 0, -1, 0, 1, 0}, {0, 1, -1, 0, 0, 1}, {0, 0, 0, 1, -1, 1}}));
}

TEST_CASE("coboundary_matrix works over other scalars", "[complex]") {
  const auto filled = load_fixture_complex("tri_filled.json");
  const MatrixX<long> d1 = coboundary_matrix<long>(filled, 1);
  const MatrixX<long> d0 = coboundary_matrix<long>(filled, 0);
  CHECK((d1 * d0).isZero());
}

TEST_CASE("complex invariants on random complexes", "[complex][property]") {
  Engine rng(0x5eed'0003);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_complex(rng);

    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(is_exactly_zero(MatrixQ(coboundary_matrix(x, k + 1) * coboundary_matrix(x, k))));
    }

    std::vector<std::vector<std::string>> facets;
    for (const auto& f : x.facets()) {
      std::vector<std::string> named;
      for (auto v : f) named.push_back(x.vertices()[v]);
      facets.push_back(std::move(named));
    }
    const auto rebuilt = from_facets(x.vertices(), facets);
    CHECK(rebuilt == x);
    CHECK(rebuilt.facets() == x.facets());
  }
}

TEST_CASE("overlap complex membership matches overlap_mass", "[complex][property]") {
  Engine rng(0x5eed'0004);
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = trial % 2 ? random_system(rng, 5, 6) : conditioned_system(rng, {5, 6});
    const auto x = build_overlap_complex(s, std::nullopt);
    const std::size_t n = s.size();

    for (AgentIndex i = 0; i < n; ++i) CHECK(x.contains({i}));

    // Exhaustive scan of every agent subset.
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex j;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1) j.push_back(v);
      bool all_positive = true;
      for (auto v : j) all_positive = all_positive && overlap_mass(s, v, j) > 0;
      INFO("trial " << trial << " subset " << x.label(j));
      CHECK(x.contains(j) == all_positive);
    }

    // Downward closure.
    for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max(x.dimension(), 0)); ++k) {
      for (const auto& sigma : x.simplices(k)) {
        for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
          Simplex face;
          for (std::size_t v = 0; v < sigma.size(); ++v)
            if (v != drop) face.push_back(sigma[v]);
          CHECK(x.contains(face));
        }
      }
    }
  }
}
