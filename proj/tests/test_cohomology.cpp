#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "test_support.hpp"
#include "urprior/cohomology.hpp"

using namespace urprior;
using namespace urprior::testing;

namespace {

Cochain edges(std::initializer_list<long> values) { return Cochain{1, vec(values)}; }

}  // namespace

TEST_CASE("cocycle test on the triangles", "[cohomology]") {
  const auto filled = load_fixture_complex("tri_filled.json");
  CHECK(is_cocycle(filled, edges({1, 2, 1})));
  CHECK_FALSE(is_cocycle(filled, edges({1, 0, 0})));

  const auto hollow = load_fixture_complex("tri_unfilled.json");
  Engine rng(0x5eed'0005);
  for (int trial = 0; trial < 20; ++trial) {
    VectorQ v(3);
    for (Eigen::Index i = 0; i < 3; ++i) v(i) = Rational(std::uniform_int_distribution<long>(-9, 9)(rng), 7);
    CHECK(is_cocycle(hollow, Cochain{1, v}));
  }
}

TEST_CASE("coboundary of a vertex cochain", "[cohomology]") {
  const auto filled = load_fixture_complex("tri_filled.json");
  const Cochain f{0, vec({0, 1, 2})};
  CHECK(coboundary(filled, f) == edges({1, 2, 1}));
}

TEST_CASE("coboundary_witness solves with free variables at zero", "[cohomology]") {
  const auto filled = load_fixture_complex("tri_filled.json");
  const auto g = edges({1, 2, 1});
  const auto f = coboundary_witness(filled, g);
  REQUIRE(f.has_value());
  CHECK(f->degree == 0);
  CHECK(f->values == vec({-2, -1, 0}));
  CHECK(coboundary(filled, *f) == g);
  const VectorQ shift = f->values - vec({0, 1, 2});
  CHECK((shift.array() == shift(0)).all());

  const auto hollow = load_fixture_complex("tri_unfilled.json");
  CHECK_FALSE(coboundary_witness(hollow, edges({1, 0, 0})).has_value());

  const auto zero = coboundary_witness(hollow, Cochain::zero(hollow, 1));
  REQUIRE(zero.has_value());
  CHECK(*zero == Cochain::zero(hollow, 0));

  CHECK_THROWS_AS(coboundary_witness(hollow, Cochain::zero(hollow, 0)), std::invalid_argument);
}

TEST_CASE("cochains built from simplex maps", "[cohomology]") {
  const auto filled = load_fixture_complex("tri_filled.json");
  const auto c = Cochain::from_map(filled, 1, {{{0, 1}, Rational(1)}, {{0, 2}, Rational(2)}, {{1, 2}, Rational(1)}});
  CHECK(c == edges({1, 2, 1}));
  CHECK(c.at(filled, {0, 2}) == 2);
  CHECK_THROWS_AS(Cochain::from_map(filled, 1, {{{0, 1}, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(Cochain::from_map(filled, 1, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}, {{0, 1, 2}, 1}}),
                  std::invalid_argument);
}

TEST_CASE("cohomology dimensions of the figure complexes", "[cohomology]") {
  struct Row {
    const char* file;
    std::size_t cocycles, coboundaries, h1;
  };
  for (const Row& row : {Row{"tri_filled.json", 2, 2, 0}, Row{"tri_unfilled.json", 3, 2, 1},
                         Row{"plugged.json", 3, 3, 0}, Row{"c4.json", 4, 3, 1}, Row{"c5.json", 5, 4, 1},
                         Row{"wedge.json", 6, 4, 2}}) {
    INFO(row.file);
    const auto d = cohomology_dims(load_fixture_complex(row.file), 1);
    CHECK(d.cocycles == row.cocycles);
    CHECK(d.coboundaries == row.coboundaries);
    CHECK(d.betti() == row.h1);
  }
}

TEST_CASE("second cohomology of the hollow tetrahedron", "[cohomology]") {
  const auto x = build_overlap_complex(load_fixture_system("ex4.json"), std::nullopt);
  CHECK(cohomology_dim(x, 1) == 0);
  CHECK(cohomology_dim(x, 2) == 1);
  const auto d = cohomology_dims(x, 2);
  CHECK(d.cochains == 4);
  CHECK(d.cocycles == 4);
  CHECK(d.coboundaries == 3);
}

TEST_CASE("cohomology needs enough of the complex", "[cohomology]") {
  const auto x = build_overlap_complex(load_fixture_system("ex1.json"), 1);
  CHECK_THROWS_AS(cohomology_dim(x, 1), std::invalid_argument);
  CHECK_THROWS_AS(cohomology_dim(load_fixture_complex("tri_filled.json"), 0), std::invalid_argument);
}

TEST_CASE("noncoboundary cocycle selection", "[cohomology]") {
  const auto hollow = load_fixture_complex("tri_unfilled.json");
  const auto f = noncoboundary_cocycle(hollow);
  REQUIRE(f.has_value());
  CHECK(f->values == vec({1, 0, 0}));

  CHECK_FALSE(noncoboundary_cocycle(load_fixture_complex("tri_filled.json")).has_value());
  CHECK_FALSE(noncoboundary_cocycle(load_fixture_complex("plugged.json")).has_value());
}

TEST_CASE("cohomology invariants on random complexes", "[cohomology][property]") {
  Engine rng(0x5eed'0006);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_complex(rng);

    // δf is always a cocycle, and its witness reproduces it.
    VectorQ fv(static_cast<Eigen::Index>(x.count(0)));
    for (Eigen::Index i = 0; i < fv.size(); ++i) fv(i) = Rational(std::uniform_int_distribution<long>(-5, 5)(rng));
    const auto df = coboundary(x, Cochain{0, fv});
    CHECK(is_cocycle(x, df));
    const auto w = coboundary_witness(x, df);
    REQUIRE(w.has_value());
    CHECK(coboundary(x, *w) == df);

    const auto h1 = cohomology_dim(x, 1);
    const auto hole = noncoboundary_cocycle(x);
    CHECK((h1 == 0) == !hole.has_value());
    if (hole) {
      CHECK(is_cocycle(x, *hole));
      CHECK_FALSE(coboundary_witness(x, *hole).has_value());
      for (Eigen::Index i = 0; i < hole->values.size(); ++i) CHECK(denominator(hole->values(i)) == 1);
    }

    // Relabel the vertices by a random permutation.
    std::vector<std::size_t> perm(x.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Simplex> moved;
    for (const auto& f : x.facets()) {
      Simplex s;
      for (auto v : f) s.push_back(perm[v]);
      std::sort(s.begin(), s.end());
      moved.push_back(std::move(s));
    }
    std::vector<std::string> labels(x.num_vertices());
    for (std::size_t v = 0; v < labels.size(); ++v) labels[perm[v]] = x.vertices()[v];
    const auto y = SimplicialComplex::closure(labels, moved);
    CHECK(y.counts() == x.counts());
    for (std::size_t k = 1; k < x.counts().size(); ++k) CHECK(cohomology_dim(y, k) == cohomology_dim(x, k));
  }
}
