#include <algorithm>

#include "doctest.h"
#include "tvb/corpus.hpp"
#include "tvb/matroid.hpp"

using namespace tvb;

namespace {

std::vector<IVec> sorted_lattice_points(const HPolytope& p) {
  auto pts = lattice_points(p);
  std::sort(pts.begin(), pts.end());
  return pts;
}

long long coeff_sum(const EqDivisor& d) {
  long long s = 0;
  for (long long c : d.coeffs) s += c;
  return s;
}

}  // namespace

TEST_CASE("intersection lattice of the tangent bundle of P2") {
  auto lat = intersection_lattice(corpus_tp2());
  // Three distinct lines plus the full space; zero is excluded.
  REQUIRE(lat.elements.size() == 4);
  CHECK(lat.elements[0].space.dim() == 1);
  CHECK(lat.elements[1].space.dim() == 1);
  CHECK(lat.elements[2].space.dim() == 1);
  CHECK(lat.elements[3].space.dim() == 2);
}

TEST_CASE("parliament of the tangent bundle of P2") {
  auto entries = parliament(corpus_tp2());
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].vector == QVec{Rational(0), Rational(1)});
  CHECK(entries[1].vector == QVec{Rational(1), Rational(0)});
  CHECK(entries[2].vector == QVec{Rational(1), Rational(1)});
  CHECK(entries[0].divisor == EqDivisor({0, 1, 0}));
  CHECK(entries[1].divisor == EqDivisor({1, 0, 0}));
  CHECK(entries[2].divisor == EqDivisor({0, 0, 1}));
  CHECK(sorted_lattice_points(entries[0].polytope) ==
        std::vector<IVec>{{-1, 1}, {0, 0}, {0, 1}});
  CHECK(sorted_lattice_points(entries[1].polytope) ==
        std::vector<IVec>{{0, 0}, {1, -1}, {1, 0}});
  CHECK(sorted_lattice_points(entries[2].polytope) ==
        std::vector<IVec>{{-1, 0}, {0, -1}, {0, 0}});
}

TEST_CASE("matroid rank functions and circuits") {
  Matroid m = build_matroid(corpus_tp2());
  REQUIRE(m.ground.size() == 3);
  CHECK(m.is_independent({0, 1}));
  CHECK(m.is_independent({0, 2}));
  CHECK(m.is_independent({1, 2}));
  CHECK(!m.is_independent({0, 1, 2}));
  CHECK(m.subset_rank({0, 1, 2}) == 2);
  CHECK(m.circuits() == std::vector<std::vector<size_t>>{{0, 1, 2}});
}

TEST_CASE("h0 via parliament equals the filtration computation") {
  for (const auto& [name, e] : corpus_all()) {
    CAPTURE(name);
    Matroid m = build_matroid(e);
    for (const auto& u : h0_support_region(e))
      CHECK(h0_dim_via_parliament(m, u) == h0_component(e, u).dim());
    // And outside the region sections vanish.
    CHECK(h0_dim_via_parliament(m, IVec(e.fan.dim, 1000)) == 0);
  }
}

TEST_CASE("parliament of the big example has trivial divisor classes") {
  auto entries = parliament(corpus_example_big());
  REQUIRE(entries.size() == 6);
  for (const auto& en : entries) {
    CHECK(coeff_sum(en.divisor) == 0);  // class in Pic(P2) = Z
    CHECK(polytope_dim(en.polytope) == 0);
    CHECK(lattice_points(en.polytope).size() == 1);
  }
}

TEST_CASE("build_matroid prefers supplied seeds") {
  ToricVectorBundle e = corpus_tp2();
  QMat seeds = {{Rational(1), Rational(1)}, {Rational(1), Rational(0)},
                {Rational(0), Rational(1)}};
  Matroid m = build_matroid(e, seeds);
  for (const auto& g : m.ground) CHECK(g.from_seed);
}

TEST_CASE("cayley data of the tangent bundle of P2") {
  ToricVectorBundle e = corpus_tp2();
  Matroid m = build_matroid(e);
  CayleyData c = cayley_data(m, e.fan);  // verifies fiber slices internally
  CHECK(c.s == 2);
  REQUIRE(c.lifted_rays.size() == 3);
  CHECK(c.lifted_rays[0] == IVec{1, 0, 1, 0});
  CHECK(c.lifted_rays[1] == IVec{0, 1, -1, -1});
  CHECK(c.lifted_rays[2] == IVec{-1, -1, 0, 1});
  CHECK(c.simplex_rays ==
        std::vector<IVec>{{0, 0, -1, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  for (size_t i = 0; i < m.ground.size(); ++i)
    CHECK(sorted_lattice_points(c.fiber(i)) ==
          sorted_lattice_points(m.ground[i].polytope));
}
