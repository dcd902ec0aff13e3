#include <algorithm>

#include "doctest.h"
#include "tvb/polytope.hpp"

using namespace tvb;

namespace {
HPolytope triangle() {
  // x <= 1, y <= 0, -x - y <= 0: vertices (1,0), (0,0), (1,-1).
  HPolytope p;
  p.dim = 2;
  p.inequalities = {{{1, 0}, 1}, {{0, 1}, 0}, {{-1, -1}, 0}};
  return p;
}
}  // namespace

TEST_CASE("containment") {
  HPolytope p = triangle();
  CHECK(p.contains(IVec{0, 0}));
  CHECK(p.contains(IVec{1, -1}));
  CHECK(!p.contains(IVec{2, 0}));
  CHECK(p.contains(QVec{Rational(1, 2), Rational(-1, 4)}));
}

TEST_CASE("feasibility via exact elimination") {
  HPolytope p = triangle();
  CHECK(is_feasible(p));
  CHECK(is_strictly_feasible(p));

  HPolytope point;
  point.dim = 2;
  point.inequalities = {{{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, 0}};
  CHECK(is_feasible(point));
  CHECK(!is_strictly_feasible(point));

  HPolytope empty;
  empty.dim = 2;
  empty.inequalities = {{{1, 0}, 0}, {{-1, 0}, -1}};
  CHECK(!is_feasible(empty));
}

TEST_CASE("lattice points of the standard triangle") {
  auto pts = lattice_points(triangle());
  std::vector<IVec> expect = {{0, 0}, {1, -1}, {1, 0}};
  CHECK(pts == expect);
}

TEST_CASE("lattice points are sorted and deduplicated") {
  HPolytope sq;
  sq.dim = 2;
  sq.inequalities = {{{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 1}, {{0, -1}, 0}};
  auto pts = lattice_points(sq);
  CHECK(pts.size() == 4);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("polytope dimension") {
  CHECK(polytope_dim(triangle()) == 2);

  HPolytope seg;
  seg.dim = 2;
  seg.inequalities = {{{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, 0}};
  CHECK(polytope_dim(seg) == 1);

  HPolytope point;
  point.dim = 2;
  point.inequalities = {{{1, 0}, 0}, {{-1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, 0}};
  CHECK(polytope_dim(point) == 0);

  HPolytope empty;
  empty.dim = 2;
  empty.inequalities = {{{1, 0}, 0}, {{-1, 0}, -1}};
  CHECK(polytope_dim(empty) == -1);
}

TEST_CASE("edge directions at a vertex") {
  auto dirs = edge_directions_at(triangle(), {1, 0});
  std::vector<IVec> expect = {{-1, 0}, {0, -1}};
  std::sort(dirs.begin(), dirs.end());
  CHECK(dirs == expect);
  CHECK_THROWS_AS((void)edge_directions_at(triangle(), {5, 5}), Error);
}

TEST_CASE("make_primitive") {
  CHECK(make_primitive({4, -6}) == IVec{2, -3});
  CHECK(make_primitive({0, 0}) == IVec{0, 0});
  CHECK(make_primitive({0, -7}) == IVec{0, -1});
}

TEST_CASE("vertices of a 2d polytope") {
  auto v = vertices_2d(triangle());
  std::vector<QVec> expect = {{Rational(0), Rational(0)},
                              {Rational(1), Rational(-1)},
                              {Rational(1), Rational(0)}};
  std::sort(v.begin(), v.end());
  CHECK(v == expect);
}
