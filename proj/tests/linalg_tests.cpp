#include "doctest.h"
#include "tvb/linalg.hpp"

using namespace tvb;

namespace {
Rational q(long long n, long long d = 1) { return Rational(n) / d; }
Rational dotq(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
}  // namespace

TEST_CASE("rref canonical form") {
  Subspace a = Subspace::span(3, {{q(2), q(4), q(6)}, {q(1), q(1), q(1)}});
  Subspace b = Subspace::span(3, {{q(1), q(3), q(5)}, {q(0), q(1), q(2)}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  // Leading entries are 1 and pivots are cleared upward.
  CHECK(a.basis()[0][0] == 1);
  CHECK(a.basis()[1][0] == 0);
}

TEST_CASE("rank and nullspace") {
  QMat m = {{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(0), q(1), q(1)}};
  CHECK(rank(m) == 2);
  Subspace ns = nullspace(m, 3);
  CHECK(ns.dim() == 1);
  for (const auto& row : m)
    for (const auto& v : ns.basis()) CHECK(dotq(row, v) == 0);
}

TEST_CASE("intersect sum member contains") {
  Subspace xy = Subspace::span(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
  Subspace yz = Subspace::span(3, {{q(0), q(1), q(0)}, {q(0), q(0), q(1)}});
  Subspace y = intersect(xy, yz);
  CHECK(y.dim() == 1);
  CHECK(member({q(0), q(5), q(0)}, y));
  CHECK(sum(xy, yz) == Subspace::full(3));
  CHECK(contains(xy, y));
  CHECK(!contains(y, xy));
  CHECK(intersect(xy, Subspace::zero(3)).dim() == 0);
}

TEST_CASE("dimension formula") {
  Subspace v = Subspace::span(4, {{q(1), q(2), q(0), q(1)}, {q(0), q(1), q(1), q(0)}});
  Subspace w = Subspace::span(4, {{q(1), q(0), q(0), q(0)}, {q(0), q(0), q(1), q(1)}});
  CHECK(intersect(v, w).dim() + sum(v, w).dim() == v.dim() + w.dim());
}

TEST_CASE("complement_in extends with preferred seeds") {
  Subspace full = Subspace::full(3);
  Subspace line = Subspace::span(3, {{q(1), q(1), q(0)}});
  QMat seeds = {{q(0), q(1), q(1)}, {q(1), q(1), q(1)}};
  auto ext = complement_in(full, line, seeds);
  CHECK(ext.size() == 2);
  // Both seeds are usable, so both are chosen (in order).
  CHECK(ext[0] == seeds[0]);
  CHECK(ext[1] == seeds[1]);
  QMat all = line.basis();
  for (const auto& r : ext) all.push_back(r);
  CHECK(rank(all) == 3);
}

TEST_CASE("solve and coordinates") {
  QMat m = {{q(1), q(1)}, {q(1), q(-1)}};
  QVec rhs = {q(3), q(1)};
  QVec x = solve_square(m, rhs);
  CHECK(x == QVec{q(2), q(1)});

  Subspace s = Subspace::span(3, {{q(1), q(0), q(1)}, {q(0), q(1), q(1)}});
  auto c = coordinates_in(s.basis(), {q(2), q(3), q(5)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK(!coordinates_in(s.basis(), {q(1), q(0), q(0)}).has_value());
}

TEST_CASE("annihilator is a perfect pairing") {
  Subspace v = Subspace::span(4, {{q(1), q(2), q(3), q(4)}, {q(0), q(0), q(1), q(2)}});
  Subspace ann = annihilator(v);
  CHECK(ann.dim() == 2);
  for (const auto& a : ann.basis())
    for (const auto& b : v.basis()) CHECK(dotq(a, b) == 0);
  CHECK(annihilator(ann) == v);
}

TEST_CASE("compare is consistent with equality") {
  Subspace a = Subspace::span(2, {{q(1), q(0)}});
  Subspace b = Subspace::span(2, {{q(0), q(1)}});
  CHECK(compare(a, a) == std::strong_ordering::equal);
  CHECK((compare(a, b) == std::strong_ordering::less ||
         compare(b, a) == std::strong_ordering::less));
}
