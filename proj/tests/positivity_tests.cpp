#include <algorithm>
#include <random>

#include "doctest.h"
#include "tvb/corpus.hpp"
#include "tvb/positivity.hpp"

using namespace tvb;

namespace {

std::vector<long long> flat_degrees(const ToricVectorBundle& e) {
  std::vector<long long> out;
  for (const auto& s : all_curve_splittings(e))
    for (const auto& p : s.pairs) out.push_back(p.degree);
  return out;
}

}  // namespace

TEST_CASE("tangent bundle of P2 is positive in every sense") {
  ToricVectorBundle e = corpus_tp2();
  CHECK(is_nef(e));
  CHECK(is_ample(e));
  CHECK(is_globally_generated(e).generated);
  CHECK(is_very_ample(e));
  BigResult b = is_big(e, 1);
  CHECK(b.big);
  REQUIRE(b.witness.has_value());
  CHECK(b.witness->k == 1);
}

TEST_CASE("curve splitting of the tangent bundle of P2") {
  // On every invariant line T_P2 splits as O(2) + O(1).
  for (const auto& s : all_curve_splittings(corpus_tp2())) {
    REQUIRE(s.pairs.size() == 2);
    std::vector<long long> d = {s.pairs[0].degree, s.pairs[1].degree};
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<long long>{1, 2});
    for (const auto& p : s.pairs) {
      IVec scaled = s.wall.normal;
      for (auto& x : scaled) x *= p.degree;
      IVec diff(p.u_left.size());
      for (size_t i = 0; i < diff.size(); ++i)
        diff[i] = p.u_left[i] - p.u_right[i];
      CHECK(diff == scaled);
    }
  }
}

TEST_CASE("O(H1) + O(H2-H1) on P1xP1 is big but not nef") {
  ToricVectorBundle e = corpus_p1p1_bignominkowski();
  CHECK(!is_nef(e));
  CHECK(!is_ample(e));
  CHECK(!is_globally_generated(e).generated);
  CHECK(!is_big(e, 1).big);
  CHECK(!is_big(e, 2).big);
  BigResult b = is_big(e, 3);
  CHECK(b.big);
  REQUIRE(b.witness.has_value());
  CHECK(b.witness->k == 3);
  CHECK(b.witness->divisor == EqDivisor({1, 0, 1, 0}));
}

TEST_CASE("surface family wall degrees and global generation") {
  // Splitting degrees per wall, frozen from substituting the jump tables
  // into the twelve wall inequalities.
  const std::vector<std::vector<long long>> expected = {
      {1, 1, 2, 1, 2, 1, 1, 1, 7, 1, 10, 1},
      {1, 1, 5, 1, 5, 1, 1, 1, 13, 1, 19, 1},
      {1, 1, 8, 1, 8, 1, 1, 1, 19, 1, 28, 1},
  };
  for (long long k = 1; k <= 3; ++k) {
    CAPTURE(k);
    ToricVectorBundle e = corpus_surface(k);
    CHECK(is_nef(e));
    CHECK(is_ample(e));
    CHECK(flat_degrees(e) == expected[k - 1]);

    GGResult gg = is_globally_generated(sym_power(e, static_cast<size_t>(k)));
    CHECK(!gg.generated);
    REQUIRE(gg.failing_cones.size() >= 1);
    // The failing cone is spanned by the second and third rays.
    CHECK(e.fan.max_cones[gg.failing_cones[0]] == std::vector<size_t>{1, 2});
  }
}

TEST_CASE("ample implies nef implies gg polytope degrees nonnegative") {
  for (const auto& [name, e] : corpus_all()) {
    CAPTURE(name);
    if (is_ample(e)) CHECK(is_nef(e));
    if (is_very_ample(e)) CHECK(is_globally_generated(e).generated);
    if (is_globally_generated(e).generated) CHECK(is_nef(e));
  }
}

TEST_CASE("branched cover structure") {
  ToricVectorBundle e = corpus_tp2();
  BranchedCover c = branched_cover(e);
  CHECK(c.sheets.size() == e.fan.max_cones.size());
  for (const auto& s : c.sheets) CHECK(s.total() == e.rank);
  CHECK(c.gluings.size() == walls(e.fan).size());
}

TEST_CASE("concavity of the cover matches nef and ample") {
  for (const auto& [name, e] : corpus_all()) {
    CAPTURE(name);
    ConcavityVerdict v = concavity_check(branched_cover(e));
    CHECK(v.nef_like == is_nef(e));
    CHECK(v.strict == is_ample(e));
  }
  std::mt19937 rng(20240817);
  for (int i = 0; i < 20; ++i) {
    ToricVectorBundle e =
        random_rank2_bundle(i % 2 ? fan_p2() : fan_p1p1(), rng);
    ConcavityVerdict v = concavity_check(branched_cover(e));
    CHECK(v.nef_like == is_nef(e));
    CHECK(v.strict == is_ample(e));
  }
}

TEST_CASE("positivity of random split bundles matches their summands") {
  std::mt19937 rng(987654);
  for (int i = 0; i < 10; ++i) {
    Fan f = i % 2 ? fan_p2() : fan_p1p1();
    ToricVectorBundle e = random_split_bundle(f, 2, rng);
    // A split bundle is nef/ample iff every summand divisor is.
    auto splits = all_curve_splittings(e);
    bool nef = true, ample = true;
    for (const auto& s : splits)
      for (const auto& p : s.pairs) {
        nef = nef && p.degree >= 0;
        ample = ample && p.degree > 0;
      }
    CHECK(is_nef(e) == nef);
    CHECK(is_ample(e) == ample);
  }
}

TEST_CASE("frobenius pullback preserves positivity verdicts") {
  for (long long k : {2, 3}) {
    ToricVectorBundle e = corpus_tp2();
    ToricVectorBundle f = frobenius_pullback(e, k);
    CHECK(is_nef(f) == is_nef(e));
    CHECK(is_ample(f) == is_ample(e));
    CHECK(is_globally_generated(f).generated ==
          is_globally_generated(e).generated);
  }
}

TEST_CASE("gg witnesses cover each cone with independent ground vectors") {
  ToricVectorBundle e = corpus_tp2();
  Matroid m = build_matroid(e);
  GGResult r = is_globally_generated(e, m);
  REQUIRE(r.generated);
  REQUIRE(r.witnesses.size() == e.fan.max_cones.size());
  for (size_t ci = 0; ci < r.witnesses.size(); ++ci) {
    auto w = r.witnesses[ci];
    REQUIRE(w.size() == e.rank);
    std::sort(w.begin(), w.end());
    CHECK(std::unique(w.begin(), w.end()) == w.end());
    CHECK(m.is_independent(w));
  }
}
