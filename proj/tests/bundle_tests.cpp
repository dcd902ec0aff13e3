#include <algorithm>

#include "doctest.h"
#include "tvb/corpus.hpp"

using namespace tvb;

namespace {

Rational q(long long n) { return Rational(n); }

Fan fan_p3() {
  Fan f;
  f.dim = 3;
  f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
  f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return f;
}

}  // namespace

TEST_CASE("filtration value is the subspace of the smallest jump >= j") {
  Filtration f;
  f.steps = {{0, Subspace::full(2)},
             {2, Subspace::span(2, {{q(1), q(0)}})}};
  CHECK(f.at(-5, 2) == Subspace::full(2));
  CHECK(f.at(0, 2) == Subspace::full(2));
  CHECK(f.at(1, 2).dim() == 1);
  CHECK(f.at(2, 2).dim() == 1);
  CHECK(f.at(3, 2).dim() == 0);  // implicit zero tail
  CHECK(f.jump_values() == std::vector<long long>{0, 2});
}

TEST_CASE("filtration shape validation error codes") {
  ToricVectorBundle e = corpus_tp2();
  CHECK_NOTHROW(validate_filtration_shape(e));

  ToricVectorBundle bad = corpus_tp2();
  bad.filtrations[0].steps[0].second = bad.filtrations[0].steps[1].second;
  try {
    validate_filtration_shape(bad);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code == "filtration_not_full");
  }

  ToricVectorBundle order = corpus_tp2();
  // Full space first, but the second jump does not increase.
  order.filtrations[0].steps[1].first = order.filtrations[0].steps[0].first;
  try {
    validate_filtration_shape(order);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code == "filtration_order");
  }
}

TEST_CASE("tangent bundle of P2 splits with the known cone characters") {
  ToricVectorBundle e = corpus_tp2();
  BundleReport r = validate_bundle(e);
  CHECK(r.fan_report.smooth);
  CHECK(r.fan_report.complete);
  CHECK(r.compatible);
  REQUIRE(r.cone_characters.size() == 3);
  auto chars = [&](size_t ci) {
    std::vector<IVec> out;
    for (const auto& [u, m] : r.cone_characters[ci].characters)
      for (size_t i = 0; i < m; ++i) out.push_back(u);
    return out;
  };
  CHECK(chars(0) == std::vector<IVec>{{0, 1}, {1, 0}});
  CHECK(chars(1) == std::vector<IVec>{{0, -1}, {1, -1}});
  CHECK(chars(2) == std::vector<IVec>{{-1, 0}, {-1, 1}});
}

TEST_CASE("incompatible filtrations are reported naming the cone") {
  // Three distinct lines on the rays of one 3-dimensional cone cannot be
  // simultaneously split by a basis of C^2.
  ToricVectorBundle e;
  e.fan = fan_p3();
  e.rank = 2;
  const Subspace full = Subspace::full(2);
  auto line = [&](long long a, long long b) {
    return Subspace::span(2, {{q(a), q(b)}});
  };
  Subspace ls[4] = {line(1, 0), line(0, 1), line(1, 1), line(1, 0)};
  for (size_t i = 0; i < 4; ++i)
    e.filtrations.push_back({{{0, full}, {1, ls[i]}}});
  try {
    (void)local_characters(e, 0);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code == "incompatible");
    CHECK(std::string(err.what()).find("cone") != std::string::npos);
  }
  BundleReport r = validate_bundle(e);
  CHECK(!r.compatible);
  CHECK(!r.failure.empty());
}

TEST_CASE("h0 of the tangent bundle of P2 is 8") {
  CHECK(h0_dim(corpus_tp2()) == 8);
}

TEST_CASE("line bundles and direct sums on P1") {
  Fan f = fan_p1();
  for (long long a = 0; a <= 3; ++a) {
    ToricVectorBundle l = line_bundle(f, EqDivisor({a, 0}));
    CHECK(h0_dim(l) == a + 1);
  }
  ToricVectorBundle s =
      direct_sum(line_bundle(f, EqDivisor({1, 0})), line_bundle(f, EqDivisor({2, 0})));
  CHECK(s.rank == 2);
  CHECK(h0_dim(s) == 2 + 3);
}

TEST_CASE("twist shifts jumps by the divisor") {
  ToricVectorBundle e = corpus_tp2();
  ToricVectorBundle t = twist(e, EqDivisor({1, -2, 0}));
  for (size_t r = 0; r < 3; ++r) {
    auto j0 = e.filtrations[r].jump_values();
    auto j1 = t.filtrations[r].jump_values();
    long long shift = (r == 0) ? 1 : (r == 1) ? -2 : 0;
    REQUIRE(j0.size() == j1.size());
    for (size_t i = 0; i < j0.size(); ++i) CHECK(j1[i] == j0[i] + shift);
  }
  // Twisting by zero is the identity.
  CHECK(twist(e, EqDivisor::zero(e.fan)) == e);
}

TEST_CASE("sym_power dims agree with tensor powers cut to symmetric part") {
  // S^2 subspace dims of the rank-3 bundle frozen from the tensor oracle.
  ToricVectorBundle e = corpus_example_big();
  ToricVectorBundle s2 = sym_power(e, 2);
  CHECK(s2.rank == 6);
  auto dims = [&](size_t ray, long long lo, long long hi) {
    std::vector<size_t> out;
    for (long long j = lo; j <= hi; ++j)
      out.push_back(s2.filtrations[ray].at(j, 6).dim());
    return out;
  };
  CHECK(dims(0, 0, 5) == std::vector<size_t>{6, 5, 4, 2, 1, 0});
  CHECK(dims(1, -2, 3) == std::vector<size_t>{6, 5, 4, 2, 1, 0});
  CHECK(dims(2, -2, 3) == std::vector<size_t>{6, 5, 4, 2, 1, 0});
}

TEST_CASE("sym_power of a split bundle has binomial rank and additive jumps") {
  Fan f = fan_p1();
  ToricVectorBundle s =
      direct_sum(line_bundle(f, EqDivisor({1, 0})), line_bundle(f, EqDivisor({0, 1})));
  ToricVectorBundle s3 = sym_power(s, 3);
  CHECK(s3.rank == 4);
  // S^3(O(1) + O(1)) = 4 x O(3): 16 sections.
  CHECK(h0_dim(s3) == 16);
}

TEST_CASE("frobenius pullback scales jumps") {
  ToricVectorBundle e = corpus_tp2();
  ToricVectorBundle f = frobenius_pullback(e, 3);
  for (size_t r = 0; r < 3; ++r) {
    auto j0 = e.filtrations[r].jump_values();
    auto j1 = f.filtrations[r].jump_values();
    REQUIRE(j0.size() == j1.size());
    for (size_t i = 0; i < j0.size(); ++i) CHECK(j1[i] == 3 * j0[i]);
  }
  CHECK(h0_dim(frobenius_pullback(e, 1)) == h0_dim(e));
}

TEST_CASE("h0_component matches the support region accounting") {
  ToricVectorBundle e = corpus_tp2();
  long long total = 0;
  for (const auto& u : h0_support_region(e)) total += h0_component(e, u).dim();
  CHECK(total == h0_dim(e));
}

TEST_CASE("change_basis preserves section dimensions") {
  ToricVectorBundle e = corpus_tp2();
  QMat g = {{q(1), q(2)}, {q(0), q(1)}};
  ToricVectorBundle f = change_basis(e, g);
  CHECK(h0_dim(f) == h0_dim(e));
  BundleReport r = validate_bundle(f);
  CHECK(r.compatible);
}
