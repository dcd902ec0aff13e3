#include "tvb/corpus.hpp"

#include "tvb/linalg.hpp"

namespace tvb {

namespace {

Filtration two_step(long long a, const Subspace& full, long long b,
                    const Subspace& line) {
  Filtration f;
  f.steps.push_back({a, full});
  f.steps.push_back({b, line});
  return f;
}

Subspace line2(long long x, long long y) {
  return Subspace::span(2, {{Rational(x), Rational(y)}});
}

}  // namespace

Fan fan_p1() {
  Fan f;
  f.dim = 1;
  f.rays = {{1}, {-1}};
  f.max_cones = {{0}, {1}};
  return f;
}

Fan fan_p2() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.max_cones = {{0, 1}, {0, 2}, {1, 2}};
  return f;
}

Fan fan_p1p1() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  f.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return f;
}

Fan fan_surface6() {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {1, 1}, {1, 2}, {0, 1}, {-1, 0}, {0, -1}};
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  return f;
}

ToricVectorBundle corpus_tp2() {
  ToricVectorBundle e;
  e.fan = fan_p2();
  e.rank = 2;
  const Subspace full = Subspace::full(2);
  for (const auto& ray : e.fan.rays)
    e.filtrations.push_back(two_step(0, full, 1, line2(ray[0], ray[1])));
  return e;
}

ToricVectorBundle corpus_p1p1_bignominkowski() {
  ToricVectorBundle e;
  e.fan = fan_p1p1();
  e.rank = 2;
  const Subspace full = Subspace::full(2);
  e.filtrations.resize(4);
  e.filtrations[0] = two_step(-1, full, 1, line2(1, 0));
  e.filtrations[1].steps.push_back({0, full});
  e.filtrations[2] = two_step(0, full, 1, line2(0, 1));
  e.filtrations[3].steps.push_back({0, full});
  return e;
}

ToricVectorBundle corpus_example_big() {
  // Moment-curve points t -> (1, t, t^2) at t = 2, 3, 5 (the v_i) and
  // 7, 11, 13 (second spanning vectors of the planes W_i).
  auto moment = [](long long t) {
    return QVec{Rational(1), Rational(t), Rational(t * t)};
  };
  QMat pts = {moment(2), moment(3), moment(5), moment(7), moment(11), moment(13)};
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      for (size_t c = b + 1; c < pts.size(); ++c)
        if (rank({pts[a], pts[b], pts[c]}) != 3)
          throw Error("internal", "corpus_example_big: genericity violated");

  ToricVectorBundle e;
  e.fan.dim = 2;
  e.fan.rays = {{-1, -1}, {1, 0}, {0, 1}};
  e.fan.max_cones = {{0, 1}, {0, 2}, {1, 2}};
  e.rank = 3;
  const Subspace full = Subspace::full(3);
  auto w = [&](size_t i) { return Subspace::span(3, {pts[i], pts[i + 3]}); };
  auto v = [&](size_t i) { return Subspace::span(3, {pts[i]}); };
  e.filtrations.resize(3);
  e.filtrations[0].steps = {{0, full}, {1, w(0)}, {2, v(0)}};
  e.filtrations[1].steps = {{-1, full}, {0, w(1)}, {1, v(1)}};
  e.filtrations[2].steps = {{-1, full}, {0, w(2)}, {1, v(2)}};
  return e;
}

ToricVectorBundle corpus_surface(long long k) {
  if (k < 1) throw Error("bad_degree", "corpus_surface: k must be >= 1");
  ToricVectorBundle e;
  e.fan = fan_surface6();
  e.rank = 2;
  const Subspace full = Subspace::full(2);
  const Subspace q = line2(1, 0), p5 = line2(0, 1), p6 = line2(1, 1);
  const long long a[6] = {1, -2, 3 * k - 6, 6 * k - 5, 0, 6 - 6 * k};
  const long long b[6] = {4, 6 * k - 1, 12 * k - 5, 6 * k - 3, 9 * k - 3, 4};
  const Subspace* p[6] = {&q, &q, &q, &q, &p5, &p6};
  for (size_t i = 0; i < 6; ++i)
    e.filtrations.push_back(two_step(a[i], full, b[i], *p[i]));
  return e;
}

std::vector<std::pair<std::string, ToricVectorBundle>> corpus_all() {
  return {{"tp2", corpus_tp2()},
          {"p1p1_bignominkowski", corpus_p1p1_bignominkowski()},
          {"example_big", corpus_example_big()},
          {"surface_1", corpus_surface(1)},
          {"surface_2", corpus_surface(2)},
          {"surface_3", corpus_surface(3)}};
}

ToricVectorBundle random_rank2_bundle(const Fan& fan, std::mt19937& rng) {
  std::uniform_int_distribution<long long> jump(-2, 2), gap(1, 3);
  std::uniform_int_distribution<int> which(0, 4);
  const Subspace lines[5] = {line2(1, 0), line2(0, 1), line2(1, 1),
                             line2(1, -1), line2(1, 2)};
  ToricVectorBundle e;
  e.fan = fan;
  e.rank = 2;
  const Subspace full = Subspace::full(2);
  for (size_t i = 0; i < fan.n_rays(); ++i) {
    long long a = jump(rng);
    e.filtrations.push_back(two_step(a, full, a + gap(rng), lines[which(rng)]));
  }
  return e;
}

ToricVectorBundle random_split_bundle(const Fan& fan, size_t rank,
                                      std::mt19937& rng) {
  std::uniform_int_distribution<long long> coeff(-2, 2);
  ToricVectorBundle e;
  for (size_t r = 0; r < rank; ++r) {
    EqDivisor d = EqDivisor::zero(fan);
    for (auto& c : d.coeffs) c = coeff(rng);
    ToricVectorBundle l = line_bundle(fan, d);
    e = r == 0 ? l : direct_sum(e, l);
  }
  // Random unimodular change of basis: a few elementary shears.
  QMat g(rank, QVec(rank, 0));
  for (size_t i = 0; i < rank; ++i) g[i][i] = 1;
  std::uniform_int_distribution<size_t> row(0, rank - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int step = 0; step < 4; ++step) {
    size_t i = row(rng), j = row(rng);
    if (i == j) continue;
    Rational s = sign(rng) ? 1 : -1;
    for (size_t c = 0; c < rank; ++c) g[i][c] += s * g[j][c];
  }
  return change_basis(e, g);
}

EqDivisor random_divisor(const Fan& fan, std::mt19937& rng) {
  std::uniform_int_distribution<long long> coeff(-3, 3);
  EqDivisor d = EqDivisor::zero(fan);
  for (auto& c : d.coeffs) c = coeff(rng);
  return d;
}

}  // namespace tvb
