#pragma once

#include <random>

#include "tvb/bundle.hpp"

namespace tvb {

Fan fan_p1();
Fan fan_p2();          // rays e1, e2, -e1-e2
Fan fan_p1p1();        // rays e1, -e1, e2, -e2
Fan fan_surface6(); // rays (1,0),(1,1),(1,2),(0,1),(-1,0),(0,-1), 6 cones

// Tangent bundle of P^2.
ToricVectorBundle corpus_tp2();
// O(H1) + O(H2-H1) on P^1 x P^1: big, but no parliament polytope (nor any
// Minkowski sum of them) is full-dimensional.
ToricVectorBundle corpus_p1p1_bignominkowski();
// Rank-3 bundle on P^2 with trivial degree-1 parliament divisors whose S^2
// matroid acquires a fresh vector of divisor class O(1). Built from fixed
// moment-curve vectors; genericity is re-verified on construction.
ToricVectorBundle corpus_example_big();
// Ample rank-2 surface bundle E_k whose k-th symmetric power is not
// globally generated.
ToricVectorBundle corpus_surface(long long k);

std::vector<std::pair<std::string, ToricVectorBundle>> corpus_all();

// Seeded generators for property tests; every result is a valid bundle.
ToricVectorBundle random_rank2_bundle(const Fan& fan, std::mt19937& rng);
ToricVectorBundle random_split_bundle(const Fan& fan, size_t rank,
                                      std::mt19937& rng);
EqDivisor random_divisor(const Fan& fan, std::mt19937& rng);

}  // namespace tvb
