#pragma once

#include "tvb/matroid.hpp"

namespace tvb {

/// Splitting of E restricted to the invariant curve of a wall: matched
/// character pairs of the two adjacent maximal cones with the twist degree
/// of each rank-1 summand.
struct CurveSplitting {
  Wall wall;
  struct Pair {
    IVec u_left;
    IVec u_right;
    long long degree = 0;  // u_left - u_right = degree * wall.normal
  };
  std::vector<Pair> pairs;
};

CurveSplitting curve_splitting(const ToricVectorBundle& e, const Wall& wall);
std::vector<CurveSplitting> all_curve_splittings(const ToricVectorBundle& e);

bool is_nef(const ToricVectorBundle& e);
bool is_ample(const ToricVectorBundle& e);

/// Global generation certificate: per maximal cone, either an assignment of
/// distinct, jointly independent ground vectors covering its characters, or
/// membership in failing_cones.
struct GGResult {
  bool generated = false;
  // witnesses[ci][j] = ground index assigned to the j-th expanded character
  // of cone ci; empty when the cone fails.
  std::vector<std::vector<size_t>> witnesses;
  std::vector<size_t> failing_cones;
};

GGResult is_globally_generated(const ToricVectorBundle& e);
GGResult is_globally_generated(const ToricVectorBundle& e, const Matroid& m);

bool is_very_ample(const ToricVectorBundle& e);

struct BigWitness {
  size_t k = 0;
  QVec vector;
  EqDivisor divisor;
};

struct BigResult {
  bool big = false;  // false means `unknown`, never a proof of non-bigness
  std::optional<BigWitness> witness;
};

BigResult is_big(const ToricVectorBundle& e, size_t k_max);

/// The branched cover of the fan: one linear sheet per (cone, character),
/// glued along walls by the curve-splitting matching.
struct BranchedCover {
  std::vector<ConeCharacters> sheets;    // indexed like fan.max_cones
  std::vector<CurveSplitting> gluings;   // indexed like walls(fan)
};

BranchedCover branched_cover(const ToricVectorBundle& e);

struct ConcavityVerdict {
  bool nef_like = false;  // concave across every wall
  bool strict = false;    // strictly concave across every wall
};

ConcavityVerdict concavity_check(const BranchedCover& cover);

}  // namespace tvb
