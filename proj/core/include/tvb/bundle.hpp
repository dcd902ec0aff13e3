#pragma once

#include "tvb/fan.hpp"
#include "tvb/linalg.hpp"
#include "tvb/sym.hpp"

namespace tvb {

/// One decreasing Klyachko filtration: (jump, subspace) pairs with jumps
/// strictly increasing and subspaces strictly decreasing. The value at j is
/// the subspace of the smallest recorded jump >= j; the full space below the
/// first jump is recorded explicitly, the zero space above the last jump is
/// implicit.
struct Filtration {
  std::vector<std::pair<long long, Subspace>> steps;

  const Subspace& at(long long j, size_t rank) const;
  long long min_jump() const { return steps.front().first; }
  long long max_jump() const { return steps.back().first; }
  std::vector<long long> jump_values() const;

  bool operator==(const Filtration& o) const = default;
};

struct ToricVectorBundle {
  Fan fan;
  size_t rank = 0;
  std::vector<Filtration> filtrations;  // one per ray

  // E^rho(j).
  const Subspace& filtration_at(size_t ray, long long j) const {
    return filtrations[ray].at(j, rank);
  }

  bool operator==(const ToricVectorBundle& o) const = default;
};

// Checks filtration shape invariants (strict decrease, full space first).
void validate_filtration_shape(const ToricVectorBundle& e);

/// Splitting characters of E restricted to one maximal cone, with
/// multiplicities; sorted lexicographically by character.
struct ConeCharacters {
  std::vector<std::pair<IVec, size_t>> characters;

  size_t total() const;
  std::vector<IVec> expanded() const;  // with multiplicity
};

struct BundleReport {
  FanReport fan_report;
  bool compatible = false;
  std::vector<ConeCharacters> cone_characters;  // indexed like max_cones
  std::string failure;                          // offending cone, when incompatible
};

BundleReport validate_bundle(const ToricVectorBundle& e);

// The character multiset on one maximal cone; throws naming the cone if the
// filtrations are incompatible there.
ConeCharacters local_characters(const ToricVectorBundle& e, size_t cone_index);

ToricVectorBundle twist(const ToricVectorBundle& e, const EqDivisor& d);
ToricVectorBundle tensor(const ToricVectorBundle& e, const ToricVectorBundle& f);
ToricVectorBundle sym_power(const ToricVectorBundle& e, size_t k);
ToricVectorBundle frobenius_pullback(const ToricVectorBundle& e, long long k);

// H^0(X, E)_u as a subspace of the fiber.
Subspace h0_component(const ToricVectorBundle& e, const IVec& u);
long long h0_dim(const ToricVectorBundle& e);

// Characters u that can support a nonzero graded piece:
// { u : <u, rho> <= max jump of rho for all rho }.
std::vector<IVec> h0_support_region(const ToricVectorBundle& e);

// Rank-1 bundle with the given jump divisor.
ToricVectorBundle line_bundle(const Fan& fan, const EqDivisor& d);

ToricVectorBundle direct_sum(const ToricVectorBundle& a, const ToricVectorBundle& b);

// Applies an invertible change of basis g (rows = images of basis vectors,
// acting by v -> v g) to every filtration subspace.
ToricVectorBundle change_basis(const ToricVectorBundle& e, const QMat& g);

}  // namespace tvb
