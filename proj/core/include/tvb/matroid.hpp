#pragma once

#include "tvb/bundle.hpp"

namespace tvb {

/// Element of the intersection lattice L(E): a subspace V together with its
/// divisor D_V (per ray, the largest jump whose filtration step contains V).
struct LatticeElement {
  Subspace space;
  EqDivisor divisor;
};

/// All intersections of filtration subspaces, zero excluded, sorted by
/// (dimension, lexicographic basis).
struct IntersectionLattice {
  std::vector<LatticeElement> elements;
};

/// A matroid ground-set vector with its divisor and polytope
/// P = { u : <u, rho> <= divisor coefficient }.
struct ParliamentEntry {
  QVec vector;
  EqDivisor divisor;
  HPolytope polytope;
  bool from_seed = false;  // supplied through the seed list of build_matroid
};

/// The representable matroid of a bundle: canonical ground vectors spanning
/// every lattice element, each carrying a divisor and polytope.
struct Matroid {
  size_t ambient = 0;  // = bundle rank
  IntersectionLattice lattice;
  std::vector<ParliamentEntry> ground;

  bool is_independent(const std::vector<size_t>& subset) const;
  size_t subset_rank(const std::vector<size_t>& subset) const;
  // Minimal dependent subsets, each sorted, in increasing size then lex.
  std::vector<std::vector<size_t>> circuits() const;
};

IntersectionLattice intersection_lattice(const ToricVectorBundle& e);

// Ground vectors are deterministic: lattice elements are visited in
// increasing dimension and each is completed by complement_in with the
// given seeds preferred.
Matroid build_matroid(const ToricVectorBundle& e, const QMat& seeds = {});

std::vector<ParliamentEntry> parliament(const ToricVectorBundle& e);

// Rank of the ground vectors whose polytope contains u; equals
// dim h0_component(e, u).
long long h0_dim_via_parliament(const Matroid& m, const IVec& u);
long long h0_dim_via_parliament(const ToricVectorBundle& e, const IVec& u);

/// Cayley lift of the parliament: the fan rays acquire Z^s coordinates and
/// a reflexive simplex worth of extra rays; the polytope of the divisor O_F
/// fibers over the simplex with the parliament polytopes as slices.
struct CayleyData {
  size_t s = 0;                   // |ground| - 1
  std::vector<IVec> lifted_rays;  // fan rays lifted to Z^(n+s), ray order
  std::vector<IVec> simplex_rays; // w_0 = -sum e_i, then w_1..w_s = e_i
  // O_F = D_{w_0} + sum_rho a_{0,rho} D_rho'; coefficients ordered as
  // lifted_rays then simplex_rays.
  std::vector<long long> of_coeffs;
  HPolytope p_of;                 // polytope of O_F in Q^(n+s)

  // Slice of p_of over the i-th simplex vertex (0 for w_0's opposite
  // vertex, i.e. x = 0; -e_i for entry i), projected to Q^n. Equals the
  // polytope of ground entry i.
  HPolytope fiber(size_t i) const;
};

// Requires a nonempty ground set; verifies each fiber slice matches the
// corresponding parliament polytope.
CayleyData cayley_data(const Matroid& m, const Fan& fan);

}  // namespace tvb
