#pragma once

#include "tvb/rational.hpp"

namespace tvb {

/// H-representation: each inequality reads <x, normal> <= bound.
struct HPolytope {
  size_t dim = 0;
  std::vector<std::pair<IVec, long long>> inequalities;

  bool contains(const IVec& point) const;
  bool contains(const QVec& point) const;
};

// All integer points; throws if the polytope is unbounded.
std::vector<IVec> lattice_points(const HPolytope& p);

// -1 for empty, otherwise the dimension of the affine hull, decided by
// Fourier-Motzkin elimination on the (strict) systems.
int polytope_dim(const HPolytope& p);

bool is_feasible(const HPolytope& p);

// Feasibility of {<x,n_i> < b_i for all i}.
bool is_strictly_feasible(const HPolytope& p);

// Vertices of a 2-dimensional polytope (or the endpoints/point of a lower
// dimensional one), in counter-clockwise order. Requires dim == 2 ambient.
std::vector<QVec> vertices_2d(const HPolytope& p);

// Primitive directions of the edges emanating from `vertex` (which must lie
// in p). A direction appears once, as a primitive integer vector.
std::vector<IVec> edge_directions_at(const HPolytope& p, const IVec& vertex);

IVec make_primitive(const IVec& v);

}  // namespace tvb
