#pragma once

#include <string>

#include "tvb/cox.hpp"

namespace tvb {

std::string format_ivec(const IVec& v);
std::string format_qvec(const QVec& v);
std::string format_divisor(const EqDivisor& d);
std::string format_polytope(const HPolytope& p);
std::string format_relation(const CoxRelation& r);

// SVG 1.1 figure of a two-dimensional parliament: each polytope with its
// own stroke color, lattice points as dots, the origin marked.
std::string render_parliament_svg(const std::vector<ParliamentEntry>& entries);

}  // namespace tvb
