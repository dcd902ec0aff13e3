#pragma once

#include <map>

#include "tvb/polytope.hpp"

namespace tvb {

/// Complete smooth fan support: rays are primitive, every maximal cone is a
/// lattice basis. Cones refer to rays by index.
struct Fan {
  size_t dim = 0;
  std::vector<IVec> rays;
  std::vector<std::vector<size_t>> max_cones;  // sorted ray indices

  size_t n_rays() const { return rays.size(); }

  bool operator==(const Fan& o) const = default;
};

struct FanReport {
  bool smooth = false;
  bool complete = false;
};

/// Torus-invariant divisor sum a_rho D_rho, one coefficient per ray.
struct EqDivisor {
  std::vector<long long> coeffs;

  EqDivisor() = default;
  explicit EqDivisor(std::vector<long long> c) : coeffs(std::move(c)) {}
  static EqDivisor zero(const Fan& fan) {
    return EqDivisor(std::vector<long long>(fan.n_rays(), 0));
  }

  EqDivisor operator+(const EqDivisor& o) const;
  EqDivisor operator-() const;
  EqDivisor operator*(long long k) const;
  bool operator==(const EqDivisor& o) const = default;
};

/// Per maximal cone, the character m_sigma with <m_sigma, rho> = a_rho on
/// its rays (positive sign convention: no minus in front of a_rho).
struct CartierData {
  std::vector<IVec> characters;  // indexed like fan.max_cones
};

/// Codimension-one cone separating two maximal cones. `normal` is the
/// primitive generator of tau-perp in the character lattice, positive on
/// `left`.
struct Wall {
  std::vector<size_t> tau;  // ray indices, sorted
  size_t left = 0;          // index into fan.max_cones
  size_t right = 0;
  IVec normal;
};

FanReport validate_fan(const Fan& fan);
void require_smooth_complete(const Fan& fan);

std::vector<Wall> walls(const Fan& fan);

CartierData cartier_data(const Fan& fan, const EqDivisor& d);

HPolytope polytope(const Fan& fan, const EqDivisor& d);

struct DivisorPositivity {
  bool nef = false;
  bool ample = false;
};

DivisorPositivity divisor_positivity(const Fan& fan, const EqDivisor& d);

// Solves <u, rays[i]> = values[i] over the rays of max cone `cone`;
// integral for smooth cones.
IVec solve_character(const Fan& fan, const std::vector<size_t>& cone,
                     const std::vector<long long>& values);

}  // namespace tvb
