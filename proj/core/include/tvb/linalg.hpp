#pragma once

#include <compare>
#include <optional>

#include "tvb/rational.hpp"

namespace tvb {

/// A linear subspace of Q^d, stored as its reduced row-echelon basis.
/// Two Subspace values are equal as sets iff their matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(size_t ambient_dim, QMat rref_basis)
      : ambient_(ambient_dim), basis_(std::move(rref_basis)) {}

  static Subspace zero(size_t ambient_dim) { return Subspace(ambient_dim, {}); }
  static Subspace full(size_t ambient_dim);
  static Subspace span(size_t ambient_dim, const QMat& rows);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const QMat& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool operator==(const Subspace& o) const = default;

 private:
  size_t ambient_ = 0;
  QMat basis_;
};

// Canonical RREF of arbitrary rows; empty input gives the zero subspace.
Subspace rref(size_t ambient_dim, const QMat& rows);

// In-place row reduction; returns the rank. Rows end up in RREF with zero
// rows removed.
size_t rref_inplace(QMat& rows);

size_t rank(const QMat& rows);

Subspace intersect(const Subspace& v, const Subspace& w);
Subspace sum(const Subspace& v, const Subspace& w);
bool member(const QVec& x, const Subspace& v);
bool contains(const Subspace& big, const Subspace& small);

// Rows spanning {x : b * x = 0 for every basis row b of v}.
Subspace annihilator(const Subspace& v);

// Basis of the null space of m (vectors x with m x = 0), as a subspace of
// Q^cols.
Subspace nullspace(const QMat& m, size_t cols);

// Extends a basis of g to a basis of v. Picks greedily from `preferred`
// (those lying in v and independent of what was chosen so far), then from
// the RREF rows of v in pivot order. Throws if g is not contained in v.
std::vector<QVec> complement_in(const Subspace& v, const Subspace& g,
                                const std::vector<QVec>& preferred);

// Solves a x = b for square nonsingular a; throws if singular.
QVec solve_square(const QMat& a, const QVec& b);

// Coordinates of x in the given independent rows; nullopt if x is outside
// their span.
std::optional<QVec> coordinates_in(const QMat& rows, const QVec& x);

// Deterministic total order on subspaces: by dimension, then entry-wise
// lexicographic on the RREF matrix.
std::strong_ordering compare(const Subspace& a, const Subspace& b);

}  // namespace tvb
