#pragma once

#include "tvb/rational.hpp"

namespace tvb {

/// Monomial basis of S^k Q^r: exponent vectors summing to k, ordered
/// lexicographically descending (x1^k first). Coordinates of symmetric
/// products follow the polynomial-multiplication convention, so
/// sym_embed({v,w}) is the literal coefficient vector of the quadratic
/// form (v.x)(w.x).
class SymMonomialBasis {
 public:
  SymMonomialBasis(size_t rank, size_t degree);

  size_t rank() const { return rank_; }
  size_t degree() const { return degree_; }
  size_t size() const { return monomials_.size(); }
  const std::vector<std::vector<unsigned>>& monomials() const { return monomials_; }
  size_t index_of(const std::vector<unsigned>& expo) const;

 private:
  size_t rank_;
  size_t degree_;
  std::vector<std::vector<unsigned>> monomials_;
};

size_t binomial(size_t n, size_t k);

// Product of k linear forms on Q^r, in S^k coordinates.
QVec sym_embed(const std::vector<QVec>& vectors, size_t rank, size_t degree);

// Multiplication S^a x S^b -> S^(a+b) on coefficient vectors.
QVec sym_multiply(const QVec& a, size_t deg_a, const QVec& b, size_t deg_b,
                  size_t rank);

}  // namespace tvb
