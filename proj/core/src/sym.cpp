#include "tvb/sym.hpp"

#include <algorithm>
#include <map>

namespace tvb {

namespace {

void gen_monomials(size_t rank, size_t degree,
                   std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> cur(rank, 0);
  // Recursive descent in lex-descending order.
  auto rec = [&](auto&& self, size_t pos, size_t left) -> void {
    if (pos + 1 == rank) {
      cur[pos] = static_cast<unsigned>(left);
      out.push_back(cur);
      return;
    }
    for (size_t e = left + 1; e-- > 0;) {
      cur[pos] = static_cast<unsigned>(e);
      self(self, pos + 1, left - e);
    }
  };
  if (rank == 0) {
    if (degree == 0) out.push_back({});
    return;
  }
  rec(rec, 0, degree);
}

}  // namespace

SymMonomialBasis::SymMonomialBasis(size_t rank, size_t degree)
    : rank_(rank), degree_(degree) {
  gen_monomials(rank, degree, monomials_);
}

size_t SymMonomialBasis::index_of(const std::vector<unsigned>& expo) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), expo,
                             [](const auto& a, const auto& b) { return a > b; });
  if (it == monomials_.end() || *it != expo)
    throw Error("bad_monomial", "exponent vector not in basis");
  return static_cast<size_t>(it - monomials_.begin());
}

size_t binomial(size_t n, size_t k) {
  if (k > n) return 0;
  size_t r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

QVec sym_embed(const std::vector<QVec>& vectors, size_t rank, size_t degree) {
  if (vectors.size() != degree)
    throw Error("dim_mismatch", "sym_embed: need exactly `degree` vectors");
  for (const auto& v : vectors)
    if (v.size() != rank)
      throw Error("dim_mismatch", "sym_embed: vector length != rank");
  // Multiply the linear forms one at a time. Keys are exponent vectors.
  std::map<std::vector<unsigned>, Rational> poly;
  poly[std::vector<unsigned>(rank, 0)] = 1;
  for (const auto& v : vectors) {
    std::map<std::vector<unsigned>, Rational> next;
    for (const auto& [expo, coef] : poly) {
      if (coef == 0) continue;
      for (size_t i = 0; i < rank; ++i) {
        if (v[i] == 0) continue;
        auto e = expo;
        e[i] += 1;
        next[e] += coef * v[i];
      }
    }
    poly = std::move(next);
  }
  SymMonomialBasis basis(rank, degree);
  QVec out(basis.size(), 0);
  for (const auto& [expo, coef] : poly)
    if (coef != 0) out[basis.index_of(expo)] = coef;
  return out;
}

QVec sym_multiply(const QVec& a, size_t deg_a, const QVec& b, size_t deg_b,
                  size_t rank) {
  SymMonomialBasis ba(rank, deg_a), bb(rank, deg_b), bc(rank, deg_a + deg_b);
  if (a.size() != ba.size() || b.size() != bb.size())
    throw Error("dim_mismatch", "sym_multiply: coefficient vector size mismatch");
  QVec out(bc.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      std::vector<unsigned> e = ba.monomials()[i];
      for (size_t t = 0; t < rank; ++t) e[t] += bb.monomials()[j][t];
      out[bc.index_of(e)] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace tvb
