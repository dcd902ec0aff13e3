#include "tvb/linalg.hpp"

#include <algorithm>

namespace tvb {

Subspace Subspace::full(size_t d) {
  QMat id(d, QVec(d, 0));
  for (size_t i = 0; i < d; ++i) id[i][i] = 1;
  return Subspace(d, std::move(id));
}

Subspace Subspace::span(size_t d, const QMat& rows) { return rref(d, rows); }

size_t rref_inplace(QMat& rows) {
  const size_t nr = rows.size();
  const size_t nc = nr ? rows[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t piv = r;
    while (piv < nr && rows[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = rows[r][c];
    for (size_t j = c; j < nc; ++j) rows[r][j] /= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (size_t j = c; j < nc; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

Subspace rref(size_t d, const QMat& rows) {
  for (const auto& row : rows)
    if (row.size() != d)
      throw Error("dim_mismatch", "row length does not match ambient dimension");
  QMat m = rows;
  rref_inplace(m);
  return Subspace(d, std::move(m));
}

size_t rank(const QMat& rows) {
  QMat m = rows;
  return rref_inplace(m);
}

Subspace annihilator(const Subspace& v) {
  return nullspace(v.basis(), v.ambient_dim());
}

Subspace nullspace(const QMat& m, size_t cols) {
  QMat red = m;
  rref_inplace(red);
  std::vector<ptrdiff_t> pivot_of_col(cols, -1);
  for (size_t i = 0; i < red.size(); ++i) {
    size_t c = 0;
    while (c < cols && red[i][c] == 0) ++c;
    pivot_of_col[c] = static_cast<ptrdiff_t>(i);
  }
  QMat basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    QVec x(cols, 0);
    x[c] = 1;
    for (size_t cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) x[cc] = -red[pivot_of_col[cc]][c];
    basis.push_back(std::move(x));
  }
  return rref(cols, basis);
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim())
    throw Error("dim_mismatch", "intersect: ambient dimensions differ");
  // V = ker(A_V), W = ker(A_W); V cap W = ker of the stacked annihilators.
  QMat eqs = annihilator(v).basis();
  const Subspace aw = annihilator(w);
  for (const auto& row : aw.basis()) eqs.push_back(row);
  return nullspace(eqs, v.ambient_dim());
}

Subspace sum(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim())
    throw Error("dim_mismatch", "sum: ambient dimensions differ");
  QMat rows = v.basis();
  for (const auto& r : w.basis()) rows.push_back(r);
  return rref(v.ambient_dim(), rows);
}

bool member(const QVec& x, const Subspace& v) {
  if (x.size() != v.ambient_dim())
    throw Error("dim_mismatch", "member: vector has wrong length");
  QMat rows = v.basis();
  rows.push_back(x);
  return rank(rows) == v.dim();
}

bool contains(const Subspace& big, const Subspace& small) {
  for (const auto& row : small.basis())
    if (!member(row, big)) return false;
  return true;
}

std::vector<QVec> complement_in(const Subspace& v, const Subspace& g,
                                const std::vector<QVec>& preferred) {
  if (!contains(v, g))
    throw Error("not_contained", "complement_in: G is not a subspace of V");
  QMat work = g.basis();
  size_t cur = rref_inplace(work);
  std::vector<QVec> out;
  auto try_add = [&](const QVec& x) {
    if (cur == v.dim()) return false;
    QMat probe = work;
    probe.push_back(x);
    if (rref_inplace(probe) > cur) {
      work = std::move(probe);
      cur += 1;
      out.push_back(x);
      return true;
    }
    return false;
  };
  for (const auto& p : preferred) {
    if (p.size() != v.ambient_dim())
      throw Error("dim_mismatch", "complement_in: preferred vector has wrong length");
    if (member(p, v)) try_add(p);
  }
  for (const auto& row : v.basis()) try_add(row);
  return out;
}

QVec solve_square(const QMat& a, const QVec& b) {
  const size_t n = a.size();
  QMat aug = a;
  for (size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  size_t r = rref_inplace(aug);
  if (r < n) throw Error("singular", "solve_square: singular matrix");
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::optional<QVec> coordinates_in(const QMat& rows, const QVec& x) {
  // Solve lambda * rows = x by augmenting the transposed system.
  const size_t k = rows.size();
  const size_t d = x.size();
  QMat aug(d, QVec(k + 1, 0));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = rows[j][i];
    aug[i][k] = x[i];
  }
  rref_inplace(aug);
  QVec lambda(k, 0);
  for (const auto& row : aug) {
    size_t c = 0;
    while (c <= k && row[c] == 0) ++c;
    if (c == k) return std::nullopt;  // inconsistent row 0 = 1
    if (c > k) continue;
    lambda[c] = row[k];
    for (size_t j = c + 1; j < k; ++j)
      if (row[j] != 0) return std::nullopt;  // rows dependent: not unique; keep
  }
  // Verify (covers the dependent-rows case).
  for (size_t i = 0; i < d; ++i) {
    Rational s = 0;
    for (size_t j = 0; j < k; ++j) s += lambda[j] * rows[j][i];
    if (s != x[i]) return std::nullopt;
  }
  return lambda;
}

std::strong_ordering compare(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (size_t i = 0; i < a.basis().size(); ++i)
    for (size_t j = 0; j < a.ambient_dim(); ++j) {
      const Rational &x = a.basis()[i][j], &y = b.basis()[i][j];
      if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  return std::strong_ordering::equal;
}

}  // namespace tvb
