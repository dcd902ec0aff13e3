#include "tvb/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tvb/linalg.hpp"

namespace tvb {

namespace {

struct Row {
  QVec coeff;
  Rational bound;
  bool strict = false;

  bool operator<(const Row& o) const {
    if (coeff != o.coeff) return coeff < o.coeff;
    if (bound != o.bound) return bound < o.bound;
    return strict < o.strict;
  }
  bool operator==(const Row& o) const = default;
};

using System = std::vector<Row>;

void normalize(Row& r) {
  for (const auto& c : r.coeff) {
    if (c == 0) continue;
    Rational s = abs(c);
    for (auto& x : r.coeff) x /= s;
    r.bound /= s;
    return;
  }
}

// Returns false if a trivially infeasible constant row is present.
bool simplify(System& sys) {
  System kept;
  for (auto& r : sys) {
    bool allzero = std::all_of(r.coeff.begin(), r.coeff.end(),
                               [](const Rational& c) { return c == 0; });
    if (allzero) {
      if (r.bound < 0 || (r.strict && r.bound == 0)) return false;
      continue;
    }
    normalize(r);
    kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  sys = std::move(kept);
  return true;
}

// Eliminates variable `var`; returns false on detected infeasibility.
bool eliminate(System& sys, size_t var) {
  System pos, neg, zero;
  for (auto& r : sys) {
    if (r.coeff[var] > 0)
      pos.push_back(std::move(r));
    else if (r.coeff[var] < 0)
      neg.push_back(std::move(r));
    else
      zero.push_back(std::move(r));
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      Row combo;
      combo.strict = p.strict || n.strict;
      Rational a = p.coeff[var], b = -n.coeff[var];
      combo.coeff.resize(p.coeff.size());
      for (size_t j = 0; j < combo.coeff.size(); ++j)
        combo.coeff[j] = p.coeff[j] * b + n.coeff[j] * a;
      combo.bound = p.bound * b + n.bound * a;
      zero.push_back(std::move(combo));
    }
  }
  sys = std::move(zero);
  return simplify(sys);
}

System to_system(const HPolytope& p, bool strict) {
  System sys;
  for (const auto& [normal, bound] : p.inequalities) {
    Row r;
    r.coeff = to_qvec(normal);
    r.bound = bound;
    r.strict = strict;
    sys.push_back(std::move(r));
  }
  return sys;
}

bool feasible(System sys, size_t dim) {
  if (!simplify(sys)) return false;
  for (size_t v = 0; v < dim; ++v)
    if (!eliminate(sys, v)) return false;
  return true;
}

Integer floor_q(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil_q(const Rational& q) { return -floor_q(-q); }

}  // namespace

bool HPolytope::contains(const IVec& point) const {
  for (const auto& [normal, bound] : inequalities)
    if (dot(normal, point) > bound) return false;
  return true;
}

bool HPolytope::contains(const QVec& point) const {
  for (const auto& [normal, bound] : inequalities)
    if (dot(point, normal) > bound) return false;
  return true;
}

bool is_feasible(const HPolytope& p) { return feasible(to_system(p, false), p.dim); }

bool is_strictly_feasible(const HPolytope& p) {
  return feasible(to_system(p, true), p.dim);
}

std::vector<IVec> lattice_points(const HPolytope& p) {
  if (!is_feasible(p)) return {};
  std::vector<Integer> lo(p.dim), hi(p.dim);
  for (size_t i = 0; i < p.dim; ++i) {
    System sys = to_system(p, false);
    if (!simplify(sys)) return {};
    for (size_t v = 0; v < p.dim; ++v)
      if (v != i && !eliminate(sys, v)) return {};
    bool has_lo = false, has_hi = false;
    Rational best_lo = 0, best_hi = 0;
    for (const auto& r : sys) {
      if (r.coeff[i] > 0) {
        Rational b = r.bound / r.coeff[i];
        if (!has_hi || b < best_hi) best_hi = b;
        has_hi = true;
      } else if (r.coeff[i] < 0) {
        Rational b = r.bound / r.coeff[i];
        if (!has_lo || b > best_lo) best_lo = b;
        has_lo = true;
      }
    }
    if (!has_lo || !has_hi)
      throw Error("unbounded", "lattice_points: polytope is unbounded");
    lo[i] = ceil_q(best_lo);
    hi[i] = floor_q(best_hi);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<IVec> out;
  IVec cur(p.dim);
  for (size_t i = 0; i < p.dim; ++i) cur[i] = lo[i].convert_to<long long>();
  while (true) {
    if (p.contains(cur)) out.push_back(cur);
    size_t i = 0;
    while (i < p.dim) {
      if (Integer(cur[i]) < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i].convert_to<long long>();
      ++i;
    }
    if (i == p.dim) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int polytope_dim(const HPolytope& p) {
  if (!is_feasible(p)) return -1;
  // An inequality <n,x> <= b holds with equality on all of the polytope iff
  // the system together with the strict form <n,x> < b is infeasible.
  QMat tight_normals;
  for (size_t i = 0; i < p.inequalities.size(); ++i) {
    System sys = to_system(p, false);
    Row strict_row;
    strict_row.coeff = to_qvec(p.inequalities[i].first);
    strict_row.bound = p.inequalities[i].second;
    strict_row.strict = true;
    sys.push_back(std::move(strict_row));
    if (!feasible(std::move(sys), p.dim))
      tight_normals.push_back(to_qvec(p.inequalities[i].first));
  }
  return static_cast<int>(p.dim - rank(tight_normals));
}

IVec make_primitive(const IVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  if (g == 0) return v;
  IVec out = v;
  for (auto& x : out) x /= g;
  return out;
}

std::vector<IVec> edge_directions_at(const HPolytope& p, const IVec& vertex) {
  std::vector<size_t> tight;
  for (size_t i = 0; i < p.inequalities.size(); ++i) {
    const auto& [normal, bound] = p.inequalities[i];
    long long v = dot(normal, vertex);
    if (v > bound) throw Error("outside", "edge_directions_at: point outside polytope");
    if (v == bound) tight.push_back(i);
  }
  std::set<IVec> dirs;
  const size_t n = p.dim;
  // Edges are kernels of (n-1)-subsets of tight normals, oriented to stay
  // feasible against every tight inequality.
  std::vector<size_t> comb;
  auto consider = [&](const std::vector<size_t>& subset) {
    QMat rows;
    for (size_t j : subset) rows.push_back(to_qvec(p.inequalities[tight[j]].first));
    if (rank(rows) + 1 != n) return;
    Subspace ker = nullspace(rows, n);
    if (ker.dim() != 1) return;
    // Scale the rational kernel vector to a primitive integer vector.
    const QVec& kq = ker.basis()[0];
    Integer den_lcm = 1;
    for (const auto& c : kq) den_lcm = lcm(den_lcm, denominator(c));
    IVec d(n);
    for (size_t t = 0; t < n; ++t)
      d[t] = Integer(numerator(kq[t]) * (den_lcm / denominator(kq[t]))).convert_to<long long>();
    d = make_primitive(d);
    for (const IVec& cand : {d, [&] { IVec m = d; for (auto& x : m) x = -x; return m; }()}) {
      bool ok = true;
      for (size_t i : tight) ok = ok && dot(p.inequalities[i].first, cand) <= 0;
      if (ok) dirs.insert(cand);
    }
  };
  auto rec = [&](auto&& self, size_t start, size_t need) -> void {
    if (need == 0) {
      consider(comb);
      return;
    }
    for (size_t i = start; i + need <= tight.size() + 0; ++i) {
      if (i >= tight.size()) break;
      comb.push_back(i);
      self(self, i + 1, need - 1);
      comb.pop_back();
    }
  };
  if (n >= 1) rec(rec, 0, n - 1);
  return {dirs.begin(), dirs.end()};
}

std::vector<QVec> vertices_2d(const HPolytope& p) {
  if (p.dim != 2) throw Error("dim_mismatch", "vertices_2d: ambient dim must be 2");
  std::set<std::pair<Rational, Rational>> seen;
  std::vector<QVec> verts;
  for (size_t i = 0; i < p.inequalities.size(); ++i) {
    for (size_t j = i + 1; j < p.inequalities.size(); ++j) {
      const auto& [ni, bi] = p.inequalities[i];
      const auto& [nj, bj] = p.inequalities[j];
      Rational det = Rational(ni[0]) * nj[1] - Rational(ni[1]) * nj[0];
      if (det == 0) continue;
      QVec x{(Rational(bi) * nj[1] - Rational(bj) * ni[1]) / det,
             (Rational(ni[0]) * bj - Rational(nj[0]) * bi) / det};
      if (!p.contains(x)) continue;
      if (seen.insert({x[0], x[1]}).second) verts.push_back(x);
    }
  }
  if (verts.size() < 3) {
    std::sort(verts.begin(), verts.end());
    return verts;
  }
  QVec c{0, 0};
  for (const auto& v : verts) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= int(verts.size());
  c[1] /= int(verts.size());
  auto half = [&](const QVec& v) {
    Rational dy = v[1] - c[1], dx = v[0] - c[0];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const QVec& a, const QVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (cross != 0) return cross > 0;
    return a < b;
  });
  return verts;
}

}  // namespace tvb
