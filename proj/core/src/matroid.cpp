#include "tvb/matroid.hpp"

#include <algorithm>
#include <map>

namespace tvb {

bool Matroid::is_independent(const std::vector<size_t>& subset) const {
  return subset_rank(subset) == subset.size();
}

size_t Matroid::subset_rank(const std::vector<size_t>& subset) const {
  QMat rows;
  for (size_t i : subset) rows.push_back(ground[i].vector);
  return rank(rows);
}

std::vector<std::vector<size_t>> Matroid::circuits() const {
  std::vector<std::vector<size_t>> out;
  const size_t g = ground.size();
  // A circuit has at most ambient+1 elements; enumerate subsets by size.
  for (size_t sz = 1; sz <= std::min(g, ambient + 1); ++sz) {
    std::vector<size_t> idx(sz);
    for (size_t i = 0; i < sz; ++i) idx[i] = i;
    while (true) {
      if (!is_independent(idx)) {
        bool minimal = true;
        for (size_t drop = 0; drop < sz && minimal; ++drop) {
          std::vector<size_t> sub;
          for (size_t i = 0; i < sz; ++i)
            if (i != drop) sub.push_back(idx[i]);
          if (!is_independent(sub)) minimal = false;
        }
        if (minimal) out.push_back(idx);
      }
      // Next combination.
      size_t i = sz;
      while (i > 0 && idx[i - 1] == g - sz + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t jj = i; jj < sz; ++jj) idx[jj] = idx[jj - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

EqDivisor divisor_of(const ToricVectorBundle& e, const Subspace& v) {
  EqDivisor d = EqDivisor::zero(e.fan);
  for (size_t ri = 0; ri < e.fan.n_rays(); ++ri) {
    long long best = 0;
    bool found = false;
    for (const auto& [j, s] : e.filtrations[ri].steps)
      if (contains(s, v)) {
        best = j;
        found = true;
      }
    if (!found)
      throw Error("internal", "lattice element escapes the full space");
    d.coeffs[ri] = best;
  }
  return d;
}

HPolytope divisor_polytope(const Fan& fan, const EqDivisor& d) {
  HPolytope p;
  p.dim = fan.dim;
  for (size_t ri = 0; ri < fan.n_rays(); ++ri)
    p.inequalities.push_back({fan.rays[ri], d.coeffs[ri]});
  return p;
}

}  // namespace

IntersectionLattice intersection_lattice(const ToricVectorBundle& e) {
  std::vector<Subspace> elems;
  auto add = [&](const Subspace& s) {
    if (s.is_zero()) return false;
    for (const auto& x : elems)
      if (x == s) return false;
    elems.push_back(s);
    return true;
  };
  add(Subspace::full(e.rank));
  for (const auto& filt : e.filtrations)
    for (const auto& [j, s] : filt.steps) add(s);
  // Close under pairwise intersection.
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t jj = 0; jj < i; ++jj) add(intersect(elems[i], elems[jj]));
  std::sort(elems.begin(), elems.end(),
            [](const Subspace& a, const Subspace& b) {
              return compare(a, b) == std::strong_ordering::less;
            });
  IntersectionLattice lat;
  for (auto& s : elems) lat.elements.push_back({s, divisor_of(e, s)});
  return lat;
}

Matroid build_matroid(const ToricVectorBundle& e, const QMat& seeds) {
  Matroid m;
  m.ambient = e.rank;
  m.lattice = intersection_lattice(e);
  QMat chosen;
  for (const auto& el : m.lattice.elements) {
    QMat inside;
    for (const auto& g : chosen)
      if (member(g, el.space)) inside.push_back(g);
    Subspace have = rref(e.rank, inside);
    if (have.dim() == el.space.dim()) continue;
    for (QVec& v : complement_in(el.space, have, seeds)) {
      bool seeded = false;
      for (const auto& s : seeds)
        if (s == v) seeded = true;
      chosen.push_back(v);
      ParliamentEntry entry;
      entry.vector = std::move(v);
      entry.divisor = divisor_of(e, Subspace::span(e.rank, {chosen.back()}));
      entry.polytope = divisor_polytope(e.fan, entry.divisor);
      entry.from_seed = seeded;
      m.ground.push_back(std::move(entry));
    }
  }
  return m;
}

std::vector<ParliamentEntry> parliament(const ToricVectorBundle& e) {
  return build_matroid(e).ground;
}

long long h0_dim_via_parliament(const Matroid& m, const IVec& u) {
  QMat rows;
  for (const auto& entry : m.ground)
    if (entry.polytope.contains(u)) rows.push_back(entry.vector);
  return static_cast<long long>(rank(rows));
}

long long h0_dim_via_parliament(const ToricVectorBundle& e, const IVec& u) {
  return h0_dim_via_parliament(build_matroid(e), u);
}

HPolytope CayleyData::fiber(size_t i) const {
  const size_t n = p_of.dim - s;
  HPolytope out;
  out.dim = n;
  for (const auto& [normal, bound] : p_of.inequalities) {
    IVec head(normal.begin(), normal.begin() + n);
    bool pure_simplex = std::all_of(head.begin(), head.end(),
                                    [](long long c) { return c == 0; });
    long long shift = 0;
    if (i > 0) shift = normal[n + (i - 1)];  // substitute x = -e_i
    if (pure_simplex) continue;               // constraint on x only
    out.inequalities.push_back({std::move(head), bound + shift});
  }
  return out;
}

CayleyData cayley_data(const Matroid& m, const Fan& fan) {
  if (m.ground.empty()) throw Error("empty_matroid", "cayley_data: ground set is empty");
  CayleyData c;
  c.s = m.ground.size() - 1;
  const size_t n = fan.dim;
  const auto& a0 = m.ground[0].divisor.coeffs;
  for (size_t ri = 0; ri < fan.n_rays(); ++ri) {
    IVec lifted(n + c.s, 0);
    std::copy(fan.rays[ri].begin(), fan.rays[ri].end(), lifted.begin());
    for (size_t i = 1; i <= c.s; ++i)
      lifted[n + i - 1] = m.ground[i].divisor.coeffs[ri] - a0[ri];
    c.lifted_rays.push_back(std::move(lifted));
  }
  {
    IVec w0(n + c.s, 0);
    for (size_t i = 0; i < c.s; ++i) w0[n + i] = -1;
    c.simplex_rays.push_back(std::move(w0));
    for (size_t i = 0; i < c.s; ++i) {
      IVec wi(n + c.s, 0);
      wi[n + i] = 1;
      c.simplex_rays.push_back(std::move(wi));
    }
  }
  for (size_t ri = 0; ri < fan.n_rays(); ++ri) c.of_coeffs.push_back(a0[ri]);
  c.of_coeffs.push_back(1);  // coefficient on w_0
  for (size_t i = 0; i < c.s; ++i) c.of_coeffs.push_back(0);

  c.p_of.dim = n + c.s;
  for (size_t ri = 0; ri < fan.n_rays(); ++ri)
    c.p_of.inequalities.push_back({c.lifted_rays[ri], a0[ri]});
  size_t w = fan.n_rays();
  for (const auto& sr : c.simplex_rays)
    c.p_of.inequalities.push_back({sr, c.of_coeffs[w++]});

  for (size_t i = 0; i < m.ground.size(); ++i)
    if (!(c.fiber(i).inequalities ==
          divisor_polytope(fan, m.ground[i].divisor).inequalities))
      throw Error("internal", "cayley_data: fiber slice mismatch");
  return c;
}

}  // namespace tvb
