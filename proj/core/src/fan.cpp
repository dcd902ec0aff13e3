#include "tvb/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tvb/linalg.hpp"

namespace tvb {

EqDivisor EqDivisor::operator+(const EqDivisor& o) const {
  EqDivisor r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

EqDivisor EqDivisor::operator-() const {
  EqDivisor r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

EqDivisor EqDivisor::operator*(long long k) const {
  EqDivisor r = *this;
  for (auto& c : r.coeffs) c *= k;
  return r;
}

namespace {

Rational det(const QMat& m) {
  QMat a = m;
  const size_t n = a.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

QMat cone_matrix(const Fan& fan, const std::vector<size_t>& cone) {
  QMat m;
  for (size_t ri : cone) m.push_back(to_qvec(fan.rays[ri]));
  return m;
}

// Facets of a smooth maximal cone are its (n-1)-subsets of rays.
std::map<std::vector<size_t>, std::vector<size_t>> facet_map(const Fan& fan) {
  std::map<std::vector<size_t>, std::vector<size_t>> facets;
  for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    const auto& cone = fan.max_cones[ci];
    for (size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<size_t> facet;
      for (size_t j = 0; j < cone.size(); ++j)
        if (j != skip) facet.push_back(cone[j]);
      facets[facet].push_back(ci);
    }
  }
  return facets;
}

}  // namespace

FanReport validate_fan(const Fan& fan) {
  if (fan.rays.empty()) throw Error("empty_fan", "fan has no rays");
  std::set<IVec> seen;
  for (const auto& r : fan.rays) {
    if (r.size() != fan.dim)
      throw Error("bad_ray", "ray has wrong number of coordinates");
    if (make_primitive(r) != r || std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; }))
      throw Error("nonprimitive_ray", "ray is not primitive");
    if (!seen.insert(r).second) throw Error("duplicate_ray", "duplicate ray");
  }
  for (const auto& cone : fan.max_cones)
    for (size_t ri : cone)
      if (ri >= fan.n_rays()) throw Error("bad_cone_index", "cone refers to unknown ray");

  FanReport rep;
  rep.smooth = true;
  for (const auto& cone : fan.max_cones) {
    if (cone.size() != fan.dim) {
      rep.smooth = false;
      break;
    }
    Rational d = det(cone_matrix(fan, cone));
    if (d != 1 && d != -1) {
      rep.smooth = false;
      break;
    }
  }

  rep.complete = !fan.max_cones.empty();
  for (const auto& [facet, cones] : facet_map(fan)) {
    (void)facet;
    if (cones.size() != 2) rep.complete = false;
  }
  if (rep.complete) {
    // Adjacency graph over shared facets must be connected.
    std::vector<std::set<size_t>> adj(fan.max_cones.size());
    for (const auto& [facet, cones] : facet_map(fan)) {
      (void)facet;
      adj[cones[0]].insert(cones[1]);
      adj[cones[1]].insert(cones[0]);
    }
    std::vector<bool> vis(fan.max_cones.size(), false);
    std::vector<size_t> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
      size_t c = stack.back();
      stack.pop_back();
      for (size_t o : adj[c])
        if (!vis[o]) {
          vis[o] = true;
          stack.push_back(o);
        }
    }
    rep.complete = std::all_of(vis.begin(), vis.end(), [](bool b) { return b; });
  }
  return rep;
}

void require_smooth_complete(const Fan& fan) {
  FanReport rep = validate_fan(fan);
  if (!rep.smooth) throw Error("not_smooth", "fan is not smooth");
  if (!rep.complete) throw Error("not_complete", "fan is not complete");
}

std::vector<Wall> walls(const Fan& fan) {
  require_smooth_complete(fan);
  std::vector<Wall> out;
  for (const auto& [facet, cones] : facet_map(fan)) {
    Wall w;
    w.tau = facet;
    w.left = std::min(cones[0], cones[1]);
    w.right = std::max(cones[0], cones[1]);
    // Primitive generator of tau-perp in M.
    QMat rows;
    for (size_t ri : facet) rows.push_back(to_qvec(fan.rays[ri]));
    Subspace ker = nullspace(rows, fan.dim);
    if (ker.dim() != 1) throw Error("bad_wall", "wall normal is not unique");
    const QVec& kq = ker.basis()[0];
    Integer den_lcm = 1;
    for (const auto& c : kq) den_lcm = lcm(den_lcm, denominator(c));
    IVec normal(fan.dim);
    for (size_t t = 0; t < fan.dim; ++t)
      normal[t] =
          Integer(numerator(kq[t]) * (den_lcm / denominator(kq[t]))).convert_to<long long>();
    normal = make_primitive(normal);
    // Orient positive on the ray of `left` outside tau.
    long long sign = 0;
    for (size_t ri : fan.max_cones[w.left])
      if (std::find(facet.begin(), facet.end(), ri) == facet.end())
        sign = dot(normal, fan.rays[ri]);
    if (sign == 0) throw Error("bad_wall", "wall normal vanishes on the left cone");
    if (sign < 0)
      for (auto& x : normal) x = -x;
    w.normal = normal;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const Wall& a, const Wall& b) { return a.tau < b.tau; });
  return out;
}

IVec solve_character(const Fan& fan, const std::vector<size_t>& cone,
                     const std::vector<long long>& values) {
  QMat a = cone_matrix(fan, cone);
  QVec b(values.size());
  for (size_t i = 0; i < values.size(); ++i) b[i] = values[i];
  QVec x = solve_square(a, b);
  IVec u(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (denominator(x[i]) != 1)
      throw Error("not_integral", "character is not integral (cone not unimodular?)");
    u[i] = Integer(numerator(x[i])).convert_to<long long>();
  }
  return u;
}

CartierData cartier_data(const Fan& fan, const EqDivisor& d) {
  if (d.coeffs.size() != fan.n_rays())
    throw Error("bad_divisor", "divisor must have one coefficient per ray");
  CartierData cd;
  for (const auto& cone : fan.max_cones) {
    std::vector<long long> vals;
    for (size_t ri : cone) vals.push_back(d.coeffs[ri]);
    cd.characters.push_back(solve_character(fan, cone, vals));
  }
  return cd;
}

HPolytope polytope(const Fan& fan, const EqDivisor& d) {
  HPolytope p;
  p.dim = fan.dim;
  for (size_t i = 0; i < fan.n_rays(); ++i)
    p.inequalities.push_back({fan.rays[i], d.coeffs[i]});
  return p;
}

DivisorPositivity divisor_positivity(const Fan& fan, const EqDivisor& d) {
  require_smooth_complete(fan);
  CartierData cd = cartier_data(fan, d);
  DivisorPositivity out;
  out.nef = true;
  out.ample = true;
  for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    const auto& cone = fan.max_cones[ci];
    for (size_t ri = 0; ri < fan.n_rays(); ++ri) {
      long long v = dot(cd.characters[ci], fan.rays[ri]);
      if (v > d.coeffs[ri]) out.nef = false;
      bool in_cone = std::find(cone.begin(), cone.end(), ri) != cone.end();
      if (!in_cone && v >= d.coeffs[ri]) out.ample = false;
    }
  }
  out.ample = out.ample && out.nef;
  return out;
}

}  // namespace tvb
