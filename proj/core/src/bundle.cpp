#include "tvb/bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tvb {

const Subspace& Filtration::at(long long j, size_t rank) const {
  static const Subspace kZero0 = Subspace::zero(0);
  // Value at j is the subspace of the smallest recorded jump >= j.
  for (const auto& [jump, sub] : steps)
    if (jump >= j) return sub;
  static thread_local std::map<size_t, Subspace> zeros;
  auto it = zeros.find(rank);
  if (it == zeros.end()) it = zeros.emplace(rank, Subspace::zero(rank)).first;
  (void)kZero0;
  return it->second;
}

std::vector<long long> Filtration::jump_values() const {
  std::vector<long long> out;
  for (const auto& [j, s] : steps) out.push_back(j);
  return out;
}

void validate_filtration_shape(const ToricVectorBundle& e) {
  if (e.filtrations.size() != e.fan.n_rays())
    throw Error("bad_filtration", "need one filtration per ray");
  for (size_t ri = 0; ri < e.filtrations.size(); ++ri) {
    const auto& steps = e.filtrations[ri].steps;
    if (steps.empty())
      throw Error("filtration_not_terminating",
                  "ray " + std::to_string(ri) + ": filtration does not terminate");
    if (steps.front().second.dim() != e.rank)
      throw Error("filtration_not_full",
                  "ray " + std::to_string(ri) + ": first step must be the full space");
    for (size_t i = 0; i < steps.size(); ++i) {
      if (steps[i].second.ambient_dim() != e.rank)
        throw Error("bad_filtration", "ray " + std::to_string(ri) +
                                          ": subspace has wrong ambient dimension");
      if (steps[i].second.is_zero())
        throw Error("bad_filtration", "ray " + std::to_string(ri) +
                                          ": zero subspace must stay implicit");
      if (i > 0) {
        if (steps[i].first <= steps[i - 1].first)
          throw Error("filtration_order",
                      "ray " + std::to_string(ri) + ": jumps must strictly increase");
        if (steps[i].second.dim() >= steps[i - 1].second.dim() ||
            !contains(steps[i - 1].second, steps[i].second))
          throw Error("filtration_order",
                      "ray " + std::to_string(ri) + ": subspaces must strictly decrease");
      }
    }
  }
}

size_t ConeCharacters::total() const {
  size_t t = 0;
  for (const auto& [u, m] : characters) t += m;
  return t;
}

std::vector<IVec> ConeCharacters::expanded() const {
  std::vector<IVec> out;
  for (const auto& [u, m] : characters)
    for (size_t i = 0; i < m; ++i) out.push_back(u);
  return out;
}

namespace {

size_t dim_intersection(const ToricVectorBundle& e,
                        const std::vector<size_t>& rays,
                        const std::vector<long long>& levels) {
  Subspace cur = Subspace::full(e.rank);
  for (size_t i = 0; i < rays.size(); ++i) {
    cur = intersect(cur, e.filtration_at(rays[i], levels[i]));
    if (cur.is_zero()) return 0;
  }
  return cur.dim();
}

}  // namespace

ConeCharacters local_characters(const ToricVectorBundle& e, size_t cone_index) {
  const auto& cone = e.fan.max_cones[cone_index];
  const size_t n = cone.size();
  std::vector<std::vector<long long>> jump_sets;
  for (size_t ri : cone) jump_sets.push_back(e.filtrations[ri].jump_values());

  auto fail = [&](const std::string& why) -> Error {
    return Error("incompatible", "filtrations incompatible on cone " +
                                     std::to_string(cone_index) + ": " + why);
  };

  ConeCharacters out;
  std::vector<size_t> idx(n, 0);
  size_t total = 0;
  while (true) {
    std::vector<long long> levels(n);
    for (size_t i = 0; i < n; ++i) levels[i] = jump_sets[i][idx[i]];
    // Inclusion-exclusion multiplicity of the character with <u,rho_i> =
    // levels[i].
    long long m = 0;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
      std::vector<long long> shifted = levels;
      int sign = 1;
      for (size_t b = 0; b < n; ++b)
        if (mask & (size_t(1) << b)) {
          shifted[b] += 1;
          sign = -sign;
        }
      m += sign * static_cast<long long>(dim_intersection(e, cone, shifted));
    }
    if (m < 0) throw fail("negative multiplicity");
    if (m > 0) {
      out.characters.push_back({solve_character(e.fan, cone, levels),
                                static_cast<size_t>(m)});
      total += static_cast<size_t>(m);
    }
    size_t i = 0;
    while (i < n && ++idx[i] == jump_sets[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  if (total != e.rank) throw fail("multiplicities do not sum to the rank");
  // Reconstruction: every filtration step dimension must be recovered.
  for (size_t i = 0; i < n; ++i) {
    for (long long l : jump_sets[i]) {
      size_t expect = e.filtration_at(cone[i], l).dim();
      size_t got = 0;
      for (const auto& [u, mult] : out.characters)
        if (dot(u, e.fan.rays[cone[i]]) >= l) got += mult;
      if (got != expect) throw fail("filtration dimensions not reconstructed");
    }
  }
  std::sort(out.characters.begin(), out.characters.end());
  return out;
}

BundleReport validate_bundle(const ToricVectorBundle& e) {
  validate_filtration_shape(e);
  BundleReport rep;
  rep.fan_report = validate_fan(e.fan);
  if (!rep.fan_report.smooth || !rep.fan_report.complete) {
    rep.compatible = false;
    rep.failure = "fan is not smooth and complete";
    return rep;
  }
  rep.compatible = true;
  for (size_t ci = 0; ci < e.fan.max_cones.size(); ++ci) {
    try {
      rep.cone_characters.push_back(local_characters(e, ci));
    } catch (const Error& err) {
      rep.compatible = false;
      rep.failure = err.what();
      break;
    }
  }
  return rep;
}

ToricVectorBundle twist(const ToricVectorBundle& e, const EqDivisor& d) {
  if (d.coeffs.size() != e.fan.n_rays())
    throw Error("bad_divisor", "twist: divisor size mismatch");
  ToricVectorBundle out = e;
  for (size_t ri = 0; ri < out.filtrations.size(); ++ri)
    for (auto& [j, s] : out.filtrations[ri].steps) j += d.coeffs[ri];
  return out;
}

namespace {

// Keeps, for each distinct subspace in an ascending (jump, subspace) run,
// only the largest jump; drops zero subspaces (implicit tail).
Filtration compress(std::vector<std::pair<long long, Subspace>> steps) {
  Filtration f;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].second.is_zero()) continue;
    if (i + 1 < steps.size() && steps[i + 1].second == steps[i].second) continue;
    f.steps.push_back(std::move(steps[i]));
  }
  return f;
}

QVec tensor_vec(const QVec& a, const QVec& b) {
  QVec out(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

}  // namespace

ToricVectorBundle tensor(const ToricVectorBundle& e, const ToricVectorBundle& f) {
  if (!(e.fan.rays == f.fan.rays && e.fan.max_cones == f.fan.max_cones))
    throw Error("fan_mismatch", "tensor: bundles live on different fans");
  ToricVectorBundle out;
  out.fan = e.fan;
  out.rank = e.rank * f.rank;
  for (size_t ri = 0; ri < e.fan.n_rays(); ++ri) {
    auto je = e.filtrations[ri].jump_values();
    auto jf = f.filtrations[ri].jump_values();
    std::set<long long> cand_set;
    for (long long a : je)
      for (long long b : jf) cand_set.insert(a + b);
    std::vector<std::pair<long long, Subspace>> steps;
    for (long long c : cand_set) {
      QMat rows;
      for (long long a : je)
        for (long long b : jf) {
          if (a + b < c) continue;
          const Subspace& va = e.filtration_at(ri, a);
          const Subspace& vb = f.filtration_at(ri, b);
          for (const auto& ra : va.basis())
            for (const auto& rb : vb.basis()) rows.push_back(tensor_vec(ra, rb));
        }
      steps.push_back({c, rref(out.rank, rows)});
    }
    out.filtrations.push_back(compress(std::move(steps)));
  }
  return out;
}

ToricVectorBundle sym_power(const ToricVectorBundle& e, size_t k) {
  if (k < 1) throw Error("bad_degree", "sym_power: degree must be >= 1");
  ToricVectorBundle out;
  out.fan = e.fan;
  out.rank = binomial(e.rank + k - 1, k);
  for (size_t ri = 0; ri < e.fan.n_rays(); ++ri) {
    auto jumps = e.filtrations[ri].jump_values();
    // Multisets of k jump values.
    std::vector<std::vector<long long>> tuples;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
      if (cur.size() == k) {
        tuples.push_back(cur);
        return;
      }
      for (size_t i = start; i < jumps.size(); ++i) {
        cur.push_back(jumps[i]);
        self(self, i);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    std::set<long long> cand_set;
    for (const auto& t : tuples)
      cand_set.insert(std::accumulate(t.begin(), t.end(), 0LL));
    std::vector<std::pair<long long, Subspace>> steps;
    for (long long c : cand_set) {
      QMat rows;
      for (const auto& t : tuples) {
        if (std::accumulate(t.begin(), t.end(), 0LL) < c) continue;
        // All products of one basis vector from each factor.
        std::vector<const QMat*> bases;
        bool zero = false;
        for (long long j : t) {
          const Subspace& s = e.filtration_at(ri, j);
          if (s.is_zero()) zero = true;
          bases.push_back(&s.basis());
        }
        if (zero) continue;
        std::vector<size_t> pick(k, 0);
        while (true) {
          std::vector<QVec> factors;
          for (size_t i = 0; i < k; ++i) factors.push_back((*bases[i])[pick[i]]);
          rows.push_back(sym_embed(factors, e.rank, k));
          size_t i = 0;
          while (i < k && ++pick[i] == bases[i]->size()) pick[i++] = 0;
          if (i == k) break;
        }
      }
      steps.push_back({c, rref(out.rank, rows)});
    }
    out.filtrations.push_back(compress(std::move(steps)));
  }
  return out;
}

ToricVectorBundle frobenius_pullback(const ToricVectorBundle& e, long long k) {
  if (k < 1) throw Error("bad_degree", "frobenius_pullback: k must be >= 1");
  ToricVectorBundle out = e;
  for (auto& filt : out.filtrations)
    for (auto& [j, s] : filt.steps) j *= k;
  return out;
}

Subspace h0_component(const ToricVectorBundle& e, const IVec& u) {
  Subspace cur = Subspace::full(e.rank);
  for (size_t ri = 0; ri < e.fan.n_rays(); ++ri) {
    cur = intersect(cur, e.filtration_at(ri, dot(u, e.fan.rays[ri])));
    if (cur.is_zero()) break;
  }
  return cur;
}

std::vector<IVec> h0_support_region(const ToricVectorBundle& e) {
  HPolytope p;
  p.dim = e.fan.dim;
  for (size_t ri = 0; ri < e.fan.n_rays(); ++ri)
    p.inequalities.push_back({e.fan.rays[ri], e.filtrations[ri].max_jump()});
  return lattice_points(p);
}

long long h0_dim(const ToricVectorBundle& e) {
  long long total = 0;
  for (const IVec& u : h0_support_region(e))
    total += static_cast<long long>(h0_component(e, u).dim());
  return total;
}

ToricVectorBundle line_bundle(const Fan& fan, const EqDivisor& d) {
  ToricVectorBundle e;
  e.fan = fan;
  e.rank = 1;
  for (size_t ri = 0; ri < fan.n_rays(); ++ri) {
    Filtration f;
    f.steps.push_back({d.coeffs[ri], Subspace::full(1)});
    e.filtrations.push_back(std::move(f));
  }
  return e;
}

ToricVectorBundle direct_sum(const ToricVectorBundle& a, const ToricVectorBundle& b) {
  if (!(a.fan.rays == b.fan.rays && a.fan.max_cones == b.fan.max_cones))
    throw Error("fan_mismatch", "direct_sum: bundles live on different fans");
  ToricVectorBundle out;
  out.fan = a.fan;
  out.rank = a.rank + b.rank;
  for (size_t ri = 0; ri < a.fan.n_rays(); ++ri) {
    std::set<long long> jumps;
    for (long long j : a.filtrations[ri].jump_values()) jumps.insert(j);
    for (long long j : b.filtrations[ri].jump_values()) jumps.insert(j);
    std::vector<std::pair<long long, Subspace>> steps;
    for (long long j : jumps) {
      QMat rows;
      for (const auto& r : a.filtration_at(ri, j).basis()) {
        QVec x(out.rank, 0);
        std::copy(r.begin(), r.end(), x.begin());
        rows.push_back(std::move(x));
      }
      for (const auto& r : b.filtration_at(ri, j).basis()) {
        QVec x(out.rank, 0);
        std::copy(r.begin(), r.end(), x.begin() + a.rank);
        rows.push_back(std::move(x));
      }
      steps.push_back({j, rref(out.rank, rows)});
    }
    out.filtrations.push_back(compress(std::move(steps)));
  }
  return out;
}

ToricVectorBundle change_basis(const ToricVectorBundle& e, const QMat& g) {
  if (g.size() != e.rank || rank(g) != e.rank)
    throw Error("bad_basis", "change_basis: matrix must be invertible of size rank");
  ToricVectorBundle out = e;
  for (auto& filt : out.filtrations)
    for (auto& [j, s] : filt.steps) {
      QMat rows;
      for (const auto& row : s.basis()) {
        QVec x(e.rank, 0);
        for (size_t i = 0; i < e.rank; ++i)
          for (size_t t = 0; t < e.rank; ++t) x[t] += row[i] * g[i][t];
        rows.push_back(std::move(x));
      }
      s = rref(e.rank, rows);
    }
  return out;
}

}  // namespace tvb
