#include "tvb/positivity.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tvb {

namespace {

IVec restriction(const IVec& u, const Fan& fan, const std::vector<size_t>& tau) {
  IVec r;
  for (size_t ri : tau) r.push_back(dot(u, fan.rays[ri]));
  return r;
}

// u1 - u0 as an integer multiple of normal; both vanish on the wall.
long long normal_coefficient(const IVec& u0, const IVec& u1, const IVec& normal) {
  for (size_t i = 0; i < normal.size(); ++i)
    if (normal[i] != 0) {
      long long num = u1[i] - u0[i];
      if (num % normal[i] != 0)
        throw Error("internal", "character difference not a normal multiple");
      long long t = num / normal[i];
      for (size_t j = 0; j < normal.size(); ++j)
        if (u1[j] - u0[j] != t * normal[j])
          throw Error("internal", "character difference not a normal multiple");
      return t;
    }
  throw Error("internal", "zero wall normal");
}

}  // namespace

CurveSplitting curve_splitting(const ToricVectorBundle& e, const Wall& wall) {
  auto lefts = local_characters(e, wall.left).expanded();
  auto rights = local_characters(e, wall.right).expanded();
  std::map<IVec, std::pair<std::vector<IVec>, std::vector<IVec>>> groups;
  for (const auto& u : lefts)
    groups[restriction(u, e.fan, wall.tau)].first.push_back(u);
  for (const auto& u : rights)
    groups[restriction(u, e.fan, wall.tau)].second.push_back(u);

  CurveSplitting cs;
  cs.wall = wall;
  for (auto& [r, lr] : groups) {
    auto& [ls, rs] = lr;
    if (ls.size() != rs.size())
      throw Error("wall_matching",
                  "character restrictions do not match across the wall");
    const IVec& u0 = ls.front();
    auto by_t = [&](const IVec& a, const IVec& b) {
      return normal_coefficient(u0, a, wall.normal) <
             normal_coefficient(u0, b, wall.normal);
    };
    std::sort(ls.begin(), ls.end(), by_t);
    std::sort(rs.begin(), rs.end(), by_t);
    for (size_t i = 0; i < ls.size(); ++i)
      cs.pairs.push_back({ls[i], rs[i],
                          normal_coefficient(rs[i], ls[i], wall.normal)});
  }
  std::sort(cs.pairs.begin(), cs.pairs.end(),
            [&](const CurveSplitting::Pair& a, const CurveSplitting::Pair& b) {
              IVec ra = restriction(a.u_left, e.fan, wall.tau);
              IVec rb = restriction(b.u_left, e.fan, wall.tau);
              if (ra != rb) return ra < rb;
              return a.degree < b.degree;
            });
  return cs;
}

std::vector<CurveSplitting> all_curve_splittings(const ToricVectorBundle& e) {
  std::vector<CurveSplitting> out;
  for (const Wall& w : walls(e.fan)) out.push_back(curve_splitting(e, w));
  return out;
}

bool is_nef(const ToricVectorBundle& e) {
  for (const auto& cs : all_curve_splittings(e))
    for (const auto& p : cs.pairs)
      if (p.degree < 0) return false;
  return true;
}

bool is_ample(const ToricVectorBundle& e) {
  for (const auto& cs : all_curve_splittings(e))
    for (const auto& p : cs.pairs)
      if (p.degree <= 0) return false;
  return true;
}

namespace {

// Injective assignment of ground vectors to the expanded characters of one
// cone: vector assigned to u must have u in its polytope, the chosen set
// stays independent, and `extra` (if any) must accept each pair.
std::optional<std::vector<size_t>> assign_cone(
    const Matroid& m, const std::vector<IVec>& chars,
    const std::function<bool(const IVec&, size_t)>& extra) {
  std::vector<size_t> pick;
  std::vector<bool> used(m.ground.size(), false);
  std::function<bool(size_t)> rec = [&](size_t j) -> bool {
    if (j == chars.size()) return true;
    for (size_t g = 0; g < m.ground.size(); ++g) {
      if (used[g] || !m.ground[g].polytope.contains(chars[j])) continue;
      if (extra && !extra(chars[j], g)) continue;
      pick.push_back(g);
      if (m.is_independent(pick)) {
        used[g] = true;
        if (rec(j + 1)) return true;
        used[g] = false;
      }
      pick.pop_back();
    }
    return false;
  };
  if (rec(0)) return pick;
  return std::nullopt;
}

GGResult gg_search(const ToricVectorBundle& e, const Matroid& m,
                   const std::function<bool(size_t, const IVec&, size_t)>& extra) {
  GGResult res;
  res.generated = true;
  res.witnesses.resize(e.fan.max_cones.size());
  for (size_t ci = 0; ci < e.fan.max_cones.size(); ++ci) {
    auto chars = local_characters(e, ci).expanded();
    std::function<bool(const IVec&, size_t)> pred;
    if (extra)
      pred = [&, ci](const IVec& u, size_t g) { return extra(ci, u, g); };
    auto w = assign_cone(m, chars, pred);
    if (w) {
      res.witnesses[ci] = *w;
    } else {
      res.generated = false;
      res.failing_cones.push_back(ci);
    }
  }
  return res;
}

}  // namespace

GGResult is_globally_generated(const ToricVectorBundle& e, const Matroid& m) {
  return gg_search(e, m, nullptr);
}

GGResult is_globally_generated(const ToricVectorBundle& e) {
  return is_globally_generated(e, build_matroid(e));
}

bool is_very_ample(const ToricVectorBundle& e) {
  Matroid m = build_matroid(e);
  // Generators of the dual cone in the polytope convention: the negated
  // dual basis of the cone's rays.
  std::vector<std::vector<IVec>> dual_gens(e.fan.max_cones.size());
  for (size_t ci = 0; ci < e.fan.max_cones.size(); ++ci) {
    const auto& cone = e.fan.max_cones[ci];
    for (size_t i = 0; i < cone.size(); ++i) {
      std::vector<long long> delta(cone.size(), 0);
      delta[i] = 1;
      IVec mi = solve_character(e.fan, cone, delta);
      for (auto& c : mi) c = -c;
      dual_gens[ci].push_back(std::move(mi));
    }
    std::sort(dual_gens[ci].begin(), dual_gens[ci].end());
  }
  auto edge_ok = [&](size_t ci, const IVec& u, size_t g) {
    if (!m.ground[g].polytope.contains(u)) return false;
    auto dirs = edge_directions_at(m.ground[g].polytope, u);
    std::sort(dirs.begin(), dirs.end());
    return dirs == dual_gens[ci];
  };
  return gg_search(e, m, edge_ok).generated;
}

BigResult is_big(const ToricVectorBundle& e, size_t k_max) {
  BigResult res;
  const int n = static_cast<int>(e.fan.dim);
  // Known matroid vectors of lower symmetric degree; products of them seed
  // the degree-k matroid so fresh vectors are recognizable.
  std::vector<std::pair<size_t, QVec>> known;
  for (size_t k = 1; k <= k_max; ++k) {
    QMat seeds;
    {
      // All products of known elements with degrees summing to k.
      std::function<void(size_t, size_t, std::optional<QVec>, size_t)> rec =
          [&](size_t start, size_t deg, std::optional<QVec> acc, size_t acc_deg) {
            if (deg == k && acc) {
              seeds.push_back(*acc);
              return;
            }
            for (size_t i = start; i < known.size(); ++i) {
              auto [d, v] = known[i];
              if (deg + d > k) continue;
              std::optional<QVec> next =
                  acc ? std::optional<QVec>(
                            sym_multiply(*acc, acc_deg, v, d, e.rank))
                      : std::optional<QVec>(v);
              rec(i, deg + d, std::move(next), acc_deg + d);
            }
          };
      if (k > 1) rec(0, 0, std::nullopt, 0);
    }
    ToricVectorBundle sk = k == 1 ? e : sym_power(e, k);
    Matroid m = build_matroid(sk, seeds);
    for (const auto& entry : m.ground) {
      bool seeded = false;
      for (const auto& s : seeds)
        if (s == entry.vector) seeded = true;
      if (!seeded) known.push_back({k, entry.vector});
      if (!res.big && polytope_dim(entry.polytope) == n) {
        res.big = true;
        res.witness = BigWitness{k, entry.vector, entry.divisor};
      }
    }
    if (res.big) return res;
  }
  return res;
}

BranchedCover branched_cover(const ToricVectorBundle& e) {
  BranchedCover cover;
  for (size_t ci = 0; ci < e.fan.max_cones.size(); ++ci)
    cover.sheets.push_back(local_characters(e, ci));
  cover.gluings = all_curve_splittings(e);
  return cover;
}

ConcavityVerdict concavity_check(const BranchedCover& cover) {
  ConcavityVerdict v{true, true};
  for (const auto& cs : cover.gluings)
    for (const auto& p : cs.pairs) {
      if (p.degree < 0) v.nef_like = false;
      if (p.degree <= 0) v.strict = false;
    }
  return v;
}

}  // namespace tvb
