#include "tvb/cox.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tvb {

namespace {

struct Seed {
  QVec vector;
  std::vector<size_t> factors;  // element indices, nondecreasing
  EqDivisor divisor_sum;
};

// All products of elements with degrees summing to k, deduplicated by
// vector (first factorization in enumeration order wins).
std::vector<Seed> degree_k_seeds(const GeneratorSet& g, size_t rank, size_t k) {
  std::vector<Seed> seeds;
  std::vector<size_t> pick;
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t deg) {
    if (deg == k) {
      Seed s;
      s.factors = pick;
      s.divisor_sum = g.elements[pick[0]].divisor;
      s.vector = g.elements[pick[0]].vector;
      size_t d = g.elements[pick[0]].degree;
      for (size_t i = 1; i < pick.size(); ++i) {
        const auto& el = g.elements[pick[i]];
        s.vector = sym_multiply(s.vector, d, el.vector, el.degree, rank);
        d += el.degree;
        s.divisor_sum = s.divisor_sum + el.divisor;
      }
      for (const auto& other : seeds)
        if (other.vector == s.vector) return;
      seeds.push_back(std::move(s));
      return;
    }
    for (size_t i = start; i < g.elements.size(); ++i) {
      if (deg + g.elements[i].degree > k) continue;
      pick.push_back(i);
      rec(i, deg + g.elements[i].degree);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return seeds;
}

}  // namespace

GeneratorSet frak_M(const ToricVectorBundle& e, size_t k_max) {
  if (k_max < 1) throw Error("bad_degree", "frak_M: k_max must be >= 1");
  GeneratorSet g;
  g.k_max = k_max;
  size_t last_fresh = 1;
  for (size_t k = 1; k <= k_max; ++k) {
    GeneratorSet::DegreeData dd;
    dd.bundle = k == 1 ? e : sym_power(e, k);
    std::vector<Seed> seeds = k == 1 ? std::vector<Seed>{}
                                     : degree_k_seeds(g, e.rank, k);
    QMat seed_vectors;
    for (const auto& s : seeds) seed_vectors.push_back(s.vector);
    dd.matroid = build_matroid(dd.bundle, seed_vectors);
    bool fresh_here = false;
    for (const auto& entry : dd.matroid.ground) {
      const Seed* found = nullptr;
      for (const auto& s : seeds)
        if (s.vector == entry.vector && s.divisor_sum == entry.divisor)
          found = &s;
      if (found) {
        dd.factorizations.push_back(found->factors);
      } else {
        g.elements.push_back({entry.vector, k, entry.divisor});
        dd.factorizations.push_back({g.elements.size() - 1});
        fresh_here = true;
      }
    }
    if (fresh_here && k > 1) {
      g.fresh_degrees.push_back(k);
      last_fresh = k;
    }
    g.per_degree.push_back(std::move(dd));
  }
  if (last_fresh < k_max) g.stabilized_at = last_fresh + 1;
  return g;
}

MdsStatus mds_status(const ToricVectorBundle& e, size_t k_max) {
  if (k_max < 2) throw Error("bad_degree", "mds_status: k_max must be >= 2");
  MdsStatus s;
  s.definitive = true;
  for (const auto& filt : e.filtrations)
    for (const auto& [j, sub] : filt.steps)
      if (sub.dim() != 0 && sub.dim() != 1 && sub.dim() != e.rank)
        s.definitive = false;
  GeneratorSet g = frak_M(e, k_max);
  s.fresh_degrees = g.fresh_degrees;
  if (g.fresh_degrees.empty() || g.fresh_degrees.back() < k_max)
    s.stabilized_through = k_max;
  return s;
}

namespace {

std::vector<unsigned> t_exponent(const GeneratorSet& g,
                                 const std::vector<size_t>& factors) {
  std::vector<unsigned> t(g.elements.size(), 0);
  for (size_t f : factors) ++t[f];
  return t;
}

}  // namespace

std::vector<CoxRelation> ideal_I(const GeneratorSet& g,
                                 const std::vector<size_t>& degrees) {
  std::vector<CoxRelation> out;
  for (size_t k : degrees) {
    const auto& dd = g.per_degree.at(k - 1);
    const auto& m = dd.matroid;
    for (const auto& circuit : m.circuits()) {
      QMat rows;
      for (size_t i : circuit) rows.push_back(m.ground[i].vector);
      // Coefficients lambda with sum_i lambda_i row_i = 0: null space of the
      // transposed matrix.
      QMat cols(rows[0].size(), QVec(rows.size()));
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) cols[j][i] = rows[i][j];
      Subspace lam = nullspace(cols, rows.size());
      if (lam.dim() != 1)
        throw Error("internal", "circuit relation space not one-dimensional");
      QVec lambda = lam.basis()[0];
      // Normalize: first nonzero coefficient (ground order) is 1.
      Rational lead = 0;
      for (const auto& c : lambda)
        if (c != 0) {
          lead = c;
          break;
        }
      for (auto& c : lambda) c /= lead;

      std::vector<long long> beta;
      for (size_t ri = 0; ri < m.ground[circuit[0]].divisor.coeffs.size(); ++ri) {
        long long b = m.ground[circuit[0]].divisor.coeffs[ri];
        for (size_t i : circuit) b = std::min(b, m.ground[i].divisor.coeffs[ri]);
        beta.push_back(b);
      }
      CoxRelation rel;
      rel.tag = 'I';
      rel.sym_degree = k;
      for (size_t t = 0; t < circuit.size(); ++t) {
        if (lambda[t] == 0) continue;
        CoxTerm term;
        term.coeff = lambda[t];
        term.t_exp = t_exponent(g, dd.factorizations[circuit[t]]);
        for (size_t ri = 0; ri < beta.size(); ++ri)
          term.s_exp.push_back(m.ground[circuit[t]].divisor.coeffs[ri] - beta[ri]);
        rel.terms.push_back(std::move(term));
      }
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<CoxRelation> ideal_J(const GeneratorSet& g) {
  std::vector<CoxRelation> out;
  for (size_t i = 0; i < g.elements.size(); ++i)
    for (size_t j = i; j < g.elements.size(); ++j) {
      const auto& vi = g.elements[i];
      const auto& vj = g.elements[j];
      size_t c = vi.degree + vj.degree;
      if (c > g.k_max) continue;
      const auto& dd = g.per_degree[c - 1];
      const size_t rank1 = g.per_degree[0].bundle.rank;
      QVec prod = sym_multiply(vi.vector, vi.degree, vj.vector, vj.degree, rank1);
      EqDivisor d = vi.divisor + vj.divisor;
      // V = weight-zero sections of S^c E twisted down by D_{v_i} + D_{v_j}.
      Subspace v = Subspace::full(dd.bundle.rank);
      for (size_t ri = 0; ri < d.coeffs.size(); ++ri)
        v = intersect(v, dd.bundle.filtration_at(ri, d.coeffs[ri]));
      if (!member(prod, v))
        throw Error("internal", "ideal_J: product escapes its section space");
      // Lexicographically-first independent spanning subset in ground order.
      std::vector<size_t> basis;
      QMat rows;
      for (size_t gi = 0; gi < dd.matroid.ground.size() && rows.size() < v.dim();
           ++gi) {
        if (!member(dd.matroid.ground[gi].vector, v)) continue;
        rows.push_back(dd.matroid.ground[gi].vector);
        if (rank(rows) == rows.size())
          basis.push_back(gi);
        else
          rows.pop_back();
      }
      if (rows.size() != v.dim())
        throw Error("internal", "ideal_J: ground set does not span the section space");
      auto coords = coordinates_in(rows, prod);
      if (!coords) throw Error("internal", "ideal_J: expansion failed");

      std::vector<size_t> pair_factors;
      pair_factors.push_back(i);
      pair_factors.push_back(j);
      std::vector<unsigned> lhs_t = t_exponent(g, pair_factors);

      // Tautology: the expansion is exactly T_{v_i} T_{v_j} itself.
      if (basis.size() == 1 && (*coords)[0] == 1 &&
          t_exponent(g, dd.factorizations[basis[0]]) == lhs_t &&
          dd.matroid.ground[basis[0]].divisor == d)
        continue;

      CoxRelation rel;
      rel.tag = 'J';
      rel.sym_degree = c;
      CoxTerm lhs;
      lhs.coeff = 1;
      lhs.t_exp = lhs_t;
      lhs.s_exp.assign(d.coeffs.size(), 0);
      rel.terms.push_back(std::move(lhs));
      for (size_t b = 0; b < basis.size(); ++b) {
        if ((*coords)[b] == 0) continue;
        CoxTerm term;
        term.coeff = -(*coords)[b];
        term.t_exp = t_exponent(g, dd.factorizations[basis[b]]);
        for (size_t ri = 0; ri < d.coeffs.size(); ++ri) {
          long long m = dd.matroid.ground[basis[b]].divisor.coeffs[ri] - d.coeffs[ri];
          if (m < 0)
            throw Error("internal", "ideal_J: non-effective twist exponent");
          term.s_exp.push_back(m);
        }
        rel.terms.push_back(std::move(term));
      }
      out.push_back(std::move(rel));
    }
  return out;
}

namespace {
std::vector<CoxRelation> prune_relations(const GeneratorSet& g,
                                         std::vector<CoxRelation> rels);
}  // namespace

CoxPresentation presentation(const ToricVectorBundle& e, size_t k_max) {
  CoxPresentation p;
  p.n_rays = e.fan.n_rays();
  p.fan = e.fan;
  p.gens = frak_M(e, k_max);
  std::vector<size_t> degrees;
  for (size_t k = 1; k <= k_max; ++k) degrees.push_back(k);
  p.relations = ideal_I(p.gens, degrees);
  // Pad term exponents: elements found later enlarge the T-variable list.
  auto j = ideal_J(p.gens);
  p.relations.insert(p.relations.end(), j.begin(), j.end());
  for (auto& rel : p.relations)
    for (auto& term : rel.terms) term.t_exp.resize(p.gens.elements.size(), 0);
  p.relations = prune_relations(p.gens, std::move(p.relations));
  return p;
}

std::pair<size_t, std::vector<long long>> relation_multidegree(
    const GeneratorSet& g, const CoxRelation& r) {
  const auto& term = r.terms.front();
  size_t k = 0;
  std::vector<long long> base(term.s_exp.size(), 0);
  for (size_t v = 0; v < term.t_exp.size(); ++v) {
    if (term.t_exp[v] == 0) continue;
    k += term.t_exp[v] * g.elements[v].degree;
    for (size_t ri = 0; ri < base.size(); ++ri)
      base[ri] -= static_cast<long long>(term.t_exp[v]) *
                  g.elements[v].divisor.coeffs[ri];
  }
  for (size_t ri = 0; ri < base.size(); ++ri) base[ri] += term.s_exp[ri];
  return {k, base};
}

namespace {

// All T-exponent vectors with total symmetric degree k whose forced
// S-exponents (t + sum n_v D_v) are nonnegative; S-exponents returned too.
void enumerate_monomials(
    const GeneratorSet& g, size_t k, const std::vector<long long>& t,
    const std::function<void(const std::vector<unsigned>&,
                             const std::vector<long long>&)>& emit) {
  std::vector<unsigned> n(g.elements.size(), 0);
  std::function<void(size_t, size_t)> rec = [&](size_t v, size_t deg) {
    if (deg == k) {
      std::vector<long long> s = t;
      bool ok = true;
      for (size_t e = 0; e < n.size(); ++e)
        if (n[e])
          for (size_t ri = 0; ri < s.size(); ++ri)
            s[ri] += static_cast<long long>(n[e]) * g.elements[e].divisor.coeffs[ri];
      for (long long c : s)
        if (c < 0) ok = false;
      if (ok) emit(n, s);
      return;
    }
    if (v == n.size()) return;
    for (unsigned cnt = 0; deg + cnt * g.elements[v].degree <= k; ++cnt) {
      n[v] = cnt;
      rec(v + 1, deg + cnt * g.elements[v].degree);
    }
    n[v] = 0;
  };
  rec(0, 0);
}

using MonKey = std::pair<std::vector<unsigned>, std::vector<long long>>;

// Coefficient row of rel multiplied by the monomial with T-exponents n,
// expressed in the basis of monomials of the degree piece indexed by `index`
// (whose base twist is `t`).
QVec instance_row(const GeneratorSet& g, const CoxRelation& rel,
                  const std::vector<unsigned>& n,
                  const std::vector<long long>& t,
                  const std::map<MonKey, size_t>& index) {
  QVec row(index.size(), 0);
  for (const auto& term : rel.terms) {
    std::vector<unsigned> tn = n;
    for (size_t v = 0; v < tn.size(); ++v) tn[v] += term.t_exp[v];
    std::vector<long long> forced = t;
    for (size_t v = 0; v < tn.size(); ++v)
      if (tn[v])
        for (size_t ri = 0; ri < forced.size(); ++ri)
          forced[ri] +=
              static_cast<long long>(tn[v]) * g.elements[v].divisor.coeffs[ri];
    auto it = index.find(std::make_pair(tn, forced));
    if (it == index.end())
      throw Error("internal", "instance_row: monomial outside degree");
    row[it->second] += term.coeff;
  }
  return row;
}

// Keeps a relation only if it is not a consequence, within its own
// multidegree, of monomial multiples of the relations kept before it.  The
// grading is fine enough that degreewise span membership is exact ideal
// membership, so the result is a minimal generating set.
std::vector<CoxRelation> prune_relations(const GeneratorSet& g,
                                         std::vector<CoxRelation> rels) {
  std::vector<CoxRelation> kept;
  for (auto& rel : rels) {
    auto [k, base] = relation_multidegree(g, rel);
    std::map<MonKey, size_t> index;
    enumerate_monomials(g, k, base, [&](const auto& n, const auto& s) {
      index.emplace(std::make_pair(n, s), index.size());
    });
    QMat rows;
    for (const auto& kr : kept) {
      auto [kk, kbase] = relation_multidegree(g, kr);
      if (kk > k) continue;
      std::vector<long long> rem(base.size());
      for (size_t ri = 0; ri < base.size(); ++ri) rem[ri] = base[ri] - kbase[ri];
      enumerate_monomials(g, k - kk, rem, [&](const auto& n, const auto&) {
        rows.push_back(instance_row(g, kr, n, base, index));
      });
    }
    const QVec cand = instance_row(
        g, rel, std::vector<unsigned>(g.elements.size(), 0), base, index);
    const size_t r0 = rows.empty() ? 0 : rank(rows);
    rows.push_back(cand);
    if (rank(rows) > r0) kept.push_back(std::move(rel));
  }
  return kept;
}

}  // namespace

namespace {

// Dimension of the single fine degree (k, t), i.e. one character component.
long long fine_quotient_dimension(const CoxPresentation& p, size_t k,
                                  const std::vector<long long>& t) {
  const GeneratorSet& g = p.gens;
  std::map<std::pair<std::vector<unsigned>, std::vector<long long>>, size_t> index;
  enumerate_monomials(g, k, t, [&](const auto& n, const auto& s) {
    index.emplace(std::make_pair(n, s), index.size());
  });
  QMat rows;
  for (const auto& rel : p.relations) {
    auto [rk, rbase] = relation_multidegree(g, rel);
    if (rk > k) continue;
    std::vector<long long> rem(t.size());
    for (size_t ri = 0; ri < t.size(); ++ri) rem[ri] = t[ri] - rbase[ri];
    enumerate_monomials(g, k - rk, rem, [&](const auto& n, const auto& s) {
      QVec row(index.size(), 0);
      for (const auto& term : rel.terms) {
        std::vector<unsigned> tn = n;
        for (size_t v = 0; v < tn.size(); ++v) tn[v] += term.t_exp[v];
        bool ok = true;
        std::vector<long long> forced = t;
        for (size_t v = 0; v < tn.size(); ++v)
          if (tn[v])
            for (size_t ri = 0; ri < forced.size(); ++ri)
              forced[ri] += static_cast<long long>(tn[v]) *
                            g.elements[v].divisor.coeffs[ri];
        for (long long c : forced)
          if (c < 0) ok = false;
        if (!ok)
          throw Error("internal", "quotient_dimension: negative forced exponent");
        auto it = index.find(std::make_pair(tn, forced));
        if (it == index.end())
          throw Error("internal", "quotient_dimension: monomial outside degree");
        row[it->second] += term.coeff;
      }
      rows.push_back(std::move(row));
    });
  }
  return static_cast<long long>(index.size()) -
         static_cast<long long>(rows.empty() ? 0 : rank(rows));
}

}  // namespace

long long quotient_dimension(const CoxPresentation& p, size_t k,
                             const std::vector<long long>& t) {
  const GeneratorSet& g = p.gens;
  // Characters that can carry a monomial: for each T-exponent vector n of
  // symmetric degree k, u must satisfy <u, rho> >= -(t + sum n D)_rho.
  std::set<IVec> chars;
  std::vector<unsigned> n(g.elements.size(), 0);
  std::function<void(size_t, size_t)> rec = [&](size_t v, size_t deg) {
    if (deg == k) {
      HPolytope poly;
      poly.dim = p.fan.dim;
      for (size_t ri = 0; ri < p.fan.n_rays(); ++ri) {
        long long c = t[ri];
        for (size_t e = 0; e < n.size(); ++e)
          if (n[e])
            c += static_cast<long long>(n[e]) * g.elements[e].divisor.coeffs[ri];
        poly.inequalities.emplace_back(p.fan.rays[ri], c);
      }
      if (is_feasible(poly))
        for (const IVec& x : lattice_points(poly)) {
          IVec u(x.size());
          for (size_t i = 0; i < x.size(); ++i) u[i] = -x[i];
          chars.insert(std::move(u));
        }
      return;
    }
    if (v == n.size()) return;
    for (unsigned cnt = 0; deg + cnt * g.elements[v].degree <= k; ++cnt) {
      n[v] = cnt;
      rec(v + 1, deg + cnt * g.elements[v].degree);
    }
    n[v] = 0;
  };
  rec(0, 0);

  long long total = 0;
  for (const IVec& u : chars) {
    std::vector<long long> tu = t;
    for (size_t ri = 0; ri < p.fan.n_rays(); ++ri)
      tu[ri] += dot(u, p.fan.rays[ri]);
    total += fine_quotient_dimension(p, k, tu);
  }
  return total;
}

bool check_section_semantics(const ToricVectorBundle& e, const CoxPresentation& p) {
  const GeneratorSet& g = p.gens;
  for (const auto& rel : p.relations) {
    auto [k, base] = relation_multidegree(g, rel);
    size_t dim = binomial(e.rank + k - 1, k);
    QVec total(dim, 0);
    for (const auto& term : rel.terms) {
      QVec acc;
      size_t deg = 0;
      for (size_t v = 0; v < term.t_exp.size(); ++v)
        for (unsigned c = 0; c < term.t_exp[v]; ++c) {
          if (acc.empty()) {
            acc = g.elements[v].vector;
            deg = g.elements[v].degree;
          } else {
            acc = sym_multiply(acc, deg, g.elements[v].vector,
                               g.elements[v].degree, e.rank);
            deg += g.elements[v].degree;
          }
        }
      if (acc.empty() || deg != k) return false;
      for (size_t i = 0; i < dim; ++i) total[i] += term.coeff * acc[i];
    }
    for (const auto& c : total)
      if (c != 0) return false;
  }
  return true;
}

}  // namespace tvb
