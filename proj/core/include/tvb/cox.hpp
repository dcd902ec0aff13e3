#pragma once

#include "tvb/positivity.hpp"

namespace tvb {

/// Generators of the Cox ring beyond the base: vectors of the symmetric
/// power matroids that are not symmetric products (with matching divisor)
/// of lower-degree generators.
struct GeneratorSet {
  struct Element {
    QVec vector;       // in S^degree coordinates
    size_t degree = 1;
    EqDivisor divisor;
  };
  std::vector<Element> elements;  // degree-ascending, ground order inside
  size_t k_max = 0;
  // First degree from which on (through k_max) nothing fresh appeared.
  std::optional<size_t> stabilized_at;
  std::vector<size_t> fresh_degrees;  // degrees >= 2 that contributed

  /// Per symmetric degree k (index k-1): the seeded matroid of S^k E and,
  /// for each ground vector, its factorization into element indices.
  struct DegreeData {
    ToricVectorBundle bundle;  // S^k E
    Matroid matroid;
    std::vector<std::vector<size_t>> factorizations;
  };
  std::vector<DegreeData> per_degree;
};

GeneratorSet frak_M(const ToricVectorBundle& e, size_t k_max);

struct MdsStatus {
  // True when every filtration subspace has dimension 0, 1, or the rank;
  // then the generator set is provably finite.
  bool definitive = false;
  std::optional<size_t> stabilized_through;  // = k_max when evidence holds
  std::vector<size_t> fresh_degrees;
};

MdsStatus mds_status(const ToricVectorBundle& e, size_t k_max);

/// One monomial of a relation: coeff * prod T_v^{t_exp[v]} * prod
/// S_rho^{s_exp[rho]}.
struct CoxTerm {
  Rational coeff;
  std::vector<unsigned> t_exp;   // indexed by GeneratorSet element
  std::vector<long long> s_exp;  // indexed by ray, always >= 0
};

struct CoxRelation {
  char tag = 'I';  // 'I' (single symmetric degree) or 'J' (mixed degrees)
  size_t sym_degree = 0;
  std::vector<CoxTerm> terms;
};

struct CoxPresentation {
  size_t n_rays = 0;
  Fan fan;  // needed to decompose divisor classes into characters
  GeneratorSet gens;
  std::vector<CoxRelation> relations;
};

std::vector<CoxRelation> ideal_I(const GeneratorSet& g,
                                 const std::vector<size_t>& degrees);
std::vector<CoxRelation> ideal_J(const GeneratorSet& g);

CoxPresentation presentation(const ToricVectorBundle& e, size_t k_max);

// (sym degree; base coefficients) shared by all terms of the relation.
std::pair<size_t, std::vector<long long>> relation_multidegree(
    const GeneratorSet& g, const CoxRelation& r);

// Dimension of the degree-(k, [t]) piece of the presented quotient, graded
// by (symmetric degree, divisor class): the sum over characters u of the
// monomials with S-exponents t + div(chi^u) + sum n_v D_v, modulo the span
// of relation multiples in each character component. Equals
// h0_dim(twist(sym_power(E, k), t)) when the generators generate.
long long quotient_dimension(const CoxPresentation& p, size_t k,
                             const std::vector<long long>& t);

// Substitutes every T_v by its vector (and S_rho by 1) and checks each
// relation vanishes in S^k coordinates.
bool check_section_semantics(const ToricVectorBundle& e, const CoxPresentation& p);

}  // namespace tvb
