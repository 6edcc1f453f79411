#pragma once

#include <functional>
#include <map>
#include <vector>

#include "golodlab/homology.hpp"
#include "golodlab/shuffle.hpp"

namespace golod {

/// Integer chain keyed by face mask.
using IntChain = std::map<FaceMask, long long>;

/// Vertex rule of a map K⊗Δ^q → L: rule[product_vertex(v, l, q)] = target vertex index.
using VertexRule = std::vector<int>;

/// σ⊙s as the ordered list of product vertex indices (v_m, l), length p+q+1.
std::vector<int> sigma_odot(FaceMask sigma, const Shuffle& s);
/// σ⊙s as a face of K⊗Δ^q.
FaceMask sigma_odot_face(FaceMask sigma, const Shuffle& s);

/// P_H(σ) = Σ_s sgn(s) H_*(σ⊙s) as an integer chain on the target vertex indices.
IntChain prism_chain(FaceMask sigma, int q, const VertexRule& rule);
/// Number of (σ, s) pairs whose image under the rule is degenerate.
std::size_t count_collapses(const SimplicialComplex& k, int q, const VertexRule& rule);

/// Rule of H∘(1⊗d^i) : K⊗Δ^{q-1} → L.
VertexRule compose_coface(const VertexRule& rule, int n, int q, int i);
/// Rule of g∘H for a vertex map g of the target.
VertexRule compose_after(std::span<const int> g, const VertexRule& rule);

/// Higher prism operator of a simplicial map H : K⊗Δ^q → L, stored as sparse integer columns.
class PrismOperator {
 public:
  PrismOperator(ComplexPtr source, int q, VertexRule rule, ComplexPtr target = nullptr);

  const SimplicialComplex& source() const { return *source_; }
  int q() const { return q_; }
  const VertexRule& rule() const { return rule_; }
  /// Column for the i-th face of dimension d (d >= 0).
  const IntChain& column(int d, std::size_t i) const { return columns_[d][i]; }
  /// Dense matrix C_d(K) → C_{d+q}(L); needs a materialized target.
  Matrix matrix(int d, const Field& f) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  int q_;
  VertexRule rule_;
  std::vector<std::vector<IntChain>> columns_;
};

/// Builds P_H for H whose source is ordered_product(K, q).
PrismOperator build_prism(const SimplicialMap& h, int q);
/// Recovers K from a source of the form K⊗Δ^q (throws DomainError otherwise).
SimplicialComplex product_base(const SimplicialComplex& product, int q);

/// Rule of H_I: (v, l) ↦ copy min(part(v), l), vertex v.
VertexRule homotopy_rule(const SimplicialComplex& k, const VertexPartition& p);
PrismOperator prism_P(const ComplexPtr& k, const VertexPartition& p);

/// Nonzero entries of a residual, keyed by source degree and faces.
struct Residual {
  struct Entry {
    int degree;
    FaceMask source;
    FaceMask target;
    Scalar value;
  };
  std::vector<Entry> entries;
  bool is_zero() const { return entries.empty(); }
};

/// ∂P_H + (-1)^{q-1} P_H ∂ - Σ_i (-1)^i P_{H∘(1⊗d^i)} on unreduced chains of degree >= 0.
Residual verify_boundary_identity(const SimplicialComplex& k, int q, const VertexRule& rule, const Field& f);
Residual verify_boundary_identity(const SimplicialMap& h, int q, const Field& f);
/// Same identity with the right side expanded through μ_i and the merged partitions I(i).
Residual verify_boundary_identity_I(const SimplicialComplex& k, const VertexPartition& p, const Field& f);

/// Value of a cochain on a face of some target complex, by vertex mask.
using CochainEvaluator = std::function<Scalar(FaceMask)>;

/// a_0⋆⋯⋆a_m on K^{⋆(m+1)}; blocks are read positionally from copy-major masks.
CochainEvaluator star_evaluator(const SimplicialComplex& k, std::vector<Cochain> blocks);
/// (δc)(ρ) = Σ_m (-1)^m c(∂_m ρ)
CochainEvaluator coboundary_evaluator(CochainEvaluator c, Field f);
/// Oriented pullback along a vertex map.
CochainEvaluator pullback_evaluator(CochainEvaluator c, std::vector<int> vertex_map, Field f);
/// Restriction of an evaluator to a dense cochain on K.
Cochain tabulate(const SimplicialComplex& k, const CochainEvaluator& c, int degree, const Field& f);

/// (P_H^* c) in degree p on K, for the map with the given rule.
Cochain prism_pullback(const SimplicialComplex& k, int q, const VertexRule& rule, const CochainEvaluator& c, int p,
                       const Field& f);

/// Vertex map of 1_{K^{⋆i}} ⋆ μ_i ⋆ 1_{K^{⋆(q-i-1)}} : K^{⋆q} → K^{⋆(q+1)}.
std::vector<int> mu_insert_map(const SimplicialComplex& k, const VertexPartition& p, int i);

/// (P(I)^*δ + (-1)^{q-1}δP(I)^*)(A) - Σ_i (-1)^i P(I(i))^*(1⋆μ_i⋆1)^*(A) for A = a_0⋆⋯⋆a_q.
Cochain prism_lemma_residual(const SimplicialComplex& k, const VertexPartition& p, const std::vector<Cochain>& a,
                             const Field& f);

}  // namespace golod
