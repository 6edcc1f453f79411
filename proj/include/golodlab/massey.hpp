#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "golodlab/koszul.hpp"
#include "golodlab/prism.hpp"

namespace golod {

/// ā = (-1)^{|a|+1} a with |a| the cochain degree.
Cochain bar(const Cochain& a);
/// ā in C*(K) with the total degree; a must be homogeneous (zero is returned unchanged).
KoszulCochain bar(const KoszulCochain& a);

/// A class of H̃^d(K_I) ⊂ H^*(C*(K)), given by a cocycle on the full subcomplex K_I.
struct SupportedClass {
  VertexSet support = 0;
  ComplexPtr complex;  // K_I
  Cochain representative;
  /// cohomology(K_I) when already at hand; computed on demand otherwise.
  const HomologyBasis* basis = nullptr;

  int degree() const { return representative.degree; }
  int total_degree() const { return card(support) + degree() + 1; }
  KoszulCochain element() const { return embed_summand(*complex, support, representative); }
};

/// Basis class `index` of H̃^degree(K_I) from cohomology(K_I).
SupportedClass basis_class(const SimplicialComplex& k, VertexSet support, int degree, int index, const Field& f);
/// Coordinates of a class in the basis of cohomology(K_I).
Vector class_coordinates(const SupportedClass& c);

/// Non-zero cohomology component of an element of C*(K) in the summand H̃^degree(K_I).
struct ClassComponent {
  VertexSet support = 0;
  int degree = 0;
  Vector coordinates;
};
/// Class of a cocycle of C*(K), summand by summand; throws DomainError on a non-cocycle.
std::vector<ClassComponent> cohomology_class(const SimplicialComplex& k, const KoszulCochain& x);

/// Family a_{i,j} in C*(K), 0 <= i <= j <= q. The entry (0,q) is optional.
struct DefiningSystem {
  int q = 1;
  std::map<std::pair<int, int>, KoszulCochain> entries;

  bool has(int i, int j) const { return entries.count({i, j}) != 0; }
  const KoszulCochain& at(int i, int j) const;
};

/// Σ_{k=i}^{j-1} ā_{i,k} a_{k+1,j}
KoszulCochain defining_sum(const SimplicialComplex& k, const DefiningSystem& ds, int i, int j);
/// a_{i,i} represents α_i and δa_{i,j} = Σ ā_{i,k} a_{k+1,j} for every stored (i,j) with i < j.
/// Degree mismatches throw DomainError.
bool is_defining_system(const SimplicialComplex& k, const DefiningSystem& ds,
                        const std::vector<SupportedClass>& classes);

struct MasseyOutcome {
  bool defined = false;
  KoszulCochain representative;
  std::vector<ClassComponent> components;
  bool class_is_zero() const { return components.empty(); }
};
/// Representative Σ ā_{0,i} a_{i+1,q} and its class; throws DomainError on an invalid system.
MasseyOutcome massey_evaluate(const SimplicialComplex& k, const DefiningSystem& ds,
                              const std::vector<SupportedClass>& classes);

struct TripleMasseyResult {
  bool defined = false;
  bool pairwise_disjoint = false;
  bool trivial = false;
  /// Summand I_0 ∪ I_1 ∪ I_2 and reduced degree of the product.
  VertexSet support = 0;
  int degree = 0;
  Vector representative_class;
  /// Basis of α·H̃(K_{I∖I_0}) + H̃(K_{I∖I_2})·γ in the same coordinates.
  std::vector<Vector> indeterminacy;
  /// representative_class reduced modulo the indeterminacy; the coset invariant.
  Vector normal_form;
  std::string note;
};
TripleMasseyResult triple_massey_exact(const SimplicialComplex& k, const Field& f, const SupportedClass& alpha,
                                       const SupportedClass& beta, const SupportedClass& gamma);

/// Zeroes every a_{k,l} with k <= i < j <= l; needs I_i ∩ I_j ≠ ∅.
DefiningSystem zero_overlap_system(const DefiningSystem& ds, const std::vector<VertexSet>& supports, int i, int j);

/// Cocycle a on K with j_I^*(a) representing alpha; DomainError "not liftable" otherwise.
Cochain lift_cocycle(const SimplicialComplex& k, const HomologyBasis& k_cohomology, const SupportedClass& alpha);

/// Family a_{i,j} of cochains on K for a partition of V(K), used before restriction to C*(K).
struct StarSystem {
  VertexPartition partition;
  std::map<std::pair<int, int>, Cochain> a;

  const Cochain& at(int i, int j) const;
};

/// μ_p: vertices of parts 0..p go to copy 0, the rest to copy 1 of K ⋆ K.
std::vector<int> mu_vertex_map(const SimplicialComplex& k, const VertexPartition& p, int i);
/// Σ_{p=i}^{j-1} μ_p^*(ā_{i,p} ⋆ a_{p+1,j}), in degree |a_{i,i}| + ... + |a_{j,j}| + 1.
Cochain condition_rhs(const SimplicialComplex& k, const StarSystem& s, int i, int j);
/// P(J)^*(ā_{i,i} ⋆ a_{i+1,i+1}) for J = (I_0 ⊔ ... ⊔ I_i, I_{i+1} ⊔ ... ⊔ I_q).
Cochain build_adjacent(const SimplicialComplex& k, const VertexPartition& p, int i, const Cochain& left,
                       const Cochain& right);
/// Solution of δx = condition_rhs(i, j); VerificationError when the right side is not a cocycle or not exact.
Cochain build_general(const SimplicialComplex& k, const StarSystem& s, int i, int j);

struct DecompositionResidual {
  int k = 0;
  Cochain residual;
  bool exact = false;
};
/// condition_rhs(i, j) - Σ_{s∈Ŝ(j-i,k)} (-1)^{ε(s)+ε(k)} P(I^s)^*δ(a^s), tested for exactness.
DecompositionResidual verify_decomposition(const SimplicialComplex& k, const StarSystem& s, int i, int j, int kk);
/// ε(s) for s ∈ Ŝ(j-i,k) and factor degrees taken from the system.
int epsilon_s(const StarSystem& sys, int i, const Shuffle& s);

/// Full pipeline on a complex whose vertex set is the union of the parts: lifts, adjacent
/// and general entries including (0,q).
StarSystem construct_star_system(const SimplicialComplex& k, const Field& f, const HomologyBasis& k_cohomology,
                                 const VertexPartition& p, const std::vector<SupportedClass>& classes);

/// b_{i,j} = c_{i,j} j^*_{I_i ⊔ ... ⊔ I_j}(a_{i,j}) in C*(K) with the sign
/// c_{i,j} = (-1)^{(j-i) + Σ_{i<=x<y<=j} (|I_x| |a_{y,y}| + inv(I_x, I_y))} that turns the star condition
/// into the defining relation of C*(K).
DefiningSystem restrict_system(const SimplicialComplex& k, const StarSystem& s);

struct CertificateEntry {
  VertexSet support = 0;
  std::vector<VertexSet> parts;
  std::vector<int> degrees;
  std::vector<int> class_indices;
  DefiningSystem system;
  KoszulCochain representative;
  bool condition_holds = false;
  bool defining_system = false;
  bool representative_is_coboundary = false;
  int decomposition_checks = 0;
  bool decomposition_exact = false;

  bool verified() const {
    return condition_holds && defining_system && representative_is_coboundary && decomposition_exact;
  }
};

struct GolodCertificate {
  Field field = Field::rationals();
  int max_arity = 2;
  std::size_t partitions_scanned = 0;
  std::size_t vacuous_partitions = 0;
  std::vector<CertificateEntry> entries;

  bool verified() const;
  /// arity → number of entries
  std::map<int, std::size_t> entries_by_arity() const;
};

/// Every ordered partition of every non-empty I ⊆ V(K) into 2..max_arity parts, every tuple of basis
/// classes. DomainError "not tight" when K fails the precondition; VerificationError
/// "construction failed" names the failing job.
GolodCertificate construct_golod_certificate(const SimplicialComplex& k, const Field& f, int max_arity,
                                             int jobs = 1);

/// Ordered partitions of `set` into exactly `parts` non-empty blocks, in a fixed order.
std::vector<std::vector<VertexSet>> ordered_partitions(VertexSet set, int parts);

}  // namespace golod
