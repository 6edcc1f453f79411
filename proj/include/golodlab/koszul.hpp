#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golodlab/homology.hpp"

namespace golod {

/// Basis key (I, σ) of C*(K): σ ⊆ I, σ ∈ K, masks over the ambient vertex order.
/// The key (∅, ∅) is the unit in degree 0.
struct KoszulKey {
  VertexSet subset = 0;
  FaceMask face = 0;
  auto operator<=>(const KoszulKey&) const = default;
};

/// |I| + card σ
inline int total_degree(const KoszulKey& k) { return card(k.subset) + card(k.face); }

/// Sparse element of C*(K).
struct KoszulCochain {
  Field field = Field::rationals();
  std::map<KoszulKey, Scalar> terms;

  void add(const KoszulKey& key, const Scalar& value);
  bool is_zero() const { return terms.empty(); }
  /// Degree of a homogeneous element; nullopt for zero or mixed degrees.
  std::optional<int> degree() const;
  KoszulCochain& operator+=(const KoszulCochain& o);
  KoszulCochain& operator-=(const KoszulCochain& o);
  KoszulCochain scaled(const Scalar& s) const;
  bool operator==(const KoszulCochain& o) const { return field == o.field && terms == o.terms; }
};

KoszulCochain koszul_unit(const Field& f);
KoszulCochain koszul_basis(const Field& f, VertexSet subset, FaceMask face);

/// Embeds a cochain on K_I (indexed like K_I.faces) into the summand C̃^*(K_I) of C*(K).
KoszulCochain embed_summand(const SimplicialComplex& k_i, VertexSet subset, const Cochain& c);
/// Component of x in the summand of I and reduced degree d, as a cochain on K_I.
Cochain summand_component(const KoszulCochain& x, const SimplicialComplex& k_i, VertexSet subset, int d);

/// Reduced coboundary of every summand.
KoszulCochain dga_differential(const SimplicialComplex& k, const KoszulCochain& x);
/// Product on C*(K): zero on overlapping supports; otherwise
/// (I,σ)*·(J,τ)* = (-1)^{|I|·card τ + inv(I,J) + inv(σ,τ)} (I∪J, σ∪τ)*.
KoszulCochain dga_product(const SimplicialComplex& k, const KoszulCochain& a, const KoszulCochain& b);
/// ι^*∘⋆ with oriented pullback and no further twist; kept to document why the twist is needed.
KoszulCochain literal_product(const SimplicialComplex& k, const KoszulCochain& a, const KoszulCochain& b);

/// Monomial key v_σ x_τ of R(K), σ ∈ K, σ ∩ τ = ∅. (∅, ∅) is 1.
struct MonomialKey {
  FaceMask v = 0;
  VertexSet x = 0;
  auto operator<=>(const MonomialKey&) const = default;
};

inline int monomial_degree(const MonomialKey& m) { return 2 * card(m.v) + card(m.x); }

struct RKoszulElement {
  Field field = Field::rationals();
  std::map<MonomialKey, Scalar> terms;

  void add(const MonomialKey& key, const Scalar& value);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const RKoszulElement& o) const { return field == o.field && terms == o.terms; }
};

/// d v_i = 0, d x_i = v_i, extended as a derivation; terms outside K vanish.
RKoszulElement r_differential(const SimplicialComplex& k, const RKoszulElement& x);
RKoszulElement r_product(const SimplicialComplex& k, const RKoszulElement& a, const RKoszulElement& b);

/// Sign twist ε(I,σ) = (-1)^{Σ_{s∈σ} rank_I(s)} used by φ.
int phi_sign(const KoszulKey& key);
/// φ(I,σ) = ε(I,σ) v_σ x_{I∖σ}
RKoszulElement phi(const KoszulCochain& x);
KoszulCochain phi_inverse(const RKoszulElement& y);

/// Every basis key of C*(K), unit included, sorted.
std::vector<KoszulKey> koszul_basis_keys(const SimplicialComplex& k);

struct PhiReport {
  std::size_t basis_size = 0;
  std::size_t r_basis_size = 0;
  bool bijective = false;
  bool commutes_with_differential = false;
  bool multiplicative = false;
  std::string first_failure;
  bool passed() const { return bijective && commutes_with_differential && multiplicative; }
};
PhiReport verify_phi_iso(const SimplicialComplex& k, const Field& f);

/// One non-zero Hochster summand H̃^d(K_I), total degree |I| + d + 1.
struct HochsterEntry {
  VertexSet subset = 0;
  int reduced_degree = 0;
  int total_degree = 0;
  int rank = 0;
};

struct HochsterTable {
  Field field = Field::rationals();
  std::vector<HochsterEntry> entries;  // sorted by subset, then degree
  /// total degree → rank, positive degrees only
  std::map<int, int> poincare() const;
};

/// Full subcomplex K_I with its reduced cohomology.
struct SubsetCohomology {
  VertexSet subset = 0;
  ComplexPtr complex;
  HomologyBasis basis;
};

/// Entry I holds K_I for every non-empty I; entry 0 is left empty.
std::vector<SubsetCohomology> subset_cohomology(const SimplicialComplex& k, const Field& f, int jobs = 1);
std::vector<SubsetCohomology> subset_cohomology_serial(const SimplicialComplex& k, const Field& f);
HochsterTable hochster_table(const std::vector<SubsetCohomology>& subsets, const Field& f);
HochsterTable hochster_cohomology(const SimplicialComplex& k, const Field& f, int jobs = 1);
/// Ranks of H^p(C*(K)) computed without the subset grading (p > 0).
std::map<int, int> dga_cohomology_ranks(const SimplicialComplex& k, const Field& f);

struct WeakGolodWitness {
  VertexSet first = 0;
  VertexSet second = 0;
  int first_degree = 0;
  int second_degree = 0;
  int first_class = 0;
  int second_class = 0;
  /// coordinates of the product class in H̃^*(K_{I∪J})
  Vector product;
};

struct WeakGolodResult {
  bool weakly_golod = true;
  std::size_t pairs_checked = 0;
  std::optional<WeakGolodWitness> witness;
};

WeakGolodResult weak_golod_check(const SimplicialComplex& k, const Field& f, int jobs = 1);
WeakGolodResult weak_golod_check_serial(const SimplicialComplex& k, const Field& f);
/// Scan over precomputed subset data.
WeakGolodResult weak_golod_scan(const SimplicialComplex& k, const std::vector<SubsetCohomology>& subsets,
                                const Field& f, int jobs);

}  // namespace golod
