#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golodlab/koszul.hpp"
#include "golodlab/massey.hpp"

namespace golod {

struct TightnessOptions {
  bool reduced = false;
  /// Also demand that K is connected.
  bool require_connected = false;
  /// Check every subset instead of stopping at the first failure.
  bool full_table = false;
  int jobs = 1;
};

struct SubsetInjectivity {
  VertexSet subset = 0;
  bool injective = true;
  /// Lowest degree with a non-trivial kernel, when not injective.
  int failing_degree = 0;
};

struct TightnessReport {
  Field field = Field::rationals();
  bool reduced = false;
  bool require_connected = false;
  bool connected = true;
  bool tight = true;
  /// First failing subset in (cardinality, mask) order; V(K) when only connectivity fails.
  std::optional<VertexSet> witness;
  int witness_degree = 0;
  std::size_t subsets_checked = 0;
  std::vector<SubsetInjectivity> table;
};

/// H_*(K_I) → H_*(K) injective for every non-empty I, subsets in (cardinality, mask) order.
TightnessReport is_tight(const SimplicialComplex& k, const Field& f, const TightnessOptions& options = {});
TightnessReport is_tight_serial(const SimplicialComplex& k, const Field& f, const TightnessOptions& options = {});
/// Injectivity of H_*(K_I) → H_*(K) for one subset.
SubsetInjectivity subset_injectivity(const SimplicialComplex& k, const HomologyBasis& k_homology, VertexSet subset,
                                     const Field& f, bool reduced);

bool is_neighborly(const SimplicialComplex& k);

/// binom(m-d-1, 2) == binom(d+2, 2) * h1; DomainError when d < 3.
bool tight_neighborly_check(long long m, long long d, long long h1);
/// Same with m = |V(K)|, d = dim K and h1 = dim H_1(K; Q).
bool tight_neighborly_check(const SimplicialComplex& k);

/// Necessary-condition heuristics, not a manifold recognizer.
struct ManifoldAnnotations {
  bool pure = false;
  bool ridges_in_two_facets = false;
  bool connected = false;
  int top_rank = 0;
  bool closed_orientable_candidate() const { return pure && ridges_in_two_facets && connected && top_rank == 1; }
};
ManifoldAnnotations manifold_annotations(const SimplicialComplex& k, const Field& f);

struct ReportOptions {
  std::vector<Field> fields;
  int max_arity = 3;
  bool certificate = true;
  int jobs = 1;
};

struct FieldReport {
  Field field = Field::rationals();
  std::vector<int> betti;          // unreduced
  std::vector<int> reduced_betti;  // degrees -1..dim
  TightnessReport tight;
  TightnessReport tight_reduced;
  TightnessReport tight_connected;
  WeakGolodResult weak_golod;
  HochsterTable hochster;
  std::optional<GolodCertificate> certificate;
  std::string certificate_note;
  ManifoldAnnotations annotations;
};

struct ComplexReport {
  std::string name;
  std::vector<std::size_t> f_vector;
  long long euler_characteristic = 0;
  bool neighborly = false;
  std::optional<bool> tight_neighborly;
  std::vector<FieldReport> fields;
};

/// Aggregates every analysis for each field; duplicate fields are dropped.
ComplexReport full_report(const std::string& name, const SimplicialComplex& k, const ReportOptions& options);

}  // namespace golod
