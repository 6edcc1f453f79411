#pragma once

#include <optional>
#include <vector>

#include "golodlab/matrix.hpp"
#include "golodlab/simplicial.hpp"

namespace golod {

/// Cochain on a complex in one degree; values indexed like K.faces(degree).
/// Degree -1 is the reduced augmentation slot (one value, on the empty face).
struct Cochain {
  Field field = Field::rationals();
  int degree = 0;
  Vector values;

  bool is_zero() const { return golod::is_zero(values); }
  bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const SimplicialComplex& k, const Field& f, int degree);
/// Value on a face (must have card = degree + 1); zero when not a face.
Scalar cochain_value(const SimplicialComplex& k, const Cochain& c, FaceMask face);
/// Reduced coboundary: (δc)(ρ) = Σ_m (-1)^m c(∂_m ρ).
Cochain coboundary(const SimplicialComplex& k, const Cochain& c);

/// ∂_d : C_d → C_{d-1}. Rows faces(d-1), columns faces(d). The reduced flavor
/// keeps the augmentation row for d = 0; the unreduced flavor gives 0 rows there.
Matrix boundary_matrix(const SimplicialComplex& k, int d, const Field& f, bool reduced);
/// δ^d : C^d → C^{d+1} (reduced). Transpose of the reduced ∂_{d+1}.
Matrix coboundary_matrix(const SimplicialComplex& k, int d, const Field& f);

/// One degree of (co)homology: class representatives and a coordinate map.
struct HomologyDegree {
  int degree = 0;
  std::vector<Vector> representatives;
  /// betti x (#faces) matrix; applied to a (co)cycle it yields class coordinates
  /// and it annihilates (co)boundaries.
  Matrix projection{Field::rationals(), 0, 0};

  int betti() const { return static_cast<int>(representatives.size()); }
  Vector coordinates(std::span<const Scalar> cycle) const { return projection.apply(cycle); }
};

struct HomologyBasis {
  Field field = Field::rationals();
  bool reduced = false;
  bool cohomology = false;
  int min_degree = 0;
  std::vector<HomologyDegree> degrees;  // index d - min_degree

  /// Empty placeholder when d is out of range.
  const HomologyDegree& at(int d) const;
  int betti(int d) const { return at(d).betti(); }
  std::vector<int> betti_numbers() const;
  int total_rank() const;
};

/// Homology with representatives. Reduced flavor covers degrees -1..dim.
HomologyBasis homology(const SimplicialComplex& k, const Field& f, bool reduced);
/// Reduced cohomology with cocycle representatives, degrees -1..dim.
HomologyBasis cohomology(const SimplicialComplex& k, const Field& f);

/// Chain-level pushforward of a d-chain along f (degenerate images go to 0).
Vector push_chain(const SimplicialMap& f, int d, std::span<const Scalar> chain, const Field& field);
/// Cochain-level pullback along f.
Cochain pull_cochain(const SimplicialMap& f, const Cochain& c);

/// Matrix of f_* on H_d in the homology bases of source and target.
Matrix induced_map(const SimplicialMap& f, const Field& field, int d, bool reduced = false);
bool is_injective(const SimplicialMap& f, const Field& field, bool reduced = false);
/// f^* : H̃^*(target) → H̃^*(source) surjective in every degree.
bool is_surjective_on_cohomology(const SimplicialMap& f, const Field& field);

/// x with δx = c, or nullopt when c is not exact.
std::optional<Cochain> express_as_coboundary(const SimplicialComplex& k, const Cochain& c);

}  // namespace golod
