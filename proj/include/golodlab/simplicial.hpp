#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace golod {

/// Faces and vertex subsets are bit masks over a complex's vertex indices.
/// Vertex indices follow the label order, so ascending bits = ascending vertices.
using FaceMask = std::uint64_t;
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr std::size_t kMaxFaces = std::size_t{1} << 21;

inline int card(FaceMask m) { return std::popcount(m); }
inline int dim(FaceMask m) { return std::popcount(m) - 1; }
inline FaceMask bit(int v) { return FaceMask{1} << v; }
inline FaceMask low_mask(int n) { return n >= 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1; }

/// Ascending vertex indices of a mask.
std::vector<int> vertices_of(FaceMask m);
/// Number of pairs (a, b) with a in `a`, b in `b`, a > b.
int inversions(FaceMask a, FaceMask b);
/// Position of vertex v among the members of `set` (number of members below v).
inline int rank_in(VertexSet set, int v) { return std::popcount(set & low_mask(v)); }

/// Packs the bits of `m` selected by `universe` into the low positions.
FaceMask compress(FaceMask m, VertexSet universe);
/// Inverse of compress: spreads low bits back onto the members of `universe`.
FaceMask expand(FaceMask m, VertexSet universe);

/// Lexicographic order on ascending vertex sequences; used for every basis.
bool lex_less(FaceMask a, FaceMask b);

struct VertexLabel {
  std::vector<int> path;

  static VertexLabel plain(int v) { return VertexLabel{{v}}; }
  VertexLabel prefixed(int head) const;
  VertexLabel suffixed(int tail) const;
  std::string to_string() const;

  auto operator<=>(const VertexLabel&) const = default;
  bool operator==(const VertexLabel&) const = default;
};

/// Downward-closed family of faces over an ordered vertex set. Immutable.
class SimplicialComplex {
 public:
  /// `generators` are masks over `vertices` (which must be strictly increasing);
  /// the closure is taken and every vertex becomes a singleton face.
  SimplicialComplex(std::vector<VertexLabel> vertices, std::span<const FaceMask> generators);

  static SimplicialComplex from_facets(std::vector<VertexLabel> vertices,
                                       const std::vector<std::vector<VertexLabel>>& facets);
  /// Plain integer labels; the vertex set is the union of the facets and `extra_vertices`.
  static SimplicialComplex from_int_facets(const std::vector<std::vector<int>>& facets,
                                           const std::vector<int>& extra_vertices = {});

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const VertexLabel& vertex(int i) const { return vertices_[i]; }
  int vertex_index(const VertexLabel& label) const;
  VertexSet vertex_mask() const { return low_mask(num_vertices()); }

  /// Largest face dimension; -1 for the void-vertex complex {∅}.
  int dimension() const { return static_cast<int>(faces_by_dim_.size()) - 2; }
  /// Faces of dimension `d` (d >= -1) in lexicographic order; empty when out of range.
  const std::vector<FaceMask>& faces(int d) const;
  std::size_t num_faces() const { return index_.size(); }
  bool contains(FaceMask f) const { return index_.count(f) != 0; }
  /// Position of `f` within faces(dim f), or -1.
  int index_of(FaceMask f) const;

  std::vector<FaceMask> facets() const;
  /// f_0, f_1, ..., f_dim (the empty face is not counted).
  std::vector<std::size_t> f_vector() const;
  std::vector<VertexLabel> labels_of(FaceMask f) const;
  /// "{1,3}" in vertex labels.
  std::string format(FaceMask f) const;
  bool all_plain_labels() const;

  bool operator==(const SimplicialComplex& o) const {
    return vertices_ == o.vertices_ && faces_by_dim_ == o.faces_by_dim_;
  }

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<std::vector<FaceMask>> faces_by_dim_;  // index d+1
  std::unordered_map<FaceMask, int> index_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex k) { return std::make_shared<const SimplicialComplex>(std::move(k)); }

/// Image of an ordered list of target vertices as an oriented simplex.
/// sign is 0 when two entries coincide (degenerate image).
struct OrientedFace {
  FaceMask face = 0;
  int sign = 0;
};
OrientedFace orient(std::span<const int> targets);

/// Vertex map between complexes that sends faces to faces.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> assignment);

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }

  /// Set-theoretic image (duplicates collapse).
  FaceMask image(FaceMask f) const;
  /// Chain-level image: sign of the sorting permutation, 0 when degenerate.
  OrientedFace oriented_image(FaceMask f) const;
  bool is_injective_on_faces() const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<int> assignment_;
};

/// g ∘ f
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(ComplexPtr k);

/// Ordered partition V(K) = I_0 ⊔ ... ⊔ I_q into non-empty parts.
class VertexPartition {
 public:
  VertexPartition(VertexSet universe, std::vector<VertexSet> parts);
  VertexPartition(const SimplicialComplex& k, std::vector<VertexSet> parts)
      : VertexPartition(k.vertex_mask(), std::move(parts)) {}

  VertexSet universe() const { return universe_; }
  const std::vector<VertexSet>& parts() const { return parts_; }
  const VertexSet& part(int k) const { return parts_[k]; }
  /// q, so that the parts are I_0..I_q.
  int q() const { return static_cast<int>(parts_.size()) - 1; }
  /// Union of parts lo..hi inclusive (empty when lo > hi).
  VertexSet range(int lo, int hi) const;
  /// Part index of each vertex index (-1 outside the universe).
  std::vector<int> part_of() const;

  bool operator==(const VertexPartition&) const = default;

 private:
  VertexSet universe_;
  std::vector<VertexSet> parts_;
};

// Constructions -------------------------------------------------------------

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet subset);
/// n-ary join; vertex (c, v) gets label (c, path(v)), ordered copy-major.
SimplicialComplex join(std::span<const SimplicialComplex* const> parts);
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex join_power(const SimplicialComplex& k, int copies);
/// K ⊗ Δ^q; vertex (v, i) has label (path(v), i) and index v*(q+1)+i.
SimplicialComplex ordered_product(const SimplicialComplex& k, int q);
inline int product_vertex(int v, int level, int q) { return v * (q + 1) + level; }

/// ι_{I,J}: K_{I∪J} → K_I ⋆ K_J.
SimplicialMap iota(const SimplicialComplex& k, VertexSet i, VertexSet j);
/// Inclusion j_I: K_I → K.
SimplicialMap inclusion(const SimplicialComplex& k, VertexSet subset);
/// h_I^i: K → K^{⋆(q+1)}.
SimplicialMap h_map(const ComplexPtr& k, const VertexPartition& p, int i);
/// H_I: K ⊗ Δ^q → K^{⋆(q+1)}.
SimplicialMap big_homotopy(const ComplexPtr& k, const VertexPartition& p);
/// μ_i: K → K ⋆ K.
SimplicialMap mu_map(const ComplexPtr& k, const VertexPartition& p, int i);

/// I(i): merges parts i and i+1.
VertexPartition partition_merge(const VertexPartition& p, int i);

}  // namespace golod
