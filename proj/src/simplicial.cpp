#include "golodlab/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "golodlab/errors.hpp"

namespace golod {

std::vector<int> vertices_of(FaceMask m) {
  std::vector<int> out;
  out.reserve(card(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

int inversions(FaceMask a, FaceMask b) {
  int total = 0;
  while (a) {
    int v = std::countr_zero(a);
    total += std::popcount(b & low_mask(v));
    a &= a - 1;
  }
  return total;
}

FaceMask compress(FaceMask m, VertexSet universe) {
  FaceMask out = 0;
  int pos = 0;
  while (universe) {
    FaceMask low = universe & -universe;
    if (m & low) out |= bit(pos);
    ++pos;
    universe &= universe - 1;
  }
  return out;
}

FaceMask expand(FaceMask m, VertexSet universe) {
  FaceMask out = 0;
  int pos = 0;
  while (universe) {
    FaceMask low = universe & -universe;
    if (m & bit(pos)) out |= low;
    ++pos;
    universe &= universe - 1;
  }
  return out;
}

bool lex_less(FaceMask a, FaceMask b) {
  while (a && b) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

VertexLabel VertexLabel::prefixed(int head) const {
  VertexLabel l;
  l.path.reserve(path.size() + 1);
  l.path.push_back(head);
  l.path.insert(l.path.end(), path.begin(), path.end());
  return l;
}

VertexLabel VertexLabel::suffixed(int tail) const {
  VertexLabel l = *this;
  l.path.push_back(tail);
  return l;
}

std::string VertexLabel::to_string() const {
  if (path.size() == 1) return std::to_string(path[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "," : "") << path[i];
  os << ')';
  return os.str();
}

// SimplicialComplex -----------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<VertexLabel> vertices, std::span<const FaceMask> generators)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > static_cast<std::size_t>(kMaxVertices))
    throw DomainError("complexes are limited to " + std::to_string(kMaxVertices) + " vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (!(vertices_[i - 1] < vertices_[i])) throw DomainError("vertex labels must be strictly increasing");

  const FaceMask all = vertex_mask();
  std::unordered_set<FaceMask> faces{0};
  for (int v = 0; v < num_vertices(); ++v) faces.insert(bit(v));
  for (FaceMask g : generators) {
    if (g & ~all) throw DomainError("face uses an undeclared vertex");
    if (faces.count(g)) continue;
    if (card(g) > 21) throw DomainError("face too large to expand");
    // every submask of g, including g itself
    for (FaceMask sub = g;; sub = (sub - 1) & g) {
      faces.insert(sub);
      if (faces.size() > kMaxFaces) throw DomainError("complex exceeds the face budget");
      if (sub == 0) break;
    }
  }

  int top = -1;
  for (FaceMask f : faces) top = std::max(top, dim(f));
  faces_by_dim_.assign(top + 2, {});
  for (FaceMask f : faces) faces_by_dim_[dim(f) + 1].push_back(f);
  for (auto& layer : faces_by_dim_) {
    std::sort(layer.begin(), layer.end(), lex_less);
    for (std::size_t i = 0; i < layer.size(); ++i) index_.emplace(layer[i], static_cast<int>(i));
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexLabel> vertices,
                                                 const std::vector<std::vector<VertexLabel>>& facets) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<FaceMask> gens;
  gens.reserve(facets.size());
  for (const auto& facet : facets) {
    FaceMask m = 0;
    for (const auto& label : facet) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
      if (it == vertices.end() || *it != label)
        throw DomainError("facet vertex " + label.to_string() + " is not declared");
      m |= bit(static_cast<int>(it - vertices.begin()));
    }
    gens.push_back(m);
  }
  return SimplicialComplex(std::move(vertices), gens);
}

SimplicialComplex SimplicialComplex::from_int_facets(const std::vector<std::vector<int>>& facets,
                                                     const std::vector<int>& extra_vertices) {
  std::vector<VertexLabel> vertices;
  for (int v : extra_vertices) vertices.push_back(VertexLabel::plain(v));
  std::vector<std::vector<VertexLabel>> labelled;
  for (const auto& f : facets) {
    auto& out = labelled.emplace_back();
    for (int v : f) {
      out.push_back(VertexLabel::plain(v));
      vertices.push_back(VertexLabel::plain(v));
    }
  }
  return from_facets(std::move(vertices), labelled);
}

int SimplicialComplex::vertex_index(const VertexLabel& label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return -1;
  return static_cast<int>(it - vertices_.begin());
}

const std::vector<FaceMask>& SimplicialComplex::faces(int d) const {
  static const std::vector<FaceMask> kNone;
  if (d < -1 || d + 1 >= static_cast<int>(faces_by_dim_.size())) return kNone;
  return faces_by_dim_[d + 1];
}

int SimplicialComplex::index_of(FaceMask f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

std::vector<FaceMask> SimplicialComplex::facets() const {
  std::vector<FaceMask> out;
  for (int d = dimension(); d >= 0; --d)
    for (FaceMask f : faces(d)) {
      bool maximal = true;
      for (int v = 0; v < num_vertices() && maximal; ++v)
        if (!(f & bit(v)) && contains(f | bit(v))) maximal = false;
      if (maximal) out.push_back(f);
    }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(faces(d).size());
  return out;
}

std::vector<VertexLabel> SimplicialComplex::labels_of(FaceMask f) const {
  std::vector<VertexLabel> out;
  for (int v : vertices_of(f)) out.push_back(vertices_[v]);
  return out;
}

std::string SimplicialComplex::format(FaceMask f) const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices_of(f)) {
    if (!first) out += ",";
    out += vertices_[v].to_string();
    first = false;
  }
  return out + "}";
}

bool SimplicialComplex::all_plain_labels() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const VertexLabel& l) { return l.path.size() == 1; });
}

// Maps ------------------------------------------------------------------------

OrientedFace orient(std::span<const int> targets) {
  FaceMask face = 0;
  int swaps = 0;
  for (std::size_t a = 0; a < targets.size(); ++a) {
    FaceMask b = bit(targets[a]);
    if (face & b) return {0, 0};
    // entries already placed with a larger index are out of order
    swaps += std::popcount(face & ~low_mask(targets[a] + 1));
    face |= b;
  }
  return {face, (swaps & 1) ? -1 : 1};
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != source_->num_vertices())
    throw DomainError("vertex assignment has the wrong length");
  for (int t : assignment_)
    if (t < 0 || t >= target_->num_vertices()) throw DomainError("vertex assignment out of range");
  for (FaceMask f : source_->facets())
    if (!target_->contains(image(f))) throw DomainError("vertex assignment is not simplicial");
}

FaceMask SimplicialMap::image(FaceMask f) const {
  FaceMask out = 0;
  while (f) {
    out |= bit(assignment_[std::countr_zero(f)]);
    f &= f - 1;
  }
  return out;
}

OrientedFace SimplicialMap::oriented_image(FaceMask f) const {
  int buf[kMaxVertices];
  int n = 0;
  while (f) {
    buf[n++] = assignment_[std::countr_zero(f)];
    f &= f - 1;
  }
  return orient(std::span<const int>(buf, n));
}

bool SimplicialMap::is_injective_on_faces() const {
  std::unordered_set<FaceMask> seen;
  for (int d = -1; d <= source_->dimension(); ++d)
    for (FaceMask f : source_->faces(d)) {
      FaceMask img = image(f);
      if (card(img) != card(f) || !seen.insert(img).second) return false;
    }
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (&f.target() != &g.source() && !(f.target() == g.source()))
    throw DomainError("maps are not composable");
  std::vector<int> a(f.assignment().size());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = g.assignment()[f.assignment()[v]];
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(a));
}

SimplicialMap identity_map(ComplexPtr k) {
  std::vector<int> a(k->num_vertices());
  for (int v = 0; v < k->num_vertices(); ++v) a[v] = v;
  return SimplicialMap(k, k, std::move(a));
}

// Partitions --------------------------------------------------------------------

VertexPartition::VertexPartition(VertexSet universe, std::vector<VertexSet> parts)
    : universe_(universe), parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("a partition needs at least one part");
  VertexSet seen = 0;
  for (VertexSet p : parts_) {
    if (p == 0) throw DomainError("partition parts must be non-empty");
    if (p & seen) throw DomainError("partition parts must be disjoint");
    seen |= p;
  }
  if (seen != universe_) throw DomainError("partition parts must cover the vertex set");
}

VertexSet VertexPartition::range(int lo, int hi) const {
  VertexSet out = 0;
  for (int k = std::max(lo, 0); k <= hi && k <= q(); ++k) out |= parts_[k];
  return out;
}

std::vector<int> VertexPartition::part_of() const {
  int n = 64 - std::countl_zero(universe_);
  std::vector<int> out(n, -1);
  for (int k = 0; k <= q(); ++k)
    for (int v : vertices_of(parts_[k])) out[v] = k;
  return out;
}

VertexPartition partition_merge(const VertexPartition& p, int i) {
  if (i < 0 || i >= p.q()) throw DomainError("merge index out of range");
  std::vector<VertexSet> parts;
  for (int k = 0; k <= p.q(); ++k) {
    if (k == i + 1) continue;
    parts.push_back(k == i ? p.part(i) | p.part(i + 1) : p.part(k));
  }
  return VertexPartition(p.universe(), std::move(parts));
}

// Constructions -------------------------------------------------------------------

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet subset) {
  if (subset == 0) throw DomainError("full subcomplex needs a non-empty vertex subset");
  if (subset & ~k.vertex_mask()) throw DomainError("subset is not contained in the vertex set");
  std::vector<VertexLabel> vertices;
  for (int v : vertices_of(subset)) vertices.push_back(k.vertex(v));
  std::vector<FaceMask> gens;
  for (int d = 0; d <= k.dimension(); ++d)
    for (FaceMask f : k.faces(d))
      if ((f & ~subset) == 0) gens.push_back(compress(f, subset));
  return SimplicialComplex(std::move(vertices), gens);
}

SimplicialComplex join(std::span<const SimplicialComplex* const> parts) {
  std::vector<VertexLabel> vertices;
  std::vector<int> offset;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    offset.push_back(static_cast<int>(vertices.size()));
    for (const auto& l : parts[c]->vertices()) vertices.push_back(l.prefixed(static_cast<int>(c)));
  }
  if (vertices.size() > static_cast<std::size_t>(kMaxVertices)) throw DomainError("join has too many vertices");
  std::size_t total = 1;
  for (auto* p : parts) {
    total *= p->num_faces();
    if (total > kMaxFaces) throw DomainError("join exceeds the face budget");
  }
  // facets of a join are unions of facets
  std::vector<FaceMask> gens{0};
  for (std::size_t c = 0; c < parts.size(); ++c) {
    std::vector<FaceMask> next;
    auto fs = parts[c]->facets();
    if (fs.empty()) fs.push_back(0);
    for (FaceMask g : gens)
      for (FaceMask f : fs) next.push_back(g | (f << offset[c]));
    gens = std::move(next);
  }
  return SimplicialComplex(std::move(vertices), gens);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  const SimplicialComplex* parts[] = {&k, &l};
  return join(std::span<const SimplicialComplex* const>(parts, 2));
}

SimplicialComplex join_power(const SimplicialComplex& k, int copies) {
  if (copies < 1) throw DomainError("join power needs at least one copy");
  std::vector<const SimplicialComplex*> parts(copies, &k);
  return join(std::span<const SimplicialComplex* const>(parts));
}

SimplicialComplex ordered_product(const SimplicialComplex& k, int q) {
  if (q < 0) throw DomainError("negative simplex dimension");
  const int n = k.num_vertices();
  if (n * (q + 1) > kMaxVertices) throw DomainError("ordered product has too many vertices");
  std::vector<VertexLabel> vertices;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i <= q; ++i) vertices.push_back(k.vertex(v).suffixed(i));

  // maximal chains only: extend while possible
  std::vector<FaceMask> gens;
  std::function<void(int, int, FaceMask, FaceMask)> grow = [&](int v, int i, FaceMask chain, FaceMask proj) {
    bool extended = false;
    for (int w = v; w < n; ++w) {
      FaceMask p2 = proj | bit(w);
      if (!k.contains(p2)) continue;
      for (int j = i; j <= q; ++j) {
        if (w == v && j == i) continue;
        extended = true;
        grow(w, j, chain | bit(product_vertex(w, j, q)), p2);
      }
    }
    if (!extended) gens.push_back(chain);
  };
  for (int v = 0; v < n; ++v)
    for (int i = 0; i <= q; ++i) grow(v, i, bit(product_vertex(v, i, q)), bit(v));
  return SimplicialComplex(std::move(vertices), gens);
}

SimplicialMap iota(const SimplicialComplex& k, VertexSet i, VertexSet j) {
  if (i == 0 || j == 0) throw DomainError("iota needs non-empty subsets");
  if (i & j) throw DomainError("iota needs disjoint subsets");
  auto src = share(full_subcomplex(k, i | j));
  SimplicialComplex ki = full_subcomplex(k, i);
  auto tgt = share(join(ki, full_subcomplex(k, j)));
  std::vector<int> a;
  for (int v : vertices_of(i | j))
    a.push_back((i & bit(v)) ? rank_in(i, v) : ki.num_vertices() + rank_in(j, v));
  return SimplicialMap(src, tgt, std::move(a));
}

SimplicialMap inclusion(const SimplicialComplex& k, VertexSet subset) {
  auto src = share(full_subcomplex(k, subset));
  return SimplicialMap(src, share(k), vertices_of(subset));
}

namespace {

ComplexPtr cached_power(const ComplexPtr& k, int copies) { return share(join_power(*k, copies)); }

}  // namespace

SimplicialMap h_map(const ComplexPtr& k, const VertexPartition& p, int i) {
  if (i < 0 || i > p.q()) throw DomainError("h_map level out of range");
  if (p.universe() != k->vertex_mask()) throw DomainError("partition does not match the complex");
  const int n = k->num_vertices();
  auto part = p.part_of();
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = std::min(part[v], i) * n + v;
  return SimplicialMap(k, cached_power(k, p.q() + 1), std::move(a));
}

SimplicialMap big_homotopy(const ComplexPtr& k, const VertexPartition& p) {
  if (p.universe() != k->vertex_mask()) throw DomainError("partition does not match the complex");
  const int n = k->num_vertices(), q = p.q();
  auto part = p.part_of();
  std::vector<int> a(n * (q + 1));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i <= q; ++i) a[product_vertex(v, i, q)] = std::min(part[v], i) * n + v;
  return SimplicialMap(share(ordered_product(*k, q)), cached_power(k, q + 1), std::move(a));
}

SimplicialMap mu_map(const ComplexPtr& k, const VertexPartition& p, int i) {
  if (i < 0 || i >= p.q()) throw DomainError("mu_map index out of range");
  if (p.universe() != k->vertex_mask()) throw DomainError("partition does not match the complex");
  const int n = k->num_vertices();
  auto part = p.part_of();
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = (part[v] <= i ? 0 : n) + v;
  return SimplicialMap(k, cached_power(k, 2), std::move(a));
}

}  // namespace golod
