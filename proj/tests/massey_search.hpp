#pragma once

// Exhaustive defining-system search for triple products of degree-0 classes over F_2.

#include <set>
#include <vector>

#include "golodlab/massey.hpp"

namespace search {

struct TripleSearch {
  int systems = 0;
  /// Distinct pairings of the representative with the fundamental cycle.
  std::set<int> parities;
  bool contains_zero() const { return parities.count(0) == 1; }
};

/// Every reduced 0-cochain over F_2 on n vertices.
inline std::vector<golod::Cochain> all_vertex_cochains(const golod::Field& f, int n) {
  std::vector<golod::Cochain> out;
  for (int bits = 0; bits < (1 << n); ++bits) {
    golod::Cochain c{f, 0, {}};
    for (int v = 0; v < n; ++v) c.values.push_back(f.from_int(bits >> v & 1));
    out.push_back(c);
  }
  return out;
}

/// Triple ⟨α_0, α_1, α_2⟩ on a cycle graph K whose supports are two-vertex sets: every cocycle
/// representative of each non-zero class, every a_01 and a_12 with the right coboundary. The
/// representative lies in H̃^1(K) ≅ F_2, detected by summing its values over all edges.
inline TripleSearch search_cycle_triple(const golod::SimplicialComplex& k, const golod::VertexSet supports[3]) {
  using namespace golod;
  const Field f = Field::prime(2);
  const auto k01 = full_subcomplex(k, supports[0] | supports[1]);
  const auto k12 = full_subcomplex(k, supports[1] | supports[2]);
  const auto reps = std::vector<Cochain>{Cochain{f, 0, {f.one(), f.zero()}}, Cochain{f, 0, {f.zero(), f.one()}}};
  const auto x01s = all_vertex_cochains(f, k01.num_vertices());
  const auto x12s = all_vertex_cochains(f, k12.num_vertices());
  TripleSearch out;
  for (const auto& r0 : reps)
    for (const auto& r1 : reps)
      for (const auto& r2 : reps) {
        const auto a0 = embed_summand(full_subcomplex(k, supports[0]), supports[0], r0);
        const auto a1 = embed_summand(full_subcomplex(k, supports[1]), supports[1], r1);
        const auto a2 = embed_summand(full_subcomplex(k, supports[2]), supports[2], r2);
        const auto rhs01 = dga_product(k, bar(a0), a1);
        const auto rhs12 = dga_product(k, bar(a1), a2);
        for (const auto& x01 : x01s) {
          const auto a01 = embed_summand(k01, supports[0] | supports[1], x01);
          if (!(dga_differential(k, a01) == rhs01)) continue;
          for (const auto& x12 : x12s) {
            const auto a12 = embed_summand(k12, supports[1] | supports[2], x12);
            if (!(dga_differential(k, a12) == rhs12)) continue;
            KoszulCochain rep = dga_product(k, bar(a0), a12);
            rep += dga_product(k, bar(a01), a2);
            const Cochain edges = summand_component(rep, k, k.vertex_mask(), 1);
            int parity = 0;
            for (const auto& v : edges.values) parity ^= static_cast<int>(v.residue());
            out.parities.insert(parity);
            ++out.systems;
          }
        }
      }
  return out;
}

}  // namespace search
