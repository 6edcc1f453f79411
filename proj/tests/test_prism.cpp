#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>

#include "golodlab/errors.hpp"
#include "golodlab/io.hpp"
#include "golodlab/massey.hpp"
#include "golodlab/prism.hpp"

using namespace golod;

namespace {

FaceMask m(std::initializer_list<int> vs) {
  FaceMask r = 0;
  for (int v : vs) r |= bit(v);
  return r;
}

// Reference prism operator on integer chains keyed by sorted vertex lists.
using RefChain = std::map<std::vector<int>, long long>;

std::vector<std::pair<int, int>> ref_odot(const std::vector<int>& sigma, const std::vector<int>& s) {
  const int q = static_cast<int>(s.size()) - 2;
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l <= q; ++l)
    for (int x = s[l]; x <= s[l + 1]; ++x) out.push_back({sigma[x], l});
  return out;
}

void add_oriented(RefChain& c, std::vector<int> targets, long long coeff) {
  int sign = 1;
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) return;
      if (targets[i] > targets[j]) sign = -sign;
    }
  std::sort(targets.begin(), targets.end());
  c[targets] += sign * coeff;
  if (c[targets] == 0) c.erase(targets);
}

RefChain ref_prism(const std::vector<int>& sigma, int q, const VertexRule& rule) {
  RefChain out;
  const int p = static_cast<int>(sigma.size()) - 1;
  for (const auto& s : enumerate_shuffles(p, q)) {
    std::vector<int> targets;
    for (auto [v, l] : ref_odot(sigma, s.entries())) targets.push_back(rule[product_vertex(v, l, q)]);
    add_oriented(out, targets, sgn(s));
  }
  return out;
}

RefChain ref_boundary(const RefChain& c) {
  RefChain out;
  for (const auto& [face, coeff] : c)
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (face.size() == 1) continue;
      auto g = face;
      g.erase(g.begin() + i);
      out[g] += (i % 2 ? -1 : 1) * coeff;
      if (out[g] == 0) out.erase(g);
    }
  return out;
}

void add_scaled(RefChain& into, const RefChain& c, long long coeff) {
  for (const auto& [face, v] : c) {
    into[face] += coeff * v;
    if (into[face] == 0) into.erase(face);
  }
}

/// ∂P_H(σ) + (-1)^{q-1} P_H(∂σ) - Σ_i (-1)^i P_{H∘(1⊗d^i)}(σ) over the integers.
RefChain ref_identity(const std::vector<int>& sigma, int n, int q, const VertexRule& rule) {
  RefChain r = ref_boundary(ref_prism(sigma, q, rule));
  if (sigma.size() > 1)
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      auto face = sigma;
      face.erase(face.begin() + i);
      const long long sign = (i % 2 ? -1 : 1) * (q % 2 ? 1 : -1);
      add_scaled(r, ref_prism(face, q, rule), sign);
    }
  if (q >= 1)
    for (int i = 0; i <= q; ++i) {
      VertexRule sub(static_cast<std::size_t>(n) * q);
      for (int v = 0; v < n; ++v)
        for (int l = 0; l < q; ++l) sub[product_vertex(v, l, q - 1)] = rule[product_vertex(v, l < i ? l : l + 1, q)];
      add_scaled(r, ref_prism(sigma, q - 1, sub), i % 2 ? 1 : -1);
    }
  return r;
}

SimplicialComplex random_complex(std::mt19937& rng, int max_vertices) {
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
  std::vector<std::vector<int>> facets;
  const int count = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int x = 0; x < count; ++x) {
    std::vector<int> f;
    for (int v : vertices_of(mask(rng))) f.push_back(v + 1);
    facets.push_back(f);
  }
  std::vector<int> all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  return SimplicialComplex::from_int_facets(facets, all);
}

}  // namespace

TEST_CASE("sigma odot s fixtures") {
  const FaceMask ab = m({0, 1});
  CHECK(sigma_odot(ab, Shuffle(1, {0, 1, 1})) ==
        std::vector<int>{product_vertex(0, 0, 1), product_vertex(1, 0, 1), product_vertex(1, 1, 1)});
  CHECK(sigma_odot(ab, Shuffle(1, {0, 0, 1})) ==
        std::vector<int>{product_vertex(0, 0, 1), product_vertex(0, 1, 1), product_vertex(1, 1, 1)});
  CHECK(sigma_odot(m({0, 2}), Shuffle(1, {0, 1})) == std::vector<int>{product_vertex(0, 0, 0), product_vertex(2, 0, 0)});
}

TEST_CASE("sigma odot s is a chain of the ordered product") {
  const auto k = load_catalog("bd-simplex-3");
  for (int q = 0; q <= 3; ++q) {
    const auto prod = ordered_product(k, q);
    for (int d = 0; d <= k.dimension(); ++d)
      for (FaceMask sigma : k.faces(d))
        for (const auto& s : enumerate_shuffles(d, q)) {
          const FaceMask f = sigma_odot_face(sigma, s);
          CHECK(card(f) == d + q + 1);
          CHECK(prod.contains(f));
          std::vector<int> verts;
          for (int v : vertices_of(sigma)) verts.push_back(v);
          std::vector<int> expected;
          for (auto [v, l] : ref_odot(verts, s.entries())) expected.push_back(product_vertex(v, l, q));
          CHECK(sigma_odot(sigma, s) == expected);
        }
  }
}

TEST_CASE("prism chains agree with the reference on random rules") {
  std::mt19937 rng(71);
  for (int t = 0; t < 60; ++t) {
    const auto k = random_complex(rng, 5);
    const int q = std::uniform_int_distribution<int>(0, 3)(rng);
    const int targets = std::uniform_int_distribution<int>(1, 8)(rng);
    VertexRule rule(static_cast<std::size_t>(k.num_vertices()) * (q + 1));
    for (auto& x : rule) x = std::uniform_int_distribution<int>(0, targets - 1)(rng);
    for (int d = 0; d <= k.dimension(); ++d)
      for (FaceMask sigma : k.faces(d)) {
        const IntChain got = prism_chain(sigma, q, rule);
        RefChain as_ref;
        for (const auto& [face, c] : got) as_ref[vertices_of(face)] = c;
        CHECK(as_ref == ref_prism(vertices_of(sigma), q, rule));
        CHECK(got.size() <= static_cast<std::size_t>(enumerate_shuffles(d, q).size()));
      }
  }
}

TEST_CASE("q = 0 gives the chain map of the vertex rule") {
  const auto k = share(SimplicialComplex::from_int_facets({{1, 2, 3}, {3, 4}}));
  const auto target = share(SimplicialComplex::from_int_facets({{1, 2, 3}}));
  const SimplicialMap g(k, target, {0, 1, 2, 2});
  const PrismOperator p(k, 0, g.assignment(), target);
  for (int d = 0; d <= k->dimension(); ++d) {
    const Field f = Field::rationals();
    const Matrix pm = p.matrix(d, f);
    for (std::size_t c = 0; c < k->faces(d).size(); ++c) {
      Vector e = zero_vector(f, k->faces(d).size());
      e[c] = f.one();
      CHECK(pm.apply(e) == push_chain(g, d, e, f));
    }
  }
}

TEST_CASE("classical prism on an edge") {
  // H : Δ¹⊗Δ¹ → Δ¹ with H(v,0) = v and H(v,1) = 1; ∂P + P∂ = g_1 - g_0 up to the stated signs.
  const auto edge = SimplicialComplex::from_int_facets({{1, 2}});
  VertexRule rule(4);
  rule[product_vertex(0, 0, 1)] = 0;
  rule[product_vertex(1, 0, 1)] = 1;
  rule[product_vertex(0, 1, 1)] = 1;
  rule[product_vertex(1, 1, 1)] = 1;
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)})
    CHECK(verify_boundary_identity(edge, 1, rule, f).is_zero());
  CHECK(ref_identity({0, 1}, 2, 1, rule).empty());
  const IntChain p = prism_chain(m({0, 1}), 1, rule);
  CHECK(p.empty());
  const IntChain pv = prism_chain(m({0}), 1, rule);
  CHECK(pv == IntChain{{m({0, 1}), 1}});
}

TEST_CASE("boundary identity holds for random maps over the integers and every field") {
  std::mt19937 rng(2024);
  int cases = 0;
  for (int t = 0; t < 220; ++t) {
    const auto k = random_complex(rng, 6);
    const int q = std::uniform_int_distribution<int>(0, 3)(rng);
    const int targets = std::uniform_int_distribution<int>(1, 8)(rng);
    VertexRule rule(static_cast<std::size_t>(k.num_vertices()) * (q + 1));
    for (auto& x : rule) x = std::uniform_int_distribution<int>(0, targets - 1)(rng);
    for (int d = 0; d <= k.dimension(); ++d)
      for (FaceMask sigma : k.faces(d)) CHECK(ref_identity(vertices_of(sigma), k.num_vertices(), q, rule).empty());
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)})
      CHECK(verify_boundary_identity(k, q, rule, f).is_zero());
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("collapse counts of H_I") {
  for (const char* name : {"bd-simplex-3", "cycle-5", "rp2-6"}) {
    const auto k = load_catalog(name);
    for (int q = 1; q <= 2; ++q)
      for (const auto& parts : ordered_partitions(k.vertex_mask(), q + 1)) {
        const VertexPartition p(k, parts);
        const auto part = p.part_of();
        std::size_t expected = 0;
        for (int d = 0; d <= k.dimension(); ++d)
          for (FaceMask sigma : k.faces(d))
            for (const auto& s : enumerate_shuffles(d, q)) {
              const auto chain = ref_odot(vertices_of(sigma), s.entries());
              bool collapsed = false;
              for (std::size_t x = 0; x + 1 < chain.size(); ++x)
                collapsed |= chain[x].first == chain[x + 1].first && part[chain[x].first] <= chain[x].second;
              expected += collapsed ? 1 : 0;
            }
        CHECK(count_collapses(k, q, homotopy_rule(k, p)) == expected);
      }
  }
  const auto edge = SimplicialComplex::from_int_facets({{1, 2}});
  CHECK(count_collapses(edge, 1, homotopy_rule(edge, VertexPartition(edge, {m({0}), m({1})}))) > 0);
}

TEST_CASE("boundary identity I and the prism lemma on small complexes") {
  std::mt19937 rng(9);
  for (const char* name : {"cycle-4", "bd-simplex-2", "bd-simplex-3"}) {
    const auto k = load_catalog(name);
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)})
      for (int q = 0; q <= 2; ++q)
        for (const auto& parts : ordered_partitions(k.vertex_mask(), q + 1)) {
          const VertexPartition p(k, parts);
          CHECK(verify_boundary_identity_I(k, p, f).is_zero());
          std::vector<Cochain> a;
          for (int x = 0; x <= q; ++x) {
            const int d = std::uniform_int_distribution<int>(0, std::min(1, k.dimension()))(rng);
            Cochain c = zero_cochain(k, f, d);
            for (auto& v : c.values) v = f.from_int(std::uniform_int_distribution<int>(-2, 2)(rng));
            a.push_back(c);
          }
          CHECK(prism_lemma_residual(k, p, a, f).is_zero());
          std::vector<Cochain> zeros;
          for (int x = 0; x <= q; ++x) zeros.push_back(zero_cochain(k, f, 0));
          CHECK(prism_lemma_residual(k, p, zeros, f).is_zero());
        }
  }
}

TEST_CASE("product base recovery") {
  const auto k = load_catalog("cycle-5");
  CHECK(product_base(ordered_product(k, 2), 2) == k);
  CHECK_THROWS_AS(product_base(k, 1), DomainError);
}
