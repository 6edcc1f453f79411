#include "doctest.h"

#include <random>

#include "golodlab/analysis.hpp"
#include "golodlab/errors.hpp"
#include "golodlab/io.hpp"
#include "oracles.hpp"

using namespace golod;

namespace {

FaceMask m(std::initializer_list<int> vs) {
  FaceMask r = 0;
  for (int v : vs) r |= bit(v);
  return r;
}

const CatalogEntry& entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw std::runtime_error("no catalog entry " + name);
}

/// Degree-0 part of tightness for a connected K: no full subcomplex has two components.
bool oracle_h0_injective(const std::vector<oracle::Face>& facets, int n) {
  for (int s = 1; s < (1 << n); ++s) {
    std::set<int> labels;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) labels.insert(v + 1);
    if (oracle::components(oracle::restrict_to(facets, labels)) > 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("boundaries of simplices are tight") {
  for (int n = 2; n <= 5; ++n)
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      const auto r = is_tight(load_catalog("bd-simplex-" + std::to_string(n)), f);
      CHECK(r.tight);
      CHECK(r.subsets_checked == (std::size_t{1} << (n + 1)) - 1);
    }
}

TEST_CASE("the 4-cycle is not tight") {
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    const auto r = is_tight(load_catalog("cycle-4"), f);
    CHECK_FALSE(r.tight);
    REQUIRE(r.witness);
    CHECK(*r.witness == m({0, 2}));
    CHECK(r.witness_degree == 0);
  }
  CHECK_FALSE(oracle_h0_injective(entry("cycle-4").facets, 4));
}

TEST_CASE("cycles are tight only as triangles") {
  for (int n = 4; n <= 8; ++n) {
    const auto r = is_tight(load_catalog("cycle-" + std::to_string(n)), Field::prime(2));
    CHECK_FALSE(r.tight);
    CHECK(oracle_h0_injective(entry("cycle-" + std::to_string(n)).facets, n) == r.tight);
  }
  CHECK(is_tight(load_catalog("bd-simplex-2"), Field::rationals()).tight);
}

TEST_CASE("projective plane is tight over F_2 only") {
  const auto k = load_catalog("rp2-6");
  TightnessOptions full;
  full.full_table = true;
  const auto r2 = is_tight(k, Field::prime(2), full);
  CHECK(r2.tight);
  CHECK(r2.subsets_checked == 63);
  CHECK(r2.table.size() == 63);
  const auto rq = is_tight(k, Field::rationals());
  CHECK_FALSE(rq.tight);
  REQUIRE(rq.witness);
  CHECK(rq.witness_degree == 1);
}

TEST_CASE("the 7-vertex torus is tight over Q and F_2") {
  const auto k = load_catalog("torus-7");
  CHECK(is_tight(k, Field::rationals()).tight);
  CHECK(is_tight(k, Field::prime(2)).tight);
  CHECK(is_tight(k, Field::prime(3)).tight);
}

TEST_CASE("tightness flavors and the two-point convention") {
  const auto two = load_catalog("two-points");
  TightnessOptions unreduced, reduced, connected;
  reduced.reduced = true;
  connected.require_connected = true;
  const auto a = is_tight(two, Field::rationals(), unreduced);
  const auto b = is_tight(two, Field::rationals(), reduced);
  const auto c = is_tight(two, Field::rationals(), connected);
  CHECK(a.tight);
  CHECK(b.tight);
  CHECK_FALSE(c.tight);
  CHECK_FALSE(c.connected);
  REQUIRE(c.witness);
  CHECK(*c.witness == two.vertex_mask());

  for (const auto& e : catalog_entries()) {
    if (e.facets.size() > 40) continue;
    const auto k = load_catalog(e.name);
    CHECK_MESSAGE(is_tight(k, Field::prime(2), unreduced).tight == is_tight(k, Field::prime(2), reduced).tight, e.name);
  }
}

TEST_CASE("tightness passes to full subcomplexes") {
  std::mt19937 rng(6);
  for (const char* name : {"torus-7", "bd-simplex-4", "points-6"}) {
    const auto k = load_catalog(name);
    REQUIRE(is_tight(k, Field::prime(2)).tight);
    for (int t = 0; t < 8; ++t) {
      const VertexSet s = std::uniform_int_distribution<VertexSet>(1, k.vertex_mask())(rng);
      CHECK(is_tight(full_subcomplex(k, s), Field::prime(2)).tight);
    }
  }
}

TEST_CASE("serial and parallel tightness scans agree") {
  TightnessOptions opt;
  opt.full_table = true;
  const auto k = load_catalog("rp2-6");
  for (const Field& f : {Field::rationals(), Field::prime(2)}) {
    const auto a = is_tight_serial(k, f, opt);
    opt.jobs = 4;
    const auto b = is_tight(k, f, opt);
    opt.jobs = 1;
    CHECK(a.tight == b.tight);
    REQUIRE(a.table.size() == b.table.size());
    for (std::size_t i = 0; i < a.table.size(); ++i) {
      CHECK(a.table[i].subset == b.table[i].subset);
      CHECK(a.table[i].injective == b.table[i].injective);
    }
  }
}

TEST_CASE("neighborliness") {
  CHECK(is_neighborly(load_catalog("bd-simplex-3")));
  CHECK_FALSE(is_neighborly(load_catalog("cycle-4")));
  CHECK(is_neighborly(load_catalog("torus-7")));
  CHECK(load_catalog("torus-7").faces(1).size() == static_cast<std::size_t>(oracle::binom(7, 2)));
  CHECK(is_neighborly(load_catalog("rp2-6")));
}

TEST_CASE("tight-neighborly arithmetic") {
  CHECK(tight_neighborly_check(9, 3, 1));
  CHECK_FALSE(tight_neighborly_check(10, 3, 1));
  for (long long mm = 1; mm <= 20; ++mm)
    for (long long d = 3; d <= 10; ++d) {
      if (mm >= d + 2) CHECK(tight_neighborly_check(mm, d, 0) == (mm == d + 2));
      for (long long h1 = 0; h1 <= 3; ++h1)
        CHECK(tight_neighborly_check(mm, d, h1) == (oracle::binom(mm - d - 1, 2) == oracle::binom(d + 2, 2) * h1));
    }
  CHECK_THROWS_AS(tight_neighborly_check(7, 2, 1), DomainError);
}

TEST_CASE("manifold annotations") {
  const auto a = manifold_annotations(load_catalog("bd-simplex-3"), Field::rationals());
  CHECK(a.pure);
  CHECK(a.ridges_in_two_facets);
  CHECK(a.connected);
  CHECK(a.top_rank == 1);
  CHECK(a.closed_orientable_candidate());
  CHECK(manifold_annotations(load_catalog("cycle-4"), Field::rationals()).closed_orientable_candidate());
  CHECK_FALSE(manifold_annotations(load_catalog("two-points"), Field::rationals()).connected);
  CHECK_FALSE(manifold_annotations(load_catalog("rp2-6"), Field::rationals()).closed_orientable_candidate());
  CHECK(manifold_annotations(load_catalog("rp2-6"), Field::prime(2)).top_rank == 1);
}

TEST_CASE("tight complexes are weakly Golod and certified") {
  for (const char* name : {"bd-simplex-3", "rp2-6", "torus-7", "three-edges", "points-6", "two-points", "simplex-3"}) {
    const auto k = load_catalog(name);
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
      if (!is_tight(k, f).tight) continue;
      CHECK_MESSAGE(weak_golod_check(k, f).weakly_golod, name);
      CHECK_MESSAGE(construct_golod_certificate(k, f, 3).verified(), name);
    }
  }
  const auto c4 = load_catalog("cycle-4");
  CHECK_FALSE(is_tight(c4, Field::rationals()).tight);
  CHECK_FALSE(weak_golod_check(c4, Field::rationals()).weakly_golod);
}

TEST_CASE("full report") {
  ReportOptions opt;
  opt.fields = {Field::prime(2), Field::rationals(), Field::prime(2)};
  const auto k = load_catalog("rp2-6");
  const auto r = full_report("rp2-6", k, opt);
  REQUIRE(r.fields.size() == 2);
  CHECK(r.fields[0].field == Field::prime(2));
  CHECK(r.fields[1].field == Field::rationals());
  CHECK(r.euler_characteristic == 1);
  CHECK(r.neighborly);
  CHECK(r.fields[0].tight.tight);
  CHECK(r.fields[0].certificate_note == "verified");
  CHECK(r.fields[1].certificate_note == "not tight");
  CHECK_FALSE(r.fields[1].certificate.has_value());

  opt.certificate = false;
  const auto r2 = full_report("rp2-6", k, opt);
  CHECK(r2.fields[0].certificate_note == "not requested");
}
