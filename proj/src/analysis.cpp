#include "golodlab/analysis.hpp"

#include <algorithm>
#include <map>

#include "golodlab/errors.hpp"
#include "golodlab/parallel.hpp"

namespace golod {

namespace {

/// Non-empty subsets of V(K) ordered by cardinality, then mask.
std::vector<std::vector<VertexSet>> subsets_by_size(const SimplicialComplex& k) {
  const int n = k.num_vertices();
  std::vector<std::vector<VertexSet>> out(n + 1);
  for (VertexSet s = 1; s <= k.vertex_mask(); ++s) out[card(s)].push_back(s);
  return out;
}

bool is_connected(const SimplicialComplex& k, const Field& f) {
  return homology(k, f, true).betti(0) == 0;
}

long long binom2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

TightnessReport scan(const SimplicialComplex& k, const Field& f, const TightnessOptions& options, int jobs) {
  TightnessReport r;
  r.field = f;
  r.reduced = options.reduced;
  r.require_connected = options.require_connected;
  r.connected = k.num_vertices() > 0 && is_connected(k, f);
  HomologyBasis hk = homology(k, f, options.reduced);
  for (const auto& level : subsets_by_size(k)) {
    if (level.empty()) continue;
    std::vector<SubsetInjectivity> rows(level.size());
    parallel_for(level.size(), jobs,
                 [&](std::size_t x) { rows[x] = subset_injectivity(k, hk, level[x], f, options.reduced); });
    r.subsets_checked += rows.size();
    for (const auto& row : rows) {
      if (!row.injective && !r.witness) {
        r.witness = row.subset;
        r.witness_degree = row.failing_degree;
      }
      if (options.full_table) r.table.push_back(row);
    }
    if (r.witness && !options.full_table) break;
  }
  if (!r.witness && options.require_connected && !r.connected) {
    r.witness = k.vertex_mask();
    r.witness_degree = 0;
  }
  r.tight = !r.witness.has_value();
  return r;
}

}  // namespace

SubsetInjectivity subset_injectivity(const SimplicialComplex& k, const HomologyBasis& k_homology, VertexSet subset,
                                     const Field& f, bool reduced) {
  SubsetInjectivity out{subset, true, 0};
  SimplicialComplex k_i = full_subcomplex(k, subset);
  HomologyBasis h = homology(k_i, f, reduced);
  for (const auto& hd : h.degrees) {
    if (hd.betti() == 0 || hd.degree < 0) continue;
    std::vector<Vector> images;
    const auto& faces_i = k_i.faces(hd.degree);
    const auto& faces = k.faces(hd.degree);
    for (const auto& rep : hd.representatives) {
      Vector pushed = zero_vector(f, faces.size());
      for (std::size_t x = 0; x < faces_i.size(); ++x)
        if (!rep[x].is_zero()) pushed[k.index_of(expand(faces_i[x], subset))] = rep[x];
      images.push_back(k_homology.at(hd.degree).coordinates(pushed));
    }
    Matrix m = Matrix::from_columns(f, static_cast<std::size_t>(k_homology.betti(hd.degree)), images);
    if (rank(m) < images.size()) {
      out.injective = false;
      out.failing_degree = hd.degree;
      return out;
    }
  }
  return out;
}

TightnessReport is_tight(const SimplicialComplex& k, const Field& f, const TightnessOptions& options) {
  return scan(k, f, options, options.jobs);
}

TightnessReport is_tight_serial(const SimplicialComplex& k, const Field& f, const TightnessOptions& options) {
  return scan(k, f, options, 1);
}

bool is_neighborly(const SimplicialComplex& k) {
  const long long n = k.num_vertices();
  return static_cast<long long>(k.faces(1).size()) == binom2(n);
}

bool tight_neighborly_check(long long m, long long d, long long h1) {
  if (d < 3) throw DomainError("tight-neighborly identity needs dimension d >= 3");
  return binom2(m - d - 1) == binom2(d + 2) * h1;
}

bool tight_neighborly_check(const SimplicialComplex& k) {
  HomologyBasis h = homology(k, Field::rationals(), false);
  return tight_neighborly_check(k.num_vertices(), k.dimension(), h.betti(1));
}

ManifoldAnnotations manifold_annotations(const SimplicialComplex& k, const Field& f) {
  ManifoldAnnotations out;
  const int d = k.dimension();
  auto facets = k.facets();
  out.pure = std::all_of(facets.begin(), facets.end(), [d](FaceMask m) { return dim(m) == d; });
  if (d >= 1) {
    std::map<FaceMask, int> count;
    for (FaceMask m : facets)
      for (FaceMask rest = m; rest; rest &= rest - 1) ++count[m & ~(rest & -rest)];
    out.ridges_in_two_facets = count.size() == k.faces(d - 1).size() &&
                               std::all_of(count.begin(), count.end(), [](const auto& e) { return e.second == 2; });
  }
  out.connected = k.num_vertices() > 0 && is_connected(k, f);
  out.top_rank = d >= 0 ? homology(k, f, false).betti(d) : 0;
  return out;
}

ComplexReport full_report(const std::string& name, const SimplicialComplex& k, const ReportOptions& options) {
  if (k.num_vertices() == 0) throw DomainError("complex has no vertices");
  ComplexReport r;
  r.name = name;
  r.f_vector = k.f_vector();
  for (std::size_t d = 0; d < r.f_vector.size(); ++d)
    r.euler_characteristic += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(r.f_vector[d]);
  r.neighborly = is_neighborly(k);
  if (k.dimension() >= 3) r.tight_neighborly = tight_neighborly_check(k);

  std::vector<Field> fields;
  for (const auto& f : options.fields)
    if (std::find(fields.begin(), fields.end(), f) == fields.end()) fields.push_back(f);

  for (const auto& f : fields) {
    FieldReport fr;
    fr.field = f;
    fr.betti = homology(k, f, false).betti_numbers();
    fr.reduced_betti = homology(k, f, true).betti_numbers();
    TightnessOptions opt;
    opt.jobs = options.jobs;
    fr.tight = is_tight(k, f, opt);
    opt.reduced = true;
    fr.tight_reduced = is_tight(k, f, opt);
    opt.reduced = false;
    opt.require_connected = true;
    fr.tight_connected = is_tight(k, f, opt);
    fr.weak_golod = weak_golod_check(k, f, options.jobs);
    fr.hochster = hochster_cohomology(k, f, options.jobs);
    if (!options.certificate) {
      fr.certificate_note = "not requested";
    } else if (!fr.tight.tight) {
      fr.certificate_note = "not tight";
    } else {
      fr.certificate = construct_golod_certificate(k, f, options.max_arity, options.jobs);
      fr.certificate_note = fr.certificate->verified() ? "verified" : "failed";
    }
    fr.annotations = manifold_annotations(k, f);
    r.fields.push_back(std::move(fr));
  }
  return r;
}

}  // namespace golod
