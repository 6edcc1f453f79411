#include "golodlab/massey.hpp"

#include <algorithm>
#include <sstream>

#include "golodlab/analysis.hpp"
#include "golodlab/errors.hpp"
#include "golodlab/parallel.hpp"

namespace golod {

namespace {

bool odd(long long e) { return (e & 1) != 0; }

void add_into(Cochain& into, const Cochain& from, const Scalar& scale) {
  for (std::size_t x = 0; x < into.values.size(); ++x)
    if (!from.values[x].is_zero()) into.values[x] += from.values[x] * scale;
}

/// Cochain on K_B (B ⊆ A) obtained by restricting a cochain on K_A; both indexed relative to their subsets.
Cochain restrict_cochain(const SimplicialComplex& k_a, VertexSet a, const Cochain& c, const SimplicialComplex& k_b,
                         VertexSet b) {
  Cochain out = zero_cochain(k_b, c.field, c.degree);
  const auto& faces = k_b.faces(c.degree);
  for (std::size_t x = 0; x < faces.size(); ++x) {
    int idx = k_a.index_of(compress(expand(faces[x], b), a));
    if (idx < 0) throw DomainError("restriction target is not a full subcomplex");
    out.values[x] = c.values[idx];
  }
  return out;
}

/// Groups the terms of x by summand (I, reduced degree).
std::map<std::pair<VertexSet, int>, std::vector<std::pair<FaceMask, Scalar>>> by_summand(const KoszulCochain& x) {
  std::map<std::pair<VertexSet, int>, std::vector<std::pair<FaceMask, Scalar>>> out;
  for (const auto& [key, v] : x.terms) out[{key.subset, card(key.face) - 1}].push_back({key.face, v});
  return out;
}

/// y with δy = x in C*(K), summand by summand, or nullopt.
std::optional<KoszulCochain> solve_coboundary(const SimplicialComplex& k, const KoszulCochain& x) {
  KoszulCochain out{x.field, {}};
  for (const auto& [slot, terms] : by_summand(x)) {
    const auto [subset, d] = slot;
    if (subset == 0) return std::nullopt;
    SimplicialComplex k_i = full_subcomplex(k, subset);
    KoszulCochain part{x.field, {}};
    for (const auto& [face, v] : terms) part.add({subset, face}, v);
    auto y = express_as_coboundary(k_i, summand_component(part, k_i, subset, d));
    if (!y) return std::nullopt;
    if (y->degree >= -1) out += embed_summand(k_i, subset, *y);
  }
  return out;
}

KoszulCochain relabel(const KoszulCochain& x, VertexSet universe) {
  KoszulCochain out{x.field, {}};
  for (const auto& [key, v] : x.terms) out.add({expand(key.subset, universe), expand(key.face, universe)}, v);
  return out;
}

std::vector<Vector> rref_rows(const Field& f, std::size_t width, const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(f, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  auto red = rref(m);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < red.rank(); ++r) {
    Vector row(width);
    for (std::size_t c = 0; c < width; ++c) row[c] = red.reduced(r, c);
    out.push_back(std::move(row));
  }
  return out;
}

/// Reduces v modulo the row space of an rref basis.
Vector reduce_modulo(Vector v, const std::vector<Vector>& basis) {
  for (const auto& row : basis) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size() || v[pivot].is_zero()) continue;
    Scalar s = v[pivot];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= s * row[c];
  }
  return v;
}

std::string describe_job(const SimplicialComplex& k, VertexSet support, const std::vector<VertexSet>& parts,
                         const std::vector<std::pair<int, int>>& classes) {
  std::ostringstream os;
  os << "I=" << k.format(support) << " parts=";
  for (std::size_t m = 0; m < parts.size(); ++m) os << (m ? "|" : "") << k.format(parts[m]);
  os << " classes=";
  for (std::size_t m = 0; m < classes.size(); ++m)
    os << (m ? "," : "") << "H^" << classes[m].first << "#" << classes[m].second;
  return os.str();
}

}  // namespace

Cochain bar(const Cochain& a) {
  Cochain out = a;
  if (odd(a.degree + 1))
    for (auto& v : out.values) v = -v;
  return out;
}

KoszulCochain bar(const KoszulCochain& a) {
  if (a.is_zero()) return a;
  auto d = a.degree();
  if (!d) throw DomainError("bar needs a homogeneous element");
  return odd(*d + 1) ? a.scaled(-a.field.one()) : a;
}

SupportedClass basis_class(const SimplicialComplex& k, VertexSet support, int degree, int index, const Field& f) {
  ComplexPtr k_i = share(full_subcomplex(k, support));
  HomologyBasis h = cohomology(*k_i, f);
  const auto& hd = h.at(degree);
  if (index < 0 || index >= hd.betti())
    throw DomainError("no class " + std::to_string(index) + " in degree " + std::to_string(degree) + " over " +
                      k.format(support));
  return SupportedClass{support, k_i, Cochain{f, degree, hd.representatives[index]}};
}

Vector class_coordinates(const SupportedClass& c) {
  if (!coboundary(*c.complex, c.representative).is_zero()) throw DomainError("class representative is not a cocycle");
  if (c.basis) return c.basis->at(c.degree()).coordinates(c.representative.values);
  HomologyBasis h = cohomology(*c.complex, c.representative.field);
  return h.at(c.degree()).coordinates(c.representative.values);
}

std::vector<ClassComponent> cohomology_class(const SimplicialComplex& k, const KoszulCochain& x) {
  if (!dga_differential(k, x).is_zero()) throw DomainError("element is not a cocycle");
  std::vector<ClassComponent> out;
  for (const auto& [slot, terms] : by_summand(x)) {
    const auto [subset, d] = slot;
    if (subset == 0) {
      out.push_back({0, -1, {terms.front().second}});
      continue;
    }
    SimplicialComplex k_i = full_subcomplex(k, subset);
    KoszulCochain part{x.field, {}};
    for (const auto& [face, v] : terms) part.add({subset, face}, v);
    Vector coords = cohomology(k_i, x.field).at(d).coordinates(summand_component(part, k_i, subset, d).values);
    if (!is_zero(coords)) out.push_back({subset, d, std::move(coords)});
  }
  return out;
}

const KoszulCochain& DefiningSystem::at(int i, int j) const {
  auto it = entries.find({i, j});
  if (it == entries.end())
    throw DomainError("defining system has no entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

KoszulCochain defining_sum(const SimplicialComplex& k, const DefiningSystem& ds, int i, int j) {
  KoszulCochain out{ds.at(i, i).field, {}};
  for (int m = i; m < j; ++m) out += dga_product(k, bar(ds.at(i, m)), ds.at(m + 1, j));
  return out;
}

bool is_defining_system(const SimplicialComplex& k, const DefiningSystem& ds,
                        const std::vector<SupportedClass>& classes) {
  const int q = ds.q;
  if (q < 1 || static_cast<int>(classes.size()) != q + 1)
    throw DomainError("defining system needs q >= 1 and one class per position");
  auto expected = [&](int i, int j) {
    int t = 0;
    for (int m = i; m <= j; ++m) t += classes[m].total_degree();
    return t - (j - i);
  };
  for (const auto& [pos, a] : ds.entries) {
    auto [i, j] = pos;
    if (i < 0 || j > q || i > j) throw DomainError("defining system entry out of range");
    if (a.is_zero()) continue;
    auto d = a.degree();
    if (!d || *d != expected(i, j))
      throw DomainError("degree mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  for (int i = 0; i <= q; ++i)
    for (int j = i; j <= q; ++j)
      if (!(i == 0 && j == q) && !ds.has(i, j)) return false;
  for (int i = 0; i <= q; ++i) {
    const auto& c = classes[i];
    const auto& a = ds.at(i, i);
    for (const auto& [key, v] : a.terms)
      if (key.subset != c.support || card(key.face) != c.degree() + 1) return false;
    Cochain comp = summand_component(a, *c.complex, c.support, c.degree());
    if (!coboundary(*c.complex, comp).is_zero()) return false;
    SupportedClass lifted{c.support, c.complex, comp, c.basis};
    if (class_coordinates(lifted) != class_coordinates(c)) return false;
  }
  for (const auto& [pos, a] : ds.entries) {
    auto [i, j] = pos;
    if (i == j) continue;
    if (!(dga_differential(k, a) == defining_sum(k, ds, i, j))) return false;
  }
  return true;
}

MasseyOutcome massey_evaluate(const SimplicialComplex& k, const DefiningSystem& ds,
                              const std::vector<SupportedClass>& classes) {
  if (!is_defining_system(k, ds, classes)) throw DomainError("not a defining system");
  MasseyOutcome out;
  out.defined = true;
  out.representative = defining_sum(k, ds, 0, ds.q);
  out.components = cohomology_class(k, out.representative);
  return out;
}

TripleMasseyResult triple_massey_exact(const SimplicialComplex& k, const Field& f, const SupportedClass& alpha,
                                       const SupportedClass& beta, const SupportedClass& gamma) {
  TripleMasseyResult out;
  const KoszulCochain a0 = alpha.element(), a1 = beta.element(), a2 = gamma.element();
  auto a01 = solve_coboundary(k, dga_product(k, bar(a0), a1));
  auto a12 = solve_coboundary(k, dga_product(k, bar(a1), a2));
  out.support = alpha.support | beta.support | gamma.support;
  out.degree = alpha.degree() + beta.degree() + gamma.degree() + 1;
  if (!a01 || !a12) {
    out.note = !a01 ? "first product is non-zero" : "second product is non-zero";
    return out;
  }
  out.defined = true;
  out.pairwise_disjoint =
      !(alpha.support & beta.support) && !(beta.support & gamma.support) && !(alpha.support & gamma.support);
  if (!out.pairwise_disjoint) {
    out.trivial = true;
    out.note = "overlapping supports";
    return out;
  }
  KoszulCochain rep = dga_product(k, bar(a0), *a12);
  rep += dga_product(k, bar(*a01), a2);
  SimplicialComplex k_i = full_subcomplex(k, out.support);
  HomologyBasis h = cohomology(k_i, f);
  const auto& hd = h.at(out.degree);
  auto coords_of = [&](const KoszulCochain& x) {
    return hd.coordinates(summand_component(x, k_i, out.support, out.degree).values);
  };
  out.representative_class = coords_of(rep);
  std::vector<Vector> gens;
  const VertexSet right = beta.support | gamma.support, left = alpha.support | beta.support;
  SimplicialComplex k_r = full_subcomplex(k, right), k_l = full_subcomplex(k, left);
  HomologyBasis hr = cohomology(k_r, f), hl = cohomology(k_l, f);
  for (const auto& u : hr.at(beta.degree() + gamma.degree()).representatives)
    gens.push_back(coords_of(dga_product(k, a0, embed_summand(k_r, right, {f, beta.degree() + gamma.degree(), u}))));
  for (const auto& v : hl.at(alpha.degree() + beta.degree()).representatives)
    gens.push_back(coords_of(dga_product(k, embed_summand(k_l, left, {f, alpha.degree() + beta.degree(), v}), a2)));
  out.indeterminacy = rref_rows(f, out.representative_class.size(), gens);
  out.normal_form = reduce_modulo(out.representative_class, out.indeterminacy);
  out.trivial = is_zero(out.normal_form);
  out.note = out.trivial ? "contains zero" : "does not contain zero";
  return out;
}

DefiningSystem zero_overlap_system(const DefiningSystem& ds, const std::vector<VertexSet>& supports, int i, int j) {
  if (static_cast<int>(supports.size()) != ds.q + 1) throw DomainError("need one support per position");
  if (i < 0 || j > ds.q || i >= j) throw DomainError("overlap positions must satisfy 0 <= i < j <= q");
  if (!(supports[i] & supports[j])) throw DomainError("supports are disjoint");
  DefiningSystem out = ds;
  const Field f = ds.at(0, 0).field;
  for (int a = 0; a <= i; ++a)
    for (int b = j; b <= ds.q; ++b) out.entries[{a, b}] = KoszulCochain{f, {}};
  return out;
}

Cochain lift_cocycle(const SimplicialComplex& k, const HomologyBasis& k_cohomology, const SupportedClass& alpha) {
  const int d = alpha.degree();
  if (alpha.support == k.vertex_mask()) return alpha.representative;
  const Field& f = alpha.representative.field;
  Vector target = class_coordinates(alpha);
  HomologyBasis computed;
  const HomologyBasis& h_i = alpha.basis ? *alpha.basis : (computed = cohomology(*alpha.complex, f));
  const auto& reps = k_cohomology.at(d).representatives;
  std::vector<Vector> columns;
  for (const auto& z : reps) {
    Cochain r = restrict_cochain(k, k.vertex_mask(), Cochain{f, d, z}, *alpha.complex, alpha.support);
    columns.push_back(h_i.at(d).coordinates(r.values));
  }
  auto c = solve(Matrix::from_columns(f, target.size(), columns), target);
  if (!c) throw DomainError("class on " + k.format(alpha.support) + " is not liftable");
  Cochain out = zero_cochain(k, f, d);
  for (std::size_t m = 0; m < reps.size(); ++m)
    if (!(*c)[m].is_zero()) add_into(out, Cochain{f, d, reps[m]}, (*c)[m]);
  return out;
}

const Cochain& StarSystem::at(int i, int j) const {
  auto it = a.find({i, j});
  if (it == a.end()) throw DomainError("system has no entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

std::vector<int> mu_vertex_map(const SimplicialComplex& k, const VertexPartition& p, int i) {
  const int n = k.num_vertices();
  auto part = p.part_of();
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = (part[v] <= i ? 0 : n) + v;
  return out;
}

Cochain condition_rhs(const SimplicialComplex& k, const StarSystem& s, int i, int j) {
  int deg = 1;
  for (int m = i; m <= j; ++m) deg += s.at(m, m).degree;
  const Field f = s.at(i, i).field;
  Cochain out = zero_cochain(k, f, deg);
  for (int p = i; p < j; ++p) {
    CochainEvaluator star = star_evaluator(k, {bar(s.at(i, p)), s.at(p + 1, j)});
    Cochain term = tabulate(k, pullback_evaluator(star, mu_vertex_map(k, s.partition, p), f), deg, f);
    add_into(out, term, f.one());
  }
  return out;
}

Cochain build_adjacent(const SimplicialComplex& k, const VertexPartition& p, int i, const Cochain& left,
                       const Cochain& right) {
  VertexPartition coarse(p.universe(), {p.range(0, i), p.range(i + 1, p.q())});
  CochainEvaluator star = star_evaluator(k, {bar(left), right});
  return prism_pullback(k, 1, homotopy_rule(k, coarse), star, left.degree + right.degree, left.field);
}

Cochain build_general(const SimplicialComplex& k, const StarSystem& s, int i, int j) {
  Cochain rhs = condition_rhs(k, s, i, j);
  const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (!coboundary(k, rhs).is_zero()) throw VerificationError("right side is not a cocycle at " + where);
  auto x = express_as_coboundary(k, rhs);
  if (!x) throw VerificationError("right side is not exact at " + where);
  return *x;
}

int epsilon_s(const StarSystem& sys, int i, const Shuffle& s) {
  const int k = s.q();
  auto factor_degree = [&](int m) {
    int lo = m == 0 ? i + s[0] : i + s[m] + 1;
    return sys.at(lo, i + s[m + 1]).degree;
  };
  int e = 0;
  for (int m = (k % 2 == 0) ? 1 : 0; m < k; m += 2) e += factor_degree(m) + 1;
  return e & 1;
}

DecompositionResidual verify_decomposition(const SimplicialComplex& k, const StarSystem& s, int i, int j, int kk) {
  if (kk < 1 || kk > j - i) throw DomainError("decomposition needs 1 <= k <= j - i");
  const Field f = s.at(i, i).field;
  DecompositionResidual out;
  out.k = kk;
  out.residual = condition_rhs(k, s, i, j);
  const int deg = out.residual.degree;
  for (const auto& sh : enumerate_hat_shuffles(j - i, kk)) {
    std::vector<Cochain> factors;
    factors.push_back(s.at(i + sh[0], i + sh[1]));
    for (int m = 1; m <= kk; ++m) factors.push_back(s.at(i + sh[m] + 1, i + sh[m + 1]));
    CochainEvaluator d_star = coboundary_evaluator(star_evaluator(k, std::move(factors)), f);
    VertexPartition coarse = partition_from_shuffle(s.partition, i, j, sh);
    Cochain term = prism_pullback(k, kk, homotopy_rule(k, coarse), d_star, deg, f);
    add_into(out.residual, term, f.one().signed_by(!odd(epsilon_s(s, i, sh) + epsilon_k(kk))));
  }
  out.exact = express_as_coboundary(k, out.residual).has_value();
  return out;
}

StarSystem construct_star_system(const SimplicialComplex& k, const Field& f, const HomologyBasis& k_cohomology,
                                 const VertexPartition& p, const std::vector<SupportedClass>& classes) {
  const int q = p.q();
  if (static_cast<int>(classes.size()) != q + 1) throw DomainError("need one class per part");
  if (p.universe() != k.vertex_mask()) throw DomainError("partition must cover the vertex set");
  StarSystem s{p, {}};
  for (int m = 0; m <= q; ++m) {
    if (classes[m].support != p.part(m)) throw DomainError("class support differs from its part");
    if (!(classes[m].representative.field == f)) throw DomainError("class over a different field");
    s.a[{m, m}] = lift_cocycle(k, k_cohomology, classes[m]);
  }
  for (int span = 1; span <= q; ++span)
    for (int i = 0; i + span <= q; ++i) {
      const int j = i + span;
      if (span == 1) {
        Cochain a = build_adjacent(k, p, i, s.at(i, i), s.at(j, j));
        if (!(coboundary(k, a) == condition_rhs(k, s, i, j)))
          throw VerificationError("adjacent entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") violates its coboundary identity");
        s.a[{i, j}] = std::move(a);
      } else {
        s.a[{i, j}] = build_general(k, s, i, j);
      }
    }
  return s;
}

DefiningSystem restrict_system(const SimplicialComplex& k, const StarSystem& s) {
  const VertexPartition& p = s.partition;
  DefiningSystem out;
  out.q = p.q();
  for (const auto& [pos, a] : s.a) {
    auto [i, j] = pos;
    const VertexSet support = p.range(i, j);
    SimplicialComplex k_s = full_subcomplex(k, support);
    long long e = j - i;
    for (int x = i; x <= j; ++x)
      for (int y = x + 1; y <= j; ++y)
        e += static_cast<long long>(card(p.part(x))) * s.at(y, y).degree + inversions(p.part(x), p.part(y));
    Cochain b = restrict_cochain(k, k.vertex_mask(), a, k_s, support);
    KoszulCochain elem = embed_summand(k_s, support, b);
    out.entries[pos] = odd(e) ? elem.scaled(-a.field.one()) : elem;
  }
  return out;
}

bool GolodCertificate::verified() const {
  return std::all_of(entries.begin(), entries.end(), [](const CertificateEntry& e) { return e.verified(); });
}

std::map<int, std::size_t> GolodCertificate::entries_by_arity() const {
  std::map<int, std::size_t> out;
  for (const auto& e : entries) ++out[static_cast<int>(e.parts.size())];
  return out;
}

std::vector<std::vector<VertexSet>> ordered_partitions(VertexSet set, int parts) {
  std::vector<std::vector<VertexSet>> out;
  const auto verts = vertices_of(set);
  const int n = static_cast<int>(verts.size());
  if (parts < 1 || parts > n) return out;
  std::vector<int> label(n, 0);
  while (true) {
    std::vector<VertexSet> blocks(parts, 0);
    for (int x = 0; x < n; ++x) blocks[label[x]] |= bit(verts[x]);
    if (std::all_of(blocks.begin(), blocks.end(), [](VertexSet b) { return b != 0; })) out.push_back(blocks);
    int x = n - 1;
    while (x >= 0 && label[x] == parts - 1) label[x--] = 0;
    if (x < 0) break;
    ++label[x];
  }
  return out;
}

namespace {

struct CertificateJob {
  VertexSet support;
  std::vector<VertexSet> parts;
};

struct JobResult {
  bool vacuous = true;
  std::vector<CertificateEntry> entries;
};

JobResult run_job(const SimplicialComplex& k, const Field& f, const std::vector<SubsetCohomology>& subsets,
                  const CertificateJob& job) {
  JobResult out;
  const VertexSet support = job.support;
  const SimplicialComplex& l = *subsets[support].complex;
  const HomologyBasis& l_coh = subsets[support].basis;
  const int q = static_cast<int>(job.parts.size()) - 1;

  std::vector<std::vector<std::pair<int, int>>> choices(q + 1);
  for (int m = 0; m <= q; ++m) {
    for (const auto& hd : subsets[job.parts[m]].basis.degrees)
      for (int x = 0; x < hd.betti(); ++x) choices[m].push_back({hd.degree, x});
    if (choices[m].empty()) return out;
  }
  out.vacuous = false;

  std::vector<VertexSet> local(q + 1);
  for (int m = 0; m <= q; ++m) local[m] = compress(job.parts[m], support);
  VertexPartition p(l.vertex_mask(), local);

  std::vector<std::size_t> odo(q + 1, 0);
  while (true) {
    std::vector<std::pair<int, int>> tuple(q + 1);
    std::vector<SupportedClass> classes;
    for (int m = 0; m <= q; ++m) {
      tuple[m] = choices[m][odo[m]];
      const auto& sub = subsets[job.parts[m]];
      classes.push_back(SupportedClass{local[m], sub.complex,
                                       Cochain{f, tuple[m].first,
                                               sub.basis.at(tuple[m].first).representatives[tuple[m].second]},
                                       &sub.basis});
    }
    try {
      StarSystem s = construct_star_system(l, f, l_coh, p, classes);
      CertificateEntry e;
      e.support = support;
      e.parts = job.parts;
      for (const auto& [d, x] : tuple) {
        e.degrees.push_back(d);
        e.class_indices.push_back(x);
      }
      e.condition_holds = true;
      for (const auto& [pos, a] : s.a)
        if (pos.first < pos.second && !(coboundary(l, a) == condition_rhs(l, s, pos.first, pos.second)))
          e.condition_holds = false;
      DefiningSystem ds = restrict_system(l, s);
      e.defining_system = is_defining_system(l, ds, classes);
      KoszulCochain rep = defining_sum(l, ds, 0, q);
      e.representative_is_coboundary = dga_differential(l, ds.at(0, q)) == rep;
      e.decomposition_exact = true;
      for (const auto& [pos, a] : s.a) {
        auto [i, j] = pos;
        if (i == j || j - i > 3) continue;
        for (int kk = 1; kk <= j - i; ++kk) {
          ++e.decomposition_checks;
          if (!verify_decomposition(l, s, i, j, kk).exact) e.decomposition_exact = false;
        }
      }
      for (auto& [pos, x] : ds.entries) x = relabel(x, support);
      e.system = std::move(ds);
      e.representative = relabel(rep, support);
      if (!e.verified())
        throw VerificationError("entry failed verification");
      out.entries.push_back(std::move(e));
    } catch (const std::exception& err) {
      throw VerificationError("construction failed for " + describe_job(k, support, job.parts, tuple) + ": " +
                              err.what());
    }
    int m = q;
    while (m >= 0 && ++odo[m] == choices[m].size()) odo[m--] = 0;
    if (m < 0) break;
  }
  return out;
}

}  // namespace

GolodCertificate construct_golod_certificate(const SimplicialComplex& k, const Field& f, int max_arity, int jobs) {
  if (max_arity < 2) throw DomainError("max arity must be at least 2");
  TightnessOptions opt;
  opt.jobs = jobs;
  auto tight = is_tight(k, f, opt);
  if (!tight.tight) throw DomainError("not tight over " + f.name() + ": witness " + k.format(*tight.witness));

  GolodCertificate cert;
  cert.field = f;
  cert.max_arity = max_arity;
  auto subsets = subset_cohomology(k, f, jobs);

  std::vector<CertificateJob> plan;
  for (VertexSet support = 1; support <= k.vertex_mask(); ++support)
    for (int arity = 2; arity <= std::min(max_arity, card(support)); ++arity)
      for (auto& parts : ordered_partitions(support, arity)) plan.push_back({support, std::move(parts)});

  std::vector<JobResult> results(plan.size());
  parallel_for(plan.size(), jobs, [&](std::size_t x) { results[x] = run_job(k, f, subsets, plan[x]); });

  cert.partitions_scanned = plan.size();
  for (auto& r : results) {
    if (r.vacuous) ++cert.vacuous_partitions;
    for (auto& e : r.entries) cert.entries.push_back(std::move(e));
  }
  return cert;
}

}  // namespace golod
