#include "golodlab/koszul.hpp"

#include <set>
#include <sstream>

#include "golodlab/errors.hpp"
#include "golodlab/parallel.hpp"

namespace golod {

namespace {

template <class Key>
void add_term(std::map<Key, Scalar>& terms, const Key& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool odd(int e) { return e & 1; }

std::string key_name(const KoszulKey& k) {
  std::ostringstream os;
  os << "(I=" << k.subset << ", σ=" << k.face << ")";
  return os.str();
}

}  // namespace

void KoszulCochain::add(const KoszulKey& key, const Scalar& value) {
  if ((key.face & ~key.subset) != 0) throw DomainError("basis face must lie in its subset");
  add_term(terms, key, value);
}

std::optional<int> KoszulCochain::degree() const {
  std::optional<int> d;
  for (const auto& [key, _] : terms) {
    int kd = total_degree(key);
    if (d && *d != kd) return std::nullopt;
    d = kd;
  }
  return d;
}

KoszulCochain& KoszulCochain::operator+=(const KoszulCochain& o) {
  for (const auto& [key, v] : o.terms) add_term(terms, key, v);
  return *this;
}

KoszulCochain& KoszulCochain::operator-=(const KoszulCochain& o) {
  for (const auto& [key, v] : o.terms) add_term(terms, key, -v);
  return *this;
}

KoszulCochain KoszulCochain::scaled(const Scalar& s) const {
  KoszulCochain out{field, {}};
  for (const auto& [key, v] : terms) add_term(out.terms, key, v * s);
  return out;
}

KoszulCochain koszul_unit(const Field& f) { return koszul_basis(f, 0, 0); }

KoszulCochain koszul_basis(const Field& f, VertexSet subset, FaceMask face) {
  KoszulCochain out{f, {}};
  out.add({subset, face}, f.one());
  return out;
}

KoszulCochain embed_summand(const SimplicialComplex& k_i, VertexSet subset, const Cochain& c) {
  KoszulCochain out{c.field, {}};
  const auto& faces = k_i.faces(c.degree);
  for (std::size_t i = 0; i < faces.size(); ++i) out.add({subset, expand(faces[i], subset)}, c.values[i]);
  return out;
}

Cochain summand_component(const KoszulCochain& x, const SimplicialComplex& k_i, VertexSet subset, int d) {
  Cochain out = zero_cochain(k_i, x.field, d);
  for (const auto& [key, v] : x.terms) {
    if (key.subset != subset || card(key.face) != d + 1) continue;
    int idx = k_i.index_of(compress(key.face, subset));
    if (idx < 0) throw DomainError("summand key is not a face of the full subcomplex");
    out.values[idx] += v;
  }
  return out;
}

KoszulCochain dga_differential(const SimplicialComplex& k, const KoszulCochain& x) {
  KoszulCochain out{x.field, {}};
  for (const auto& [key, v] : x.terms) {
    for (VertexSet rest = key.subset & ~key.face; rest; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      FaceMask up = key.face | bit(j);
      if (!k.contains(up)) continue;
      add_term(out.terms, KoszulKey{key.subset, up}, v.signed_by(odd(rank_in(key.face, j))));
    }
  }
  return out;
}

KoszulCochain dga_product(const SimplicialComplex& k, const KoszulCochain& a, const KoszulCochain& b) {
  KoszulCochain out{a.field, {}};
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      if (ka.subset & kb.subset) continue;
      FaceMask face = ka.face | kb.face;
      if (!k.contains(face)) continue;
      int e = card(ka.subset) * card(kb.face) + inversions(ka.subset, kb.subset) + inversions(ka.face, kb.face);
      add_term(out.terms, KoszulKey{ka.subset | kb.subset, face}, (va * vb).signed_by(odd(e)));
    }
  return out;
}

KoszulCochain literal_product(const SimplicialComplex& k, const KoszulCochain& a, const KoszulCochain& b) {
  KoszulCochain out{a.field, {}};
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      if (ka.subset & kb.subset) continue;
      FaceMask face = ka.face | kb.face;
      if (!k.contains(face)) continue;
      add_term(out.terms, KoszulKey{ka.subset | kb.subset, face},
               (va * vb).signed_by(odd(inversions(ka.face, kb.face))));
    }
  return out;
}

void RKoszulElement::add(const MonomialKey& key, const Scalar& value) {
  if (key.v & key.x) throw DomainError("monomial has v_i x_i = 0");
  add_term(terms, key, value);
}

RKoszulElement r_differential(const SimplicialComplex& k, const RKoszulElement& x) {
  RKoszulElement out{x.field, {}};
  for (const auto& [key, v] : x.terms)
    for (VertexSet rest = key.x; rest; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      FaceMask up = key.v | bit(j);
      if (!k.contains(up)) continue;
      add_term(out.terms, MonomialKey{up, key.x & ~bit(j)}, v.signed_by(odd(rank_in(key.x, j))));
    }
  return out;
}

RKoszulElement r_product(const SimplicialComplex& k, const RKoszulElement& a, const RKoszulElement& b) {
  RKoszulElement out{a.field, {}};
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      if ((ka.v | ka.x) & (kb.v | kb.x)) continue;
      FaceMask v = ka.v | kb.v;
      if (!k.contains(v)) continue;
      add_term(out.terms, MonomialKey{v, ka.x | kb.x}, (va * vb).signed_by(odd(inversions(ka.x, kb.x))));
    }
  return out;
}

int phi_sign(const KoszulKey& key) {
  int e = 0;
  for (FaceMask rest = key.face; rest; rest &= rest - 1) e += rank_in(key.subset, std::countr_zero(rest));
  return odd(e) ? -1 : 1;
}

RKoszulElement phi(const KoszulCochain& x) {
  RKoszulElement out{x.field, {}};
  for (const auto& [key, v] : x.terms)
    add_term(out.terms, MonomialKey{key.face, key.subset & ~key.face}, v.signed_by(phi_sign(key) < 0));
  return out;
}

KoszulCochain phi_inverse(const RKoszulElement& y) {
  KoszulCochain out{y.field, {}};
  for (const auto& [key, v] : y.terms) {
    KoszulKey kk{key.v | key.x, key.v};
    add_term(out.terms, kk, v.signed_by(phi_sign(kk) < 0));
  }
  return out;
}

std::vector<KoszulKey> koszul_basis_keys(const SimplicialComplex& k) {
  std::vector<KoszulKey> out;
  const VertexSet all = k.vertex_mask();
  for (int d = -1; d <= k.dimension(); ++d)
    for (FaceMask face : k.faces(d)) {
      VertexSet free = all & ~face;
      for (VertexSet extra = free;; extra = (extra - 1) & free) {
        out.push_back({face | extra, face});
        if (extra == 0) break;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

PhiReport verify_phi_iso(const SimplicialComplex& k, const Field& f) {
  PhiReport r;
  auto keys = koszul_basis_keys(k);
  r.basis_size = keys.size();
  for (int d = -1; d <= k.dimension(); ++d) r.r_basis_size += k.faces(d).size() << (k.num_vertices() - d - 1);

  std::set<MonomialKey> images;
  bool degrees_ok = true, inverse_ok = true;
  std::vector<KoszulCochain> basis;
  std::vector<RKoszulElement> imgs;
  for (const auto& key : keys) {
    basis.push_back(koszul_basis(f, key.subset, key.face));
    imgs.push_back(phi(basis.back()));
    const auto& [mono, _] = *imgs.back().terms.begin();
    images.insert(mono);
    if (monomial_degree(mono) != total_degree(key)) degrees_ok = false;
    if (!(phi_inverse(imgs.back()) == basis.back())) inverse_ok = false;
  }
  r.bijective = degrees_ok && inverse_ok && images.size() == keys.size() && images.size() == r.r_basis_size;
  if (!r.bijective && r.first_failure.empty()) r.first_failure = "basis correspondence";

  r.commutes_with_differential = true;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!(phi(dga_differential(k, basis[i])) == r_differential(k, imgs[i]))) {
      r.commutes_with_differential = false;
      if (r.first_failure.empty()) r.first_failure = "differential at " + key_name(keys[i]);
      break;
    }

  r.multiplicative = true;
  for (std::size_t i = 0; i < keys.size() && r.multiplicative; ++i)
    for (std::size_t j = 0; j < keys.size(); ++j)
      if (!(phi(dga_product(k, basis[i], basis[j])) == r_product(k, imgs[i], imgs[j]))) {
        r.multiplicative = false;
        if (r.first_failure.empty()) r.first_failure = "product at " + key_name(keys[i]) + " * " + key_name(keys[j]);
        break;
      }
  return r;
}

std::map<int, int> HochsterTable::poincare() const {
  std::map<int, int> out;
  for (const auto& e : entries)
    if (e.total_degree > 0) out[e.total_degree] += e.rank;
  return out;
}

namespace {

SubsetCohomology compute_subset(const SimplicialComplex& k, const Field& f, VertexSet subset) {
  SubsetCohomology s;
  s.subset = subset;
  s.complex = share(full_subcomplex(k, subset));
  s.basis = cohomology(*s.complex, f);
  return s;
}

}  // namespace

std::vector<SubsetCohomology> subset_cohomology(const SimplicialComplex& k, const Field& f, int jobs) {
  const std::size_t count = std::size_t{1} << k.num_vertices();
  std::vector<SubsetCohomology> out(count);
  parallel_for(count - 1, jobs, [&](std::size_t i) { out[i + 1] = compute_subset(k, f, i + 1); });
  return out;
}

std::vector<SubsetCohomology> subset_cohomology_serial(const SimplicialComplex& k, const Field& f) {
  const std::size_t count = std::size_t{1} << k.num_vertices();
  std::vector<SubsetCohomology> out(count);
  for (std::size_t i = 1; i < count; ++i) out[i] = compute_subset(k, f, i);
  return out;
}

HochsterTable hochster_table(const std::vector<SubsetCohomology>& subsets, const Field& f) {
  HochsterTable t;
  t.field = f;
  for (std::size_t i = 1; i < subsets.size(); ++i)
    for (const auto& hd : subsets[i].basis.degrees)
      if (hd.betti() > 0)
        t.entries.push_back({static_cast<VertexSet>(i), hd.degree, card(i) + hd.degree + 1, hd.betti()});
  return t;
}

HochsterTable hochster_cohomology(const SimplicialComplex& k, const Field& f, int jobs) {
  return hochster_table(subset_cohomology(k, f, jobs), f);
}

std::map<int, int> dga_cohomology_ranks(const SimplicialComplex& k, const Field& f) {
  auto keys = koszul_basis_keys(k);
  std::map<int, std::vector<KoszulKey>> by_degree;
  for (const auto& key : keys) by_degree[total_degree(key)].push_back(key);
  auto differential = [&](int p) {
    const auto& src = by_degree[p];
    const auto& tgt = by_degree[p + 1];
    std::map<KoszulKey, std::size_t> row;
    for (std::size_t r = 0; r < tgt.size(); ++r) row[tgt[r]] = r;
    Matrix m(f, tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [key, v] : dga_differential(k, koszul_basis(f, src[c].subset, src[c].face)).terms)
        m(row.at(key), c) = v;
    return m;
  };
  std::map<int, int> out;
  const int top = by_degree.rbegin()->first;
  std::vector<std::size_t> ranks(top + 2, 0);
  for (int p = 0; p <= top; ++p) ranks[p] = rank(differential(p));
  for (int p = 1; p <= top; ++p) {
    int h = static_cast<int>(by_degree[p].size() - ranks[p] - ranks[p - 1]);
    if (h > 0) out[p] = h;
  }
  return out;
}

namespace {

struct PairScan {
  std::size_t pairs = 0;
  std::optional<WeakGolodWitness> witness;
};

PairScan scan_first(const std::vector<SubsetCohomology>& subsets, const SimplicialComplex& k, const Field& f,
                    VertexSet first) {
  PairScan out;
  const auto& a = subsets[first];
  if (a.basis.total_rank() == 0) return out;
  const VertexSet all = k.vertex_mask();
  for (VertexSet second = first + 1; second <= all; ++second) {
    if (second & first) continue;
    const auto& b = subsets[second];
    if (b.basis.total_rank() == 0) continue;
    const auto& u = subsets[first | second];
    for (const auto& da : a.basis.degrees)
      for (const auto& db : b.basis.degrees) {
        if (da.betti() == 0 || db.betti() == 0) continue;
        const int target = da.degree + db.degree + 1;
        const auto& hu = u.basis.at(target);
        for (int x = 0; x < da.betti(); ++x)
          for (int y = 0; y < db.betti(); ++y) {
            ++out.pairs;
            if (out.witness || hu.betti() == 0) continue;
            auto prod = dga_product(k, embed_summand(*a.complex, first, {f, da.degree, da.representatives[x]}),
                                    embed_summand(*b.complex, second, {f, db.degree, db.representatives[y]}));
            Cochain c = summand_component(prod, *u.complex, first | second, target);
            Vector coords = hu.coordinates(c.values);
            if (!is_zero(coords))
              out.witness = WeakGolodWitness{first, second, da.degree, db.degree, x, y, std::move(coords)};
          }
      }
  }
  return out;
}

WeakGolodResult merge_scans(std::vector<PairScan>& scans) {
  WeakGolodResult r;
  for (auto& s : scans) {
    r.pairs_checked += s.pairs;
    if (s.witness && !r.witness) r.witness = std::move(s.witness);
  }
  r.weakly_golod = !r.witness.has_value();
  return r;
}

}  // namespace

WeakGolodResult weak_golod_scan(const SimplicialComplex& k, const std::vector<SubsetCohomology>& subsets,
                                const Field& f, int jobs) {
  const std::size_t count = std::size_t{1} << k.num_vertices();
  std::vector<PairScan> scans(count);
  parallel_for(count - 1, jobs, [&](std::size_t i) { scans[i + 1] = scan_first(subsets, k, f, i + 1); });
  return merge_scans(scans);
}

WeakGolodResult weak_golod_check(const SimplicialComplex& k, const Field& f, int jobs) {
  return weak_golod_scan(k, subset_cohomology(k, f, jobs), f, jobs);
}

WeakGolodResult weak_golod_check_serial(const SimplicialComplex& k, const Field& f) {
  auto subsets = subset_cohomology_serial(k, f);
  const std::size_t count = std::size_t{1} << k.num_vertices();
  std::vector<PairScan> scans(count);
  for (std::size_t i = 1; i < count; ++i) scans[i] = scan_first(subsets, k, f, i);
  return merge_scans(scans);
}

}  // namespace golod
