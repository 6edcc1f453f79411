#include "golodlab/prism.hpp"

#include "golodlab/errors.hpp"

namespace golod {

namespace {

void add_to(IntChain& chain, FaceMask face, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = chain.emplace(face, coeff);
  if (!inserted && (it->second += coeff) == 0) chain.erase(it);
}

IntChain boundary_unreduced(const IntChain& chain) {
  IntChain out;
  for (auto [face, coeff] : chain) {
    if (card(face) <= 1) continue;
    int m = 0;
    for (FaceMask rest = face; rest; rest &= rest - 1, ++m)
      add_to(out, face & ~(rest & -rest), (m & 1) ? -coeff : coeff);
  }
  return out;
}

void accumulate(IntChain& into, const IntChain& from, long long scale) {
  for (auto [face, coeff] : from) add_to(into, face, scale * coeff);
}

IntChain prism_of_boundary(FaceMask sigma, int q, const VertexRule& rule) {
  IntChain out;
  if (card(sigma) <= 1) return out;
  int m = 0;
  for (FaceMask rest = sigma; rest; rest &= rest - 1, ++m)
    accumulate(out, prism_chain(sigma & ~(rest & -rest), q, rule), (m & 1) ? -1 : 1);
  return out;
}

void record(Residual& r, int d, FaceMask source, const IntChain& chain, const Field& f) {
  for (auto [face, coeff] : chain) {
    Scalar v = f.from_int(coeff);
    if (!v.is_zero()) r.entries.push_back({d, source, face, v});
  }
}

// Left side ∂P + (-1)^{q-1} P∂ of the boundary identity.
IntChain identity_lhs(FaceMask sigma, int q, const VertexRule& rule) {
  IntChain lhs = boundary_unreduced(prism_chain(sigma, q, rule));
  accumulate(lhs, prism_of_boundary(sigma, q, rule), ((q - 1) & 1) ? -1 : 1);
  return lhs;
}

int sign_of(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

std::vector<int> sigma_odot(FaceMask sigma, const Shuffle& s) {
  auto v = vertices_of(sigma);
  if (static_cast<int>(v.size()) != s.p() + 1) throw DomainError("simplex dimension does not match the shuffle");
  const int q = s.q();
  std::vector<int> out;
  out.reserve(s.p() + q + 1);
  for (int l = 0; l <= q; ++l)
    for (int m = s[l]; m <= s[l + 1]; ++m) out.push_back(product_vertex(v[m], l, q));
  return out;
}

FaceMask sigma_odot_face(FaceMask sigma, const Shuffle& s) {
  FaceMask out = 0;
  for (int x : sigma_odot(sigma, s)) out |= bit(x);
  return out;
}

IntChain prism_chain(FaceMask sigma, int q, const VertexRule& rule) {
  IntChain out;
  const int p = dim(sigma);
  if (p < 0) return out;
  for (const auto& s : enumerate_shuffles(p, q)) {
    auto seq = sigma_odot(sigma, s);
    for (int& x : seq) x = rule[x];
    OrientedFace img = orient(seq);
    if (img.sign != 0) add_to(out, img.face, sgn(s) * img.sign);
  }
  return out;
}

std::size_t count_collapses(const SimplicialComplex& k, int q, const VertexRule& rule) {
  std::size_t count = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    auto shuffles = enumerate_shuffles(d, q);
    for (FaceMask sigma : k.faces(d))
      for (const auto& s : shuffles) {
        auto seq = sigma_odot(sigma, s);
        for (int& x : seq) x = rule[x];
        if (orient(seq).sign == 0) ++count;
      }
  }
  return count;
}

VertexRule compose_coface(const VertexRule& rule, int n, int q, int i) {
  if (q < 1 || i < 0 || i > q) throw DomainError("coface index out of range");
  VertexRule out(n * q);
  for (int v = 0; v < n; ++v)
    for (int l = 0; l < q; ++l) out[product_vertex(v, l, q - 1)] = rule[product_vertex(v, l < i ? l : l + 1, q)];
  return out;
}

VertexRule compose_after(std::span<const int> g, const VertexRule& rule) {
  VertexRule out(rule.size());
  for (std::size_t x = 0; x < rule.size(); ++x) out[x] = g[rule[x]];
  return out;
}

PrismOperator::PrismOperator(ComplexPtr source, int q, VertexRule rule, ComplexPtr target)
    : source_(std::move(source)), target_(std::move(target)), q_(q), rule_(std::move(rule)) {
  if (q_ < 0) throw DomainError("prism operator needs q >= 0");
  if (static_cast<int>(rule_.size()) != source_->num_vertices() * (q_ + 1))
    throw DomainError("vertex rule does not match K⊗Δ^q");
  for (int d = 0; d <= source_->dimension(); ++d) {
    auto& cols = columns_.emplace_back();
    for (FaceMask sigma : source_->faces(d)) cols.push_back(prism_chain(sigma, q_, rule_));
  }
}

Matrix PrismOperator::matrix(int d, const Field& f) const {
  if (!target_) throw DomainError("prism operator has no materialized target");
  const auto& rows = target_->faces(d + q_);
  const std::size_t ncols = d < 0 || d >= static_cast<int>(columns_.size()) ? 0 : columns_[d].size();
  Matrix m(f, rows.size(), ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (auto [face, coeff] : columns_[d][c]) {
      int r = target_->index_of(face);
      if (r < 0) throw VerificationError("prism image is not a face of the target");
      m(r, c) = f.from_int(coeff);
    }
  return m;
}

SimplicialComplex product_base(const SimplicialComplex& product, int q) {
  const int total = product.num_vertices();
  if (q < 0 || total % (q + 1) != 0) throw DomainError("source is not of the form K⊗Δ^q");
  const int n = total / (q + 1);
  std::vector<VertexLabel> base;
  for (int v = 0; v < n; ++v) {
    VertexLabel l = product.vertex(product_vertex(v, 0, q));
    if (l.path.size() < 2) throw DomainError("source is not of the form K⊗Δ^q");
    l.path.pop_back();
    base.push_back(std::move(l));
  }
  FaceMask level0 = 0;
  for (int v = 0; v < n; ++v) level0 |= bit(product_vertex(v, 0, q));
  std::vector<FaceMask> gens;
  for (int d = 0; d <= product.dimension(); ++d)
    for (FaceMask f : product.faces(d))
      if ((f & ~level0) == 0) gens.push_back(compress(f, level0));
  SimplicialComplex k(std::move(base), gens);
  if (!(ordered_product(k, q) == product)) throw DomainError("source is not of the form K⊗Δ^q");
  return k;
}

PrismOperator build_prism(const SimplicialMap& h, int q) {
  return PrismOperator(share(product_base(h.source(), q)), q, h.assignment(), h.target_ptr());
}

VertexRule homotopy_rule(const SimplicialComplex& k, const VertexPartition& p) {
  if (p.universe() != k.vertex_mask()) throw DomainError("partition does not match the complex");
  const int n = k.num_vertices(), q = p.q();
  auto part = p.part_of();
  VertexRule rule(n * (q + 1));
  for (int v = 0; v < n; ++v)
    for (int l = 0; l <= q; ++l) rule[product_vertex(v, l, q)] = std::min(part[v], l) * n + v;
  return rule;
}

PrismOperator prism_P(const ComplexPtr& k, const VertexPartition& p) {
  return PrismOperator(k, p.q(), homotopy_rule(*k, p));
}

Residual verify_boundary_identity(const SimplicialComplex& k, int q, const VertexRule& rule, const Field& f) {
  Residual r;
  const int n = k.num_vertices();
  std::vector<VertexRule> faces;
  if (q >= 1)
    for (int i = 0; i <= q; ++i) faces.push_back(compose_coface(rule, n, q, i));
  for (int d = 0; d <= k.dimension(); ++d)
    for (FaceMask sigma : k.faces(d)) {
      IntChain res = identity_lhs(sigma, q, rule);
      for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        accumulate(res, prism_chain(sigma, q - 1, faces[i]), -sign_of(i));
      record(r, d, sigma, res, f);
    }
  return r;
}

Residual verify_boundary_identity(const SimplicialMap& h, int q, const Field& f) {
  SimplicialComplex k = product_base(h.source(), q);
  return verify_boundary_identity(k, q, h.assignment(), f);
}

std::vector<int> mu_insert_map(const SimplicialComplex& k, const VertexPartition& p, int i) {
  const int n = k.num_vertices(), q = p.q();
  if (i < 0 || i >= q) throw DomainError("μ index out of range");
  auto part = p.part_of();
  std::vector<int> g(n * q);
  for (int c = 0; c < q; ++c)
    for (int v = 0; v < n; ++v) {
      int copy = c < i ? c : c > i ? c + 1 : (part[v] <= i ? i : i + 1);
      g[c * n + v] = copy * n + v;
    }
  return g;
}

Residual verify_boundary_identity_I(const SimplicialComplex& k, const VertexPartition& p, const Field& f) {
  Residual r;
  const int n = k.num_vertices(), q = p.q();
  VertexRule rule = homotopy_rule(k, p);
  std::vector<VertexRule> merged;
  for (int i = 0; i < q; ++i)
    merged.push_back(compose_after(mu_insert_map(k, p, i), homotopy_rule(k, partition_merge(p, i))));
  VertexRule last;
  if (q >= 1) last = compose_coface(rule, n, q, q);
  for (int d = 0; d <= k.dimension(); ++d)
    for (FaceMask sigma : k.faces(d)) {
      IntChain res = identity_lhs(sigma, q, rule);
      for (int i = 0; i < q; ++i) accumulate(res, prism_chain(sigma, q - 1, merged[i]), -sign_of(i));
      if (q >= 1) accumulate(res, prism_chain(sigma, q - 1, last), -sign_of(q));
      record(r, d, sigma, res, f);
    }
  return r;
}

CochainEvaluator star_evaluator(const SimplicialComplex& k, std::vector<Cochain> blocks) {
  if (blocks.empty()) throw DomainError("star product needs at least one factor");
  const int n = k.num_vertices();
  Field f = blocks.front().field;
  return [&k, n, f, blocks = std::move(blocks)](FaceMask mask) {
    Scalar out = f.one();
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      FaceMask b = (mask >> (l * n)) & low_mask(n);
      if (card(b) != blocks[l].degree + 1) return f.zero();
      int idx = k.index_of(b);
      if (idx < 0) return f.zero();
      const Scalar& v = blocks[l].values[idx];
      if (v.is_zero()) return f.zero();
      out *= v;
    }
    return out;
  };
}

CochainEvaluator coboundary_evaluator(CochainEvaluator c, Field f) {
  return [c = std::move(c), f](FaceMask rho) {
    Scalar out = f.zero();
    int m = 0;
    for (FaceMask rest = rho; rest; rest &= rest - 1, ++m) {
      Scalar v = c(rho & ~(rest & -rest));
      if (v.is_zero()) continue;
      if (m & 1)
        out -= v;
      else
        out += v;
    }
    return out;
  };
}

CochainEvaluator pullback_evaluator(CochainEvaluator c, std::vector<int> vertex_map, Field f) {
  return [c = std::move(c), g = std::move(vertex_map), f](FaceMask sigma) {
    int buf[kMaxVertices];
    int len = 0;
    for (FaceMask rest = sigma; rest; rest &= rest - 1) buf[len++] = g[std::countr_zero(rest)];
    OrientedFace img = orient(std::span<const int>(buf, len));
    if (img.sign == 0) return f.zero();
    Scalar v = c(img.face);
    return img.sign > 0 ? v : -v;
  };
}

Cochain tabulate(const SimplicialComplex& k, const CochainEvaluator& c, int degree, const Field& f) {
  Cochain out = zero_cochain(k, f, degree);
  const auto& faces = k.faces(degree);
  for (std::size_t i = 0; i < faces.size(); ++i) out.values[i] = c(faces[i]);
  return out;
}

Cochain prism_pullback(const SimplicialComplex& k, int q, const VertexRule& rule, const CochainEvaluator& c, int p,
                       const Field& f) {
  Cochain out = zero_cochain(k, f, p);
  if (p < 0) return out;
  auto shuffles = enumerate_shuffles(p, q);
  const auto& faces = k.faces(p);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    Scalar acc = f.zero();
    for (const auto& s : shuffles) {
      auto seq = sigma_odot(faces[i], s);
      for (int& x : seq) x = rule[x];
      OrientedFace img = orient(seq);
      if (img.sign == 0) continue;
      Scalar v = c(img.face);
      if (v.is_zero()) continue;
      if (img.sign * sgn(s) > 0)
        acc += v;
      else
        acc -= v;
    }
    out.values[i] = acc;
  }
  return out;
}

Cochain prism_lemma_residual(const SimplicialComplex& k, const VertexPartition& p, const std::vector<Cochain>& a,
                             const Field& f) {
  const int q = p.q();
  if (static_cast<int>(a.size()) != q + 1) throw DomainError("need one cochain per part");
  int total = q;
  for (const auto& c : a) {
    if (c.degree < 0) throw DomainError("star factors must have degree >= 0");
    total += c.degree;
  }
  const int deg = total - q + 1;
  VertexRule rule = homotopy_rule(k, p);
  CochainEvaluator star = star_evaluator(k, a);
  Cochain out = prism_pullback(k, q, rule, coboundary_evaluator(star, f), deg, f);
  Cochain second = coboundary(k, prism_pullback(k, q, rule, star, deg - 1, f));
  for (std::size_t x = 0; x < out.values.size(); ++x)
    out.values[x] += second.values[x].signed_by((q - 1) & 1);
  for (int i = 0; i < q; ++i) {
    Cochain term = prism_pullback(k, q - 1, homotopy_rule(k, partition_merge(p, i)),
                                  pullback_evaluator(star, mu_insert_map(k, p, i), f), deg, f);
    for (std::size_t x = 0; x < out.values.size(); ++x) out.values[x] -= term.values[x].signed_by(i & 1);
  }
  return out;
}

}  // namespace golod
