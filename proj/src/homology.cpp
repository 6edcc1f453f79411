#include "golodlab/homology.hpp"

#include "golodlab/errors.hpp"

namespace golod {

Cochain zero_cochain(const SimplicialComplex& k, const Field& f, int degree) {
  return {f, degree, zero_vector(f, k.faces(degree).size())};
}

Scalar cochain_value(const SimplicialComplex& k, const Cochain& c, FaceMask face) {
  int idx = card(face) == c.degree + 1 ? k.index_of(face) : -1;
  if (idx < 0) return c.field.zero();
  return c.values[idx];
}

Cochain coboundary(const SimplicialComplex& k, const Cochain& c) {
  if (c.values.size() != k.faces(c.degree).size()) throw DomainError("cochain does not match the complex");
  const auto& upper = k.faces(c.degree + 1);
  Cochain out = zero_cochain(k, c.field, c.degree + 1);
  if (c.values.empty()) return out;
  for (std::size_t r = 0; r < upper.size(); ++r) {
    FaceMask rho = upper[r];
    int m = 0;
    for (FaceMask rest = rho; rest; rest &= rest - 1, ++m) {
      const Scalar& v = c.values[k.index_of(rho & ~(rest & -rest))];
      if (v.is_zero()) continue;
      if (m & 1)
        out.values[r] -= v;
      else
        out.values[r] += v;
    }
  }
  return out;
}

Matrix boundary_matrix(const SimplicialComplex& k, int d, const Field& f, bool reduced) {
  const auto& cols = k.faces(d);
  if (d == 0 && !reduced) return Matrix(f, 0, cols.size());
  const auto& rows = k.faces(d - 1);
  Matrix m(f, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int pos = 0;
    for (FaceMask rest = cols[c]; rest; rest &= rest - 1, ++pos)
      m(k.index_of(cols[c] & ~(rest & -rest)), c) = f.from_int(pos & 1 ? -1 : 1);
  }
  return m;
}

Matrix coboundary_matrix(const SimplicialComplex& k, int d, const Field& f) {
  return boundary_matrix(k, d + 1, f, true).transpose();
}

namespace {

const HomologyDegree& empty_degree() {
  static const HomologyDegree kEmpty;
  return kEmpty;
}

// Given the incoming map (image = boundaries) and outgoing map (kernel = cycles),
// pick class representatives and a left-inverse coordinate map.
HomologyDegree compute_degree(int d, const Field& f, const Matrix& incoming, const Matrix& outgoing) {
  const std::size_t n = outgoing.cols();
  HomologyDegree hd;
  hd.degree = d;
  auto cycles = nullspace(outgoing);
  std::vector<Vector> boundary_cols;
  for (auto c : independent_columns(incoming)) boundary_cols.push_back(incoming.column(c));
  const std::size_t nb = boundary_cols.size();
  std::vector<Vector> all = boundary_cols;
  all.insert(all.end(), cycles.begin(), cycles.end());
  Matrix span = Matrix::from_columns(f, n, all);
  std::vector<Vector> basis;
  for (auto c : independent_columns(span)) {
    basis.push_back(span.column(c));
    if (c >= nb) hd.representatives.push_back(span.column(c));
  }
  // left inverse of [boundaries | reps] via row reduction of [M | I]
  const std::size_t cols = basis.size();
  Matrix aug(f, n, cols + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = basis[c][r];
    aug(r, cols + r) = f.one();
  }
  RrefResult red = rref(std::move(aug));
  hd.projection = Matrix(f, hd.representatives.size(), n);
  for (std::size_t i = 0; i < hd.representatives.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) hd.projection(i, c) = red.reduced(nb + i, cols + c);
  return hd;
}

}  // namespace

const HomologyDegree& HomologyBasis::at(int d) const {
  int i = d - min_degree;
  if (i < 0 || i >= static_cast<int>(degrees.size())) return empty_degree();
  return degrees[i];
}

std::vector<int> HomologyBasis::betti_numbers() const {
  std::vector<int> out;
  for (const auto& d : degrees) out.push_back(d.betti());
  return out;
}

int HomologyBasis::total_rank() const {
  int t = 0;
  for (const auto& d : degrees) t += d.betti();
  return t;
}

HomologyBasis homology(const SimplicialComplex& k, const Field& f, bool reduced) {
  HomologyBasis hb;
  hb.field = f;
  hb.reduced = reduced;
  hb.min_degree = reduced ? -1 : 0;
  for (int d = hb.min_degree; d <= k.dimension(); ++d) {
    Matrix out = d == -1 ? Matrix(f, 0, 1) : boundary_matrix(k, d, f, reduced);
    Matrix in = boundary_matrix(k, d + 1, f, reduced);
    hb.degrees.push_back(compute_degree(d, f, in, out));
  }
  return hb;
}

HomologyBasis cohomology(const SimplicialComplex& k, const Field& f) {
  HomologyBasis hb;
  hb.field = f;
  hb.reduced = true;
  hb.cohomology = true;
  hb.min_degree = -1;
  for (int d = -1; d <= k.dimension(); ++d) {
    Matrix out = coboundary_matrix(k, d, f);
    Matrix in = d == -1 ? Matrix(f, 1, 0) : coboundary_matrix(k, d - 1, f);
    hb.degrees.push_back(compute_degree(d, f, in, out));
  }
  return hb;
}

Vector push_chain(const SimplicialMap& f, int d, std::span<const Scalar> chain, const Field& field) {
  const auto& src = f.source().faces(d);
  if (chain.size() != src.size()) throw DomainError("chain does not match the source complex");
  Vector out = zero_vector(field, f.target().faces(d).size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (chain[i].is_zero()) continue;
    OrientedFace img = f.oriented_image(src[i]);
    if (img.sign == 0 || card(img.face) != d + 1) continue;
    if (img.sign > 0)
      out[f.target().index_of(img.face)] += chain[i];
    else
      out[f.target().index_of(img.face)] -= chain[i];
  }
  return out;
}

Cochain pull_cochain(const SimplicialMap& f, const Cochain& c) {
  const auto& src = f.source().faces(c.degree);
  Cochain out = zero_cochain(f.source(), c.field, c.degree);
  for (std::size_t i = 0; i < src.size(); ++i) {
    OrientedFace img = f.oriented_image(src[i]);
    if (img.sign == 0) continue;
    Scalar v = cochain_value(f.target(), c, img.face);
    out.values[i] = img.sign > 0 ? v : -v;
  }
  return out;
}

Matrix induced_map(const SimplicialMap& f, const Field& field, int d, bool reduced) {
  HomologyBasis hs = homology(f.source(), field, reduced);
  HomologyBasis ht = homology(f.target(), field, reduced);
  const auto& src = hs.at(d);
  const auto& tgt = ht.at(d);
  Matrix m(field, tgt.betti(), src.betti());
  for (int c = 0; c < src.betti(); ++c) {
    Vector pushed = d == -1 ? src.representatives[c] : push_chain(f, d, src.representatives[c], field);
    if (tgt.betti() == 0) continue;
    Vector coords = tgt.coordinates(pushed);
    for (int r = 0; r < tgt.betti(); ++r) m(r, c) = coords[r];
  }
  return m;
}

bool is_injective(const SimplicialMap& f, const Field& field, bool reduced) {
  for (int d = reduced ? -1 : 0; d <= f.source().dimension(); ++d) {
    Matrix m = induced_map(f, field, d, reduced);
    if (rank(m) != m.cols()) return false;
  }
  return true;
}

bool is_surjective_on_cohomology(const SimplicialMap& f, const Field& field) {
  HomologyBasis hs = cohomology(f.source(), field);
  HomologyBasis ht = cohomology(f.target(), field);
  for (int d = -1; d <= f.source().dimension(); ++d) {
    const auto& src = hs.at(d);
    if (src.betti() == 0) continue;
    const auto& tgt = ht.at(d);
    Matrix m(field, src.betti(), tgt.betti());
    for (int c = 0; c < tgt.betti(); ++c) {
      Cochain pulled = pull_cochain(f, Cochain{field, d, tgt.representatives[c]});
      Vector coords = src.coordinates(pulled.values);
      for (int r = 0; r < src.betti(); ++r) m(r, c) = coords[r];
    }
    if (rank(m) != static_cast<std::size_t>(src.betti())) return false;
  }
  return true;
}

std::optional<Cochain> express_as_coboundary(const SimplicialComplex& k, const Cochain& c) {
  if (c.values.size() != k.faces(c.degree).size()) throw DomainError("cochain does not match the complex");
  if (c.degree == -1) {
    if (c.is_zero()) return Cochain{c.field, -2, {}};
    return std::nullopt;
  }
  if (c.values.empty()) return zero_cochain(k, c.field, c.degree - 1);
  Matrix d = coboundary_matrix(k, c.degree - 1, c.field);
  auto x = solve(d, c.values);
  if (!x) return std::nullopt;
  return Cochain{c.field, c.degree - 1, std::move(*x)};
}

}  // namespace golod
