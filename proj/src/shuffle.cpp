#include "golodlab/shuffle.hpp"

#include <sstream>

#include "golodlab/errors.hpp"

namespace golod {

Shuffle::Shuffle(int p, std::vector<int> s) : p_(p), s_(std::move(s)) {
  if (p_ < 0) throw DomainError("shuffle needs p >= 0");
  if (s_.size() < 2 || s_.front() != 0 || s_.back() != p_) throw DomainError("shuffle endpoints must be 0 and p");
  for (std::size_t k = 1; k < s_.size(); ++k)
    if (s_[k] < s_[k - 1]) throw DomainError("shuffle entries must be weakly increasing");
}

std::string Shuffle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < s_.size(); ++k) os << (k ? "," : "") << s_[k];
  os << ')';
  return os.str();
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("shuffle sizes must be non-negative");
  std::vector<Shuffle> out;
  std::vector<int> s(q + 2, 0);
  s[q + 1] = p;
  // odometer over weakly increasing s_1..s_q
  while (true) {
    out.emplace_back(p, s);
    int k = q;
    while (k >= 1 && s[k] == p) --k;
    if (k < 1) break;
    int v = s[k] + 1;
    for (int m = k; m <= q; ++m) s[m] = v;
  }
  return out;
}

StepClassification classify(const Shuffle& sh) {
  const int p = sh.p(), q = sh.q(), n = p + q;
  const auto& s = sh.entries();
  StepClassification c;
  for (int k = 0; k <= q; ++k)
    for (int i = s[k] + k + 1; i < s[k + 1] + k; ++i)
      if (0 < i && i < n) c.right.insert(i);
  if (s[0] < s[1]) c.right.insert(0);
  if (s[q] < s[q + 1]) c.right.insert(n);
  for (int k = 0; k <= q; ++k) {
    int i = s[k] + k;
    if (i < n && s[k] == s[k + 1]) c.up.insert(i);
  }
  if (s[q] == s[q + 1]) c.up.insert(n);
  for (int k = 1; k <= q + 1; ++k) {
    int i = s[k] + k - 1;
    if (0 < i && i < n && s[k - 1] < s[k]) c.corner_down.insert(i);
  }
  for (int k = 0; k <= q; ++k) {
    int i = s[k] + k;
    if (0 < i && i < n && s[k] < s[k + 1]) c.corner_up.insert(i);
  }
  return c;
}

int sgn(const Shuffle& s) {
  int sum = 0;
  for (int k = 1; k <= s.q(); ++k) sum += s[k];
  return (sum & 1) ? -1 : 1;
}

Shuffle flip_alpha(const Shuffle& sh, int i) {
  const auto& s = sh.entries();
  for (int k = 1; k <= sh.q(); ++k)
    if (i == s[k] + k - 1 && s[k - 1] < s[k] && 0 < i && i < sh.p() + sh.q()) {
      auto t = s;
      --t[k];
      return Shuffle(sh.p(), std::move(t));
    }
  throw DomainError("index " + std::to_string(i) + " is not a lower corner of " + sh.to_string());
}

Shuffle flip_beta(const Shuffle& sh, int j) {
  const auto& s = sh.entries();
  for (int l = 1; l <= sh.q(); ++l)
    if (j == s[l] + l && s[l] < s[l + 1] && j < sh.p() + sh.q()) {
      auto t = s;
      ++t[l];
      return Shuffle(sh.p(), std::move(t));
    }
  throw DomainError("index " + std::to_string(j) + " is not an upper corner of " + sh.to_string());
}

Shuffle ladder_lambda(const Shuffle& sh, int k) {
  if (k < 0 || k > sh.q()) throw DomainError("ladder index out of range");
  auto t = sh.entries();
  for (int m = k + 1; m <= sh.q() + 1; ++m) ++t[m];
  return Shuffle(sh.p() + 1, std::move(t));
}

Shuffle ladder_nu(const Shuffle& sh, int k) {
  if (k < 0 || k > sh.q() + 1) throw DomainError("ladder index out of range");
  auto t = sh.entries();
  t.insert(t.begin() + k, t[k]);
  return Shuffle(sh.p(), std::move(t));
}

std::vector<Shuffle> enumerate_hat_shuffles(int p, int q) {
  std::vector<Shuffle> out;
  if (q > p) return out;
  for (auto& s : enumerate_shuffles(p, q)) {
    bool ok = true;
    for (int k = 2; k <= q + 1 && ok; ++k) ok = s[k - 1] < s[k];
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

int epsilon_k(int k) {
  int r = ((k % 4) + 4) % 4;
  return (r == 0 || r == 3) ? 1 : 0;
}

VertexPartition partition_from_shuffle(const VertexPartition& p, int i, int j, const Shuffle& s) {
  if (i < 0 || j > p.q() || i > j) throw DomainError("part range out of bounds");
  if (s.p() != j - i) throw DomainError("shuffle size does not match the part range");
  const int k = s.q();
  std::vector<VertexSet> blocks;
  blocks.push_back(p.range(0, k == 0 ? p.q() : i + s[1]));
  for (int m = 1; m <= k; ++m) {
    VertexSet b = p.range(i + s[m] + 1, m == k ? p.q() : i + s[m + 1]);
    if (b == 0) throw DomainError("shuffle " + s.to_string() + " leaves an empty block");
    blocks.push_back(b);
  }
  return VertexPartition(p.universe(), std::move(blocks));
}

}  // namespace golod
