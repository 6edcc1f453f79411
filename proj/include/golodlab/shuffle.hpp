#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "golodlab/simplicial.hpp"

namespace golod {

/// (p,q)-shuffle stored with both endpoints: s = (s_0, ..., s_{q+1}),
/// 0 = s_0 <= s_1 <= ... <= s_q <= s_{q+1} = p.
class Shuffle {
 public:
  Shuffle(int p, std::vector<int> s);

  int p() const { return p_; }
  int q() const { return static_cast<int>(s_.size()) - 2; }
  int operator[](int k) const { return s_[k]; }
  const std::vector<int>& entries() const { return s_; }
  std::string to_string() const;

  auto operator<=>(const Shuffle&) const = default;
  bool operator==(const Shuffle&) const = default;

 private:
  int p_;
  std::vector<int> s_;
};

struct StepClassification {
  std::set<int> right;
  std::set<int> up;
  std::set<int> corner_down;
  std::set<int> corner_up;
};

/// All of S(p,q) in lexicographic order of entries.
std::vector<Shuffle> enumerate_shuffles(int p, int q);
StepClassification classify(const Shuffle& s);
/// (-1)^{s_1 + ... + s_q}
int sgn(const Shuffle& s);

/// α_i for i in corner_down (i = s_k + k - 1): lowers s_k by one.
Shuffle flip_alpha(const Shuffle& s, int i);
/// β_j for j in corner_up (j = s_l + l): raises s_l by one.
Shuffle flip_beta(const Shuffle& s, int j);

/// λ_k : S(p-1,q) → S(p,q), adds one to s_{k+1}, ..., s_{q+1}.
Shuffle ladder_lambda(const Shuffle& s, int k);
/// ν_k : S(p,q-1) → S(p,q), repeats t_k; 0 <= k <= q.
Shuffle ladder_nu(const Shuffle& t, int k);

/// Ŝ(p,q): shuffles with s_1 < s_2 < ... < s_{q+1}.
std::vector<Shuffle> enumerate_hat_shuffles(int p, int q);
/// 0 for k ≡ 1,2 (mod 4); 1 for k ≡ 0,3 (mod 4).
int epsilon_k(int k);

/// Coarsening I^s of `p` into k+1 blocks by the breakpoints of s ∈ S(j-i,k):
/// block 0 = I_0 .. I_{i+s_1}, block m = I_{i+s_m+1} .. I_{i+s_{m+1}}, and the last
/// block also takes I_{j+1} .. I_q, so the blocks cover the whole universe.
VertexPartition partition_from_shuffle(const VertexPartition& p, int i, int j, const Shuffle& s);

}  // namespace golod
