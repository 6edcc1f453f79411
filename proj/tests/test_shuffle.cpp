#include "doctest.h"

#include <set>

#include "golodlab/errors.hpp"
#include "golodlab/shuffle.hpp"
#include "oracles.hpp"

using namespace golod;

TEST_CASE("enumeration matches brute force and binomials") {
  CHECK(enumerate_shuffles(2, 1) ==
        std::vector<Shuffle>{Shuffle(2, {0, 0, 2}), Shuffle(2, {0, 1, 2}), Shuffle(2, {0, 2, 2})});
  for (int p = 0; p <= 6; ++p) CHECK(enumerate_shuffles(p, 0) == std::vector<Shuffle>{Shuffle(p, {0, p})});
  for (int p = 0; p <= 10; ++p)
    for (int q = 0; p + q <= 10; ++q) {
      const auto all = enumerate_shuffles(p, q);
      CHECK(static_cast<long long>(all.size()) == oracle::binom(p + q, q));
      std::vector<std::vector<int>> entries;
      for (const auto& s : all) entries.push_back(s.entries());
      CHECK(entries == oracle::shuffles(p, q));
    }
}

TEST_CASE("invalid shuffles are rejected") {
  CHECK_THROWS_AS(Shuffle(3, {0, 2, 1, 3}), DomainError);
  CHECK_THROWS_AS(Shuffle(3, {1, 3}), DomainError);
  CHECK_THROWS_AS(Shuffle(3, {0, 2}), DomainError);
}

TEST_CASE("classification of the worked lattice path") {
  const Shuffle s(6, {0, 2, 3, 3, 6});
  const auto c = classify(s);
  CHECK(c.right == std::set<int>{0, 1, 7, 8, 9});
  CHECK(c.up == std::set<int>{5});
  CHECK(c.corner_down == std::set<int>{2, 4});
  CHECK(c.corner_up == std::set<int>{3, 6});
  CHECK(sgn(s) == 1);
}

TEST_CASE("classification is a disjoint cover") {
  for (int p = 0; p <= 10; ++p)
    for (int q = 0; p + q <= 10; ++q)
      for (const auto& s : enumerate_shuffles(p, q)) {
        const auto c = classify(s);
        std::set<int> all;
        std::size_t total = 0;
        for (const auto* part : {&c.right, &c.up, &c.corner_down, &c.corner_up}) {
          all.insert(part->begin(), part->end());
          total += part->size();
        }
        CHECK(total == all.size());
        CHECK(all.size() == static_cast<std::size_t>(p + q + 1));
        CHECK(*all.begin() == 0);
        CHECK(*all.rbegin() == p + q);
      }
  for (int p = 1; p <= 6; ++p) {
    const auto c = classify(Shuffle(p, {0, p}));
    CHECK(c.right.size() == static_cast<std::size_t>(p + 1));
    CHECK(c.up.empty());
  }
}

TEST_CASE("flip fixtures") {
  const Shuffle s(6, {0, 2, 3, 3, 6});
  CHECK(flip_alpha(s, 2) == Shuffle(6, {0, 1, 3, 3, 6}));
  CHECK(flip_beta(s, 3) == Shuffle(6, {0, 3, 3, 3, 6}));
  CHECK_THROWS_AS(flip_alpha(s, 0), DomainError);
  CHECK_THROWS_AS(flip_beta(s, 5), DomainError);
}

TEST_CASE("flips form a global bijection between the corner sets") {
  for (int p = 0; p <= 8; ++p)
    for (int q = 0; p + q <= 8; ++q) {
      std::set<std::pair<int, Shuffle>> downs, ups, images;
      for (const auto& s : enumerate_shuffles(p, q)) {
        const auto c = classify(s);
        for (int i : c.corner_down) downs.insert({i, s});
        for (int j : c.corner_up) ups.insert({j, s});
      }
      for (const auto& [i, s] : downs) {
        const Shuffle t = flip_alpha(s, i);
        CHECK(classify(t).corner_up.count(i) == 1);
        CHECK(flip_beta(t, i) == s);
        CHECK(sgn(t) == -sgn(s));
        images.insert({i, t});
      }
      for (const auto& [j, s] : ups) CHECK(flip_alpha(flip_beta(s, j), j) == s);
      CHECK(images == ups);
    }
}

TEST_CASE("ladder maps are injective and satisfy the sign relations") {
  for (int p = 1; p <= 8; ++p)
    for (int q = 0; p + q <= 8; ++q)
      for (int k = 0; k <= q; ++k) {
        std::set<Shuffle> seen;
        for (const auto& s : enumerate_shuffles(p - 1, q)) {
          const Shuffle t = ladder_lambda(s, k);
          CHECK(t.p() == p);
          CHECK(t.q() == q);
          CHECK(sgn(t) == ((q - k) % 2 ? -sgn(s) : sgn(s)));
          CHECK(seen.insert(t).second);
        }
      }
  for (int p = 0; p <= 8; ++p)
    for (int q = 1; p + q <= 8; ++q)
      for (int k = 0; k <= q; ++k) {
        std::set<Shuffle> seen;
        for (const auto& t : enumerate_shuffles(p, q - 1)) {
          const Shuffle s = ladder_nu(t, k);
          CHECK(s.q() == q);
          CHECK(sgn(s) == (t[k] % 2 ? -sgn(t) : sgn(t)));
          CHECK(seen.insert(s).second);
        }
      }
  CHECK_THROWS_AS(ladder_lambda(Shuffle(2, {0, 1, 2}), 2), DomainError);
  CHECK_THROWS_AS(ladder_nu(Shuffle(2, {0, 1, 2}), 3), DomainError);
}

TEST_CASE("hat shuffles") {
  for (int n = 0; n <= 5; ++n) {
    std::vector<int> s{0};
    for (int v = 0; v <= n; ++v) s.push_back(v);
    CHECK(enumerate_hat_shuffles(n, n) == std::vector<Shuffle>{Shuffle(n, s)});
  }
  CHECK(enumerate_hat_shuffles(3, 1) ==
        std::vector<Shuffle>{Shuffle(3, {0, 0, 3}), Shuffle(3, {0, 1, 3}), Shuffle(3, {0, 2, 3})});
  CHECK(enumerate_hat_shuffles(1, 2).empty());
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; q <= p; ++q) CHECK(static_cast<long long>(enumerate_hat_shuffles(p, q).size()) == oracle::binom(p, q));
}

TEST_CASE("epsilon of k") {
  CHECK(epsilon_k(1) == 0);
  CHECK(epsilon_k(2) == 0);
  CHECK(epsilon_k(3) == 1);
  CHECK(epsilon_k(4) == 1);
  CHECK(epsilon_k(5) == 0);
  for (int k = 1; k <= 12; ++k) CHECK(epsilon_k(k) == ((k - 1) / 2) % 2);
}
