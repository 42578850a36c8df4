#include "support.hpp"

#include <set>

using namespace kmjm;
using namespace kmjm::test;

TEST_CASE("reflect examples") {
  const Gcm g = hyp(5, 1);
  CHECK(reflect(g, 0, RootVec{0, 1}) == RootVec{1, 1});
  CHECK(reflect(g, 1, RootVec{1, 0}) == RootVec{1, 5});
  for (int i = 0; i < 2; ++i) CHECK(reflect(g, i, RootVec::simple(2, i)) == -RootVec::simple(2, i));
}

TEST_CASE("reflect_coweight examples") {
  CHECK(reflect_coweight(hyp(5, 1), 1, Coweight{3, 0}) == Coweight{3, 0});
  CHECK(reflect_coweight(hyp(3), 0, Coweight{0, 0}) == Coweight{0, 0});
  const Coweight t = reflect_coweight(hyp(3), 0, Coweight{1, 1});
  CHECK(grade_of(RootVec{1, 0}, t) == -1);
}

TEST_CASE("reflect_coweight is contragredient") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Gcm g = sweeps::random_gcm(rng, 4, -5);
    const auto n = g.rank();
    IntVector v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = sweeps::uniform(rng, -4, 4);
    const Coweight tau(v);
    const RootVec beta = random_vec(rng, n, -6, 6);
    const int i = static_cast<int>(sweeps::uniform(rng, 0, n - 1));
    CHECK(grade_of(beta, reflect_coweight(g, i, tau)) == grade_of(reflect(g, i, beta), tau));
    CHECK(reflect(g, i, reflect(g, i, beta)) == beta);
    CHECK(reflect(g, i, beta).norm(g) == beta.norm(g));
  }
}

TEST_CASE("inversion_set examples") {
  CHECK(inversion_set(hyp(3), WeylWord{0, 1, 0}) == std::vector<RootVec>{{1, 0}, {3, 1}, {8, 3}});
  CHECK(inversion_set(a2(), WeylWord{0}) == std::vector<RootVec>{{1, 0}});
  CHECK(inversion_set(hyp(5, 1), WeylWord{1, 0, 1}) == std::vector<RootVec>{{0, 1}, {1, 5}, {1, 4}});
  CHECK(inversion_set(a2(), WeylWord{}).empty());
  CHECK(kind_of([] { inversion_set(a2(), WeylWord{0, 0}); }) == ErrorKind::NotReduced);
  CHECK(kind_of([] { inversion_set(a2(), WeylWord{0, 1, 0, 1}); }) == ErrorKind::NotReduced);
}

TEST_CASE("is_reduced examples") {
  CHECK_FALSE(is_reduced(hyp(3), WeylWord{0, 0}));
  CHECK(is_reduced(hyp(3), WeylWord{0, 1, 0, 1}));
  CHECK(is_reduced(hyp(3), WeylWord{}));
  CHECK(is_reduced(a2(), WeylWord{0, 1, 0}));
  CHECK(is_reduced(a2(), WeylWord{1, 0, 1}));
  CHECK_FALSE(is_reduced(a2(), WeylWord{0, 1, 0, 1}));
  // Commuting letters.
  const Gcm a1a1 = gcm({{2, 0}, {0, 2}});
  CHECK(is_reduced(a1a1, WeylWord{0, 1}));
  CHECK_FALSE(is_reduced(a1a1, WeylWord{0, 1, 0}));
}

TEST_CASE("reduce_word") {
  CHECK(reduce_word(a2(), WeylWord{0, 0}) == WeylWord{});
  CHECK(reduce_word(a2(), WeylWord{0, 1, 0, 1}).length() == 2);
  const Gcm a1a1 = gcm({{2, 0}, {0, 2}});
  CHECK(reduce_word(a1a1, WeylWord{0, 1, 0}) == WeylWord{1});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Gcm g = sweeps::random_gcm(rng, 4, -3);
    WeylWord w;
    const auto len = sweeps::uniform(rng, 0, 9);
    for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(sweeps::uniform(rng, 0, g.rank() - 1)));
    const WeylWord r = reduce_word(g, w);
    CHECK(is_reduced(g, r));
    CHECK(r.length() <= w.length());
    CHECK((w.length() - r.length()) % 2 == 0);
    const RootVec probe = random_vec(rng, g.rank(), -3, 3);
    CHECK(apply_word(g, r, probe) == apply_word(g, w, probe));
  }
}

TEST_CASE("property: inversion sets of reduced words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const Gcm g = sweeps::random_gcm(rng, 3, -4);
    const WeylWord w = sweeps::random_reduced_word(rng, g, 10);
    CAPTURE(g.entries());
    const auto inv = inversion_set(g, w);
    REQUIRE(inv.size() == w.length());
    const std::set<RootVec> set(inv.begin(), inv.end());
    CHECK(set.size() == inv.size());
    for (const auto& beta : inv) {
      CHECK(beta.is_positive());
      CHECK(is_real_root(g, beta));
      // beta in Phi_w iff w^{-1} beta < 0.
      CHECK(apply_word(g, w.inverse(), beta).is_negative());
    }
    // Closed under sums that are roots.
    for (const auto& x : inv) {
      for (const auto& y : inv) {
        const RootVec s = x + y;
        if (is_real_root(g, s)) CHECK(set.count(s) == 1);
      }
    }
  }
}

TEST_CASE("membership law: a positive root is in Phi_w iff w^{-1} sends it negative") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Gcm g = sweeps::random_gcm(rng, 3, -3);
    const WeylWord w = sweeps::random_reduced_word(rng, g, 6);
    const auto inv = inversion_set(g, w);
    const std::set<RootVec> set(inv.begin(), inv.end());
    for (const auto& beta : real_roots_up_to_height(g, 12)) {
      CHECK((set.count(beta) == 1) == apply_word(g, w.inverse(), beta).is_negative());
    }
  }
}

TEST_CASE("alternating words in H(3)") {
  const auto words = sweeps::alternating_words(6);
  CHECK(words.size() == 13);
  for (const auto& w : words) CHECK(is_reduced(hyp(3), w));
}
