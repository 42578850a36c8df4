#include "support.hpp"

using namespace kmjm;
using namespace kmjm::test;

namespace {

// A random basis element of a root space with |height| <= max_height,
// scaled by a small nonzero rational.
AlgElement random_basis_element(const TruncatedAlgebra& alg, std::mt19937_64& rng, std::int64_t max_height) {
  std::vector<std::pair<RootVec, Eigen::Index>> pool;
  for (const auto& [root, dim] : alg.positive_dims()) {
    if (root.height() <= max_height) pool.emplace_back(root, dim);
  }
  const auto& [root, dim] = pool[static_cast<std::size_t>(sweeps::uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
  const RootVec signed_root = sweeps::uniform(rng, 0, 1) ? root : -root;
  const int index = static_cast<int>(sweeps::uniform(rng, 0, dim - 1));
  std::int64_t c = 0;
  while (c == 0) c = sweeps::uniform(rng, -3, 3);
  return Rational(c) * alg.basis_element(BasisId{signed_root, index});
}

}  // namespace

TEST_CASE("build_truncated examples") {
  const auto a = build_truncated(a2(), 2);
  CHECK(a.dim(RootVec{1, 0}) == 1);
  CHECK(a.dim(RootVec{1, 1}) == 1);
  CHECK(a.dim(RootVec{2, 0}) == 0);
  CHECK(a.total_dimension() == 8);

  const auto aff = build_truncated(affine_a1(), 4);
  CHECK(aff.dim(RootVec{1, 1}) == 1);
  CHECK(aff.dim(RootVec{2, 2}) == 1);
  CHECK(aff.dim(RootVec{1, 2}) == 1);
  CHECK(aff.dim(RootVec{1, 3}) == 0);

  CHECK(build_truncated(hyp(3), 4).dim(RootVec{2, 2}) == 1);
  CHECK(kind_of([] { build_truncated(hyp(3), 12, RealizeOptions{100}); }) == ErrorKind::ResourceCap);
}

TEST_CASE("realized dimensions equal Peterson multiplicities") {
  const std::vector<Gcm> gcms{a2(), affine_a1(), hyp(3), hyp(5, 1), hyp(3, 2), gcm({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}),
                              gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})};
  for (const auto& g : gcms) {
    CAPTURE(g.entries());
    const std::int64_t h = g.rank() == 2 ? 7 : 5;
    const auto alg = build_truncated(g, h);
    const auto table = peterson_multiplicities(g, h);
    for (const auto& [root, m] : table.roots()) CHECK(Integer(alg.dim(root)) == m);
    for (const auto& [root, d] : alg.positive_dims()) CHECK(Integer(d) == table.mult(root));
  }
}

TEST_CASE("bracket examples") {
  const auto alg = build_truncated(hyp(5, 1), 7);
  CHECK(bracket(alg, alg.e(0), alg.f(0)) == alg.coroot(0));
  CHECK(bracket(alg, alg.e(0), alg.f(1)).is_zero());
  // [alpha_i^vee, e_j] = A_ij e_j.
  CHECK(bracket(alg, alg.coroot(1), alg.e(0)) == Rational(-5) * alg.e(0));
  CHECK(bracket(alg, alg.coroot(0), alg.e(1)) == Rational(-1) * alg.e(1));
  CHECK(bracket(alg, alg.coroot(0), alg.f(1)) == alg.f(1));
  // Serre: ad(e_2)^6 e_1 = 0, ad(e_1)^2 e_2 = 0.
  AlgElement x = alg.e(0);
  for (int k = 0; k < 5; ++k) x = bracket(alg, alg.e(1), x);
  CHECK_FALSE(x.is_zero());
  CHECK(bracket(alg, alg.e(1), x).is_zero());
  CHECK(bracket(alg, alg.e(0), bracket(alg, alg.e(0), alg.e(1))).is_zero());

  const auto small = build_truncated(hyp(5, 1), 4);
  const AlgElement e13 = bracket(small, small.e(1), bracket(small, small.e(1), bracket(small, small.e(1), small.e(0))));
  CHECK_FALSE(e13.is_zero());
  CHECK(kind_of([&] { bracket(small, small.e(0), e13); }) == ErrorKind::HeightOutOfRange);
}

TEST_CASE("property: antisymmetry and Jacobi") {
  for (const auto& g : {hyp(3), hyp(5, 1), gcm({{2, -1, 0}, {-2, 2, -1}, {0, -3, 2}})}) {
    const std::int64_t h = 6;
    const auto alg = build_truncated(g, h);
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
      const AlgElement x = random_basis_element(alg, rng, 2);
      const AlgElement y = random_basis_element(alg, rng, 2);
      const AlgElement z = random_basis_element(alg, rng, 2);
      CHECK(bracket(alg, x, x).is_zero());
      CHECK(bracket(alg, x, y) == -bracket(alg, y, x));
      const AlgElement jacobi = bracket(alg, x, bracket(alg, y, z)) + bracket(alg, y, bracket(alg, z, x)) +
                                bracket(alg, z, bracket(alg, x, y));
      CHECK(jacobi.is_zero());
    }
  }
}

TEST_CASE("integrated reflections") {
  const auto alg = build_truncated(hyp(5, 1), 10);
  // s^_2 e_1 spans g_{alpha_1 + 5 alpha_2}.
  const AlgElement s = integrated_reflection(alg, 1, alg.e(0));
  REQUIRE(s.parts().size() == 1);
  CHECK(s.parts().begin()->first == RootVec{1, 5});
  CHECK(integrated_reflection_inverse(alg, 1, s) == alg.e(0));
  CHECK(integrated_reflection(alg, 0, alg.e(0)) == -alg.f(0));
  // Acts on the Cartan part as s_i on coroots.
  CHECK(integrated_reflection(alg, 1, alg.coroot(0)) == alg.coroot(0) + alg.coroot(1));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const AlgElement x = random_basis_element(alg, rng, 3);
    const Eigen::Index i = sweeps::uniform(rng, 0, 1);
    const AlgElement y = integrated_reflection(alg, i, x);
    REQUIRE(y.parts().size() == 1);
    CHECK(y.parts().begin()->first == reflect(alg.gcm(), static_cast<int>(i), x.parts().begin()->first));
    CHECK(integrated_reflection_inverse(alg, i, y) == x);
  }
}

TEST_CASE("real_root_vector") {
  const auto alg = build_truncated(hyp(5, 1), 10);
  const auto simple = real_root_vector(alg, RootVec{0, 1});
  CHECK(simple.positive == alg.e(1));
  CHECK(simple.negative == alg.f(1));

  const auto p = real_root_vector(alg, RootVec{1, 5});
  CHECK(p.positive == integrated_reflection(alg, 1, alg.e(0)));
  CHECK(bracket(alg, p.positive, p.negative) == coroot_element(alg, RootVec{1, 5}));

  const auto alg3 = build_truncated(hyp(3), 8);
  const auto q = real_root_vector(alg3, RootVec{3, 1});
  CHECK(q.positive == integrated_reflection(alg3, 0, alg3.e(1)));
  CHECK(bracket(alg3, q.positive, q.negative) == coroot_element(alg3, RootVec{3, 1}));

  CHECK(kind_of([&] { real_root_vector(alg, RootVec{1, 2}); }) == ErrorKind::NotRealRoot);
  CHECK(kind_of([&] { real_root_vector(alg3, RootVec{8, 3}); }) == ErrorKind::HeightOutOfRange);

  for (const auto& beta : real_roots_up_to_height(hyp(5, 1), 10)) {
    const auto r = real_root_vector(alg, beta);
    CHECK(bracket(alg, coroot_element(alg, beta), r.positive) == Rational(2) * r.positive);
    CHECK(bracket(alg, r.positive, r.negative) == coroot_element(alg, beta));
  }
}

TEST_CASE("exp_ad examples") {
  const auto alg = build_truncated(hyp(5, 1), 10);
  CHECK(exp_ad(alg, alg.e(1), alg.e(1), Rational(3)) == alg.e(1));
  CHECK(exp_ad(alg, alg.e(1), alg.f(0), Rational(0)) == alg.f(0));
  // exp(ad t e_1) f_1 = f_1 + t h_1 - t^2 e_1.
  const Rational t(2, 3);
  CHECK(exp_ad(alg, alg.e(0), alg.f(0), t) == alg.f(0) + t * alg.coroot(0) - t * t * alg.e(0));

  const AlgElement eb = real_root_vector(alg, RootVec{1, 4}).positive;
  for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{{1, 1}, {2, 3}, {1, -1}}) {
    CHECK(exp_ad(alg, alg.e(1), x * eb, y / x) == x * eb + y * bracket(alg, alg.e(1), eb));
  }
  CHECK(kind_of([&] { exp_ad(alg, alg.coroot(0), alg.e(0), Rational(1)); }) == ErrorKind::PreconditionViolated);

  AlgElement top = alg.e(0);
  for (int k = 0; k < 4; ++k) top = bracket(alg, alg.e(1), top);
  CHECK(kind_of([&] { exp_ad(alg, top, alg.e(1), Rational(1)); }) == ErrorKind::TruncationAmbiguous);
}

TEST_CASE("property: exp(ad e_i) is a Lie algebra morphism") {
  const auto alg = build_truncated(hyp(3), 9);
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const AlgElement y = random_basis_element(alg, rng, 2);
    const AlgElement z = random_basis_element(alg, rng, 2);
    const Eigen::Index i = sweeps::uniform(rng, 0, 1);
    const Rational t(sweeps::uniform(rng, -3, 3), 2);
    const AlgElement lhs = exp_ad(alg, alg.e(i), bracket(alg, y, z), t);
    const AlgElement rhs = bracket(alg, exp_ad(alg, alg.e(i), y, t), exp_ad(alg, alg.e(i), z, t));
    CHECK(lhs == rhs);
    CHECK(exp_ad(alg, alg.e(i), exp_ad(alg, alg.e(i), y, t), -t) == y);
  }
}

TEST_CASE("check_locally_nilpotent examples") {
  const auto alg = build_truncated(hyp(3), 10);
  const auto probes = check_locally_nilpotent(alg, alg.e(0), {alg.f(0), alg.e(1), alg.e(0)}, 8);
  CHECK(probes[0].order == 3);
  CHECK(probes[1].order == 4);
  CHECK(probes[2].order == 1);

  // The string through alpha_2 along 3 alpha_1 + alpha_2 runs up to height 29,
  // so the probe cannot finish inside H = 10.
  const AlgElement e31 = real_root_vector(alg, RootVec{3, 1}).positive;
  const auto long_string = check_locally_nilpotent(alg, e31, {alg.e(1)}, 10);
  CHECK_FALSE(long_string[0].order.has_value());
  CHECK(long_string[0].left_range);

  // -alpha_2 + k (alpha_1 + 5 alpha_2), k = 0, 1 in H(5,1).
  const auto alg51 = build_truncated(hyp(5, 1), 11);
  const AlgElement e15 = real_root_vector(alg51, RootVec{1, 5}).positive;
  const auto p = check_locally_nilpotent(alg51, e15, {alg51.f(1), alg51.e(1)}, 6);
  CHECK(p[0].order == 2);
  CHECK(p[1].order == 1);

  const auto semisimple = check_locally_nilpotent(alg, alg.coroot(0), {alg.e(0)}, 6);
  CHECK_FALSE(semisimple[0].order.has_value());
  CHECK_FALSE(semisimple[0].left_range);

}
