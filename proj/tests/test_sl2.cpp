#include "support.hpp"

using namespace kmjm;
using namespace kmjm::test;

namespace {

PiSystem pi(const Gcm& g, const std::vector<RootVec>& roots) {
  const auto oracle = peterson_multiplicities(g, std::max<std::int64_t>(1, required_oracle_height(roots)));
  return make_pi_system(g, roots, oracle);
}

RatVector rats(std::vector<Rational> v) {
  RatVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// A_2-type system {alpha_1, alpha_2 + 2 alpha_3} inside a rank-3 indefinite algebra.
Gcm ambient3() { return gcm({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}}); }

}  // namespace

TEST_CASE("solve_mu examples") {
  CHECK(solve_mu(gcm({{2}})) == rats({1}));
  CHECK(solve_mu(a2()) == rats({2, 2}));
  CHECK(kind_of([] { solve_mu(affine_a1()); }) == ErrorKind::SingularB);
  // B_2: B^T mu = 2 gives mu = (3, 4).
  CHECK(solve_mu(gcm({{2, -2}, {-1, 2}})) == rats({3, 4}));
}

TEST_CASE("build_triple examples") {
  const auto single = build_triple(pi(hyp(5, 1), {{1, 4}}), rats({5}));
  CHECK(single.mu == rats({1}));
  CHECK(single.f_coeffs == rats({Rational(1, 5)}));
  CHECK(single.h_in_simple_coroots() == coroot_coefficients(hyp(5, 1), RootVec{1, 4}));

  const auto graded = build_triple(pi(hyp(3), phi_w_d(hyp(3), WeylWord{0, 1, 0}, Coweight{1, 1}, 4)), rats({1}));
  CHECK(graded.system.roots() == std::vector<RootVec>{{3, 1}});
  CHECK(graded.h_in_simple_coroots() == rats({3, 1}));

  const auto p = pi(ambient3(), {{1, 0, 0}, {0, 1, 2}});
  CHECK(p.cartan().entries() == a2().entries());
  const auto t = build_triple(p, rats({1, 1}));
  CHECK(t.mu == rats({2, 2}));
  CHECK(t.f_coeffs == rats({2, 2}));

  CHECK(kind_of([&] { build_triple(p, rats({0, 0})); }) == ErrorKind::ZeroElement);
  CHECK(kind_of([&] { build_triple(p, rats({1})); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { build_triple(pi(affine_a1(), {{1, 0}, {0, 1}}), rats({1, 1})); }) == ErrorKind::SingularB);
}

TEST_CASE("verify_symbolic passes on the examples") {
  const auto o51 = peterson_multiplicities(hyp(5, 1), 6);
  CHECK(verify_symbolic(build_triple(pi(hyp(5, 1), {{1, 4}}), rats({5})), o51).passed());
  const auto o3 = peterson_multiplicities(ambient3(), 6);
  CHECK(verify_symbolic(build_triple(pi(ambient3(), {{1, 0, 0}, {0, 1, 2}}), rats({1, 1})), o3).passed());
  const auto o_short = peterson_multiplicities(ambient3(), 1);
  CHECK_FALSE(verify_symbolic(build_triple(pi(ambient3(), {{1, 0, 0}, {0, 1, 2}}), rats({1, 1})), o_short).passed());
}

TEST_CASE("zero coefficients drop out of the support") {
  const auto p = pi(ambient3(), {{1, 0, 0}, {0, 1, 2}});
  const auto t = build_triple(p, rats({0, 3}));
  CHECK(t.support == std::vector<std::size_t>{1});
  CHECK(t.mu == rats({1}));
  CHECK(t.f_coeffs == rats({Rational(1, 3)}));
}

TEST_CASE("scaling e rescales f only") {
  const auto p = pi(ambient3(), {{1, 0, 0}, {0, 1, 2}});
  const auto t = build_triple(p, rats({2, -3}));
  const auto u = build_triple(p, rats({Rational(14, 3), -7}));
  CHECK(t.mu == u.mu);
  CHECK(t.h_in_simple_coroots() == u.h_in_simple_coroots());
  CHECK(u.f_coeffs == Rational(3, 7) * t.f_coeffs);
}

TEST_CASE("verify_realized examples") {
  const auto alg = build_truncated(ambient3(), 8);
  const auto t = build_triple(pi(ambient3(), {{1, 0, 0}, {0, 1, 2}}), rats({1, 1}));
  CHECK(verify_realized(t, alg).passed());
  CHECK(verify_realized(build_triple(pi(ambient3(), {{1, 0, 0}}), rats({1})), alg).passed());

  const auto alg51 = build_truncated(hyp(5, 1), 8);
  CHECK(verify_realized(build_triple(pi(hyp(5, 1), {{1, 5}}), rats({Rational(-2, 7)})), alg51).passed());
  CHECK(kind_of([&] { verify_realized(t, alg51); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("a wrong h is caught by the realized check") {
  const auto alg = build_truncated(ambient3(), 6);
  const auto t = build_triple(pi(ambient3(), {{1, 0, 0}, {0, 1, 2}}), rats({1, 1}));
  auto r = realize_triple(t, alg);
  r.h = Rational(2) * r.h;
  CHECK_FALSE(check_sl2_relations(alg, r).passed());
}

TEST_CASE("affine Heisenberg") {
  const auto alg = build_truncated(affine_a1(), 6);
  const AlgElement e = alg.e(0) + alg.e(1);
  const AlgElement f = alg.f(0) + alg.f(1);
  const AlgElement z = bracket(alg, e, f);
  CHECK_FALSE(z.is_zero());
  for (Eigen::Index i = 0; i < 2; ++i) {
    CHECK(bracket(alg, z, alg.e(i)).is_zero());
    CHECK(bracket(alg, z, alg.f(i)).is_zero());
  }
}

TEST_CASE("property: random regular-graded triples") {
  std::mt19937_64 rng(41);
  sweeps::Cache cache;
  int realized = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = sweeps::random_graded_instance(rng);
    if (inst.slice.empty()) continue;
    const auto p = pi(inst.g, inst.slice);
    RatVector c(static_cast<Eigen::Index>(p.size()));
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      std::int64_t v = 0;
      while (v == 0) v = sweeps::uniform(rng, -3, 3);
      c(k) = Rational(v, sweeps::uniform(rng, 1, 3));
    }
    const auto t = build_triple(p, c);
    CHECK(verify_symbolic(t, cache.oracle(inst.g, required_oracle_height(inst.slice))).passed());
    Integer top = 0;
    for (const auto& r : inst.slice) top = std::max(top, r.height());
    if (top > 6) continue;
    const auto& alg = cache.algebra(inst.g, 2 * static_cast<std::int64_t>(top) + 1);
    CHECK(verify_realized(t, alg).passed());
    ++realized;
  }
  CHECK(realized > 10);
}
