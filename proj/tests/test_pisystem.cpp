#include "support.hpp"

#include "kmjm/linalg.hpp"

using namespace kmjm;
using namespace kmjm::test;

namespace {

PiSystem pi(const Gcm& g, const std::vector<RootVec>& roots) {
  const auto oracle = peterson_multiplicities(g, std::max<std::int64_t>(1, required_oracle_height(roots)));
  return make_pi_system(g, roots, oracle);
}

IntMatrix matrix(std::vector<std::vector<long long>> rows) { return validate_gcm(rows).entries(); }

}  // namespace

TEST_CASE("make_pi_system examples") {
  const Gcm g = hyp(5, 1);
  CHECK(kind_of([&] { pi(g, {{1, 0}, {1, 1}}); }) == ErrorKind::NotPiSystem);
  CHECK(kind_of([&] { pi(g, {{1, 4}, {1, 5}}); }) == ErrorKind::NotPiSystem);

  // B entries from the form (a1|a1) = 10, (a1|a2) = -5, (a2|a2) = 2.
  const auto p = pi(g, {{1, 0}, {1, 4}});
  CHECK(p.cartan().entries() == matrix({{2, -2}, {-10, 2}}));
  CHECK(p.independent());
  CHECK(classify_pi_type(p) == TypeTag{Type::Indefinite, true});

  const auto single = pi(hyp(3), {{3, 1}});
  CHECK(single.cartan().entries() == matrix({{2}}));
  CHECK(single.independent());
  CHECK(classify_pi_type(single).type == Type::Finite);

  const auto aff = pi(affine_a1(), {{1, 0}, {0, 1}});
  CHECK(aff.cartan().entries() == matrix({{2, -2}, {-2, 2}}));
  CHECK(aff.independent());
  CHECK(classify_pi_type(aff).type == Type::Affine);
}

TEST_CASE("make_pi_system guards") {
  const Gcm g = hyp(3);
  CHECK(kind_of([&] { pi(g, {{1, 1}}); }) == ErrorKind::NotRealRoot);
  CHECK(kind_of([&] { pi(g, {{-1, 0}}); }) == ErrorKind::NotRealRoot);
  const auto short_oracle = peterson_multiplicities(g, 2);
  CHECK(kind_of([&] { make_pi_system(g, {{1, 0}, {8, 3}}, short_oracle); }) == ErrorKind::OracleTooShort);
  CHECK(kind_of([&] { make_pi_system(g, {}, short_oracle); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { make_pi_system(hyp(4), {{1, 0}}, short_oracle); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("pi_image examples") {
  const auto p = pi(hyp(5, 1), {{1, 0}, {1, 4}});
  CHECK(pi_image(p, to_int_vector(std::vector<int>{1, 0})) == RootVec{1, 0});
  CHECK(pi_image(p, to_int_vector(std::vector<int>{0, 1})) == RootVec{1, 4});
  CHECK(pi_image(p, to_int_vector(std::vector<int>{2, 3})) == RootVec{5, 12});
  CHECK(pi_image(p, to_int_vector(std::vector<int>{0, 0})).is_zero());
  CHECK(kind_of([&] { pi_image(p, to_int_vector(std::vector<int>{1})); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("restrict_to") {
  const auto p = pi(hyp(5, 1), {{1, 0}, {1, 4}});
  const auto q = p.restrict_to({1});
  CHECK(q.roots() == std::vector<RootVec>{{1, 4}});
  CHECK(q.cartan().entries() == matrix({{2}}));
  const auto r = p.restrict_to({1, 0});
  CHECK(r.cartan().entries() == matrix({{2, -10}, {-2, 2}}));
}

TEST_CASE("property: the coefficient map preserves the form") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = sweeps::random_graded_instance(rng);
    if (inst.slice.empty()) continue;
    const auto p = pi(inst.g, inst.slice);
    ++checked;
    const auto n = static_cast<Eigen::Index>(p.size());
    for (int k = 0; k < 5; ++k) {
      const RootVec x = random_vec(rng, n, -3, 3);
      const RootVec y = random_vec(rng, n, -3, 3);
      CHECK(pi_form(p, x.coeffs(), y.coeffs()) ==
            bilinear_form(inst.g, pi_image(p, x.coeffs()).coeffs(), pi_image(p, y.coeffs()).coeffs()));
    }
    // B(k, j) = beta_j(beta_k^vee).
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index j = 0; j < n; ++j)
        CHECK(Rational(p.cartan()(k, j)) == coroot_pairing(inst.g, p.roots()[k], p.roots()[j]));
    // Regular-dominant gradings give finite type and nonsingular B.
    CHECK(classify_pi_type(p).type == Type::Finite);
    CHECK(linalg::determinant<Integer>(p.cartan().entries()) != 0);
  }
  CHECK(checked > 100);
}
