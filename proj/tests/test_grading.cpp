#include "support.hpp"

#include <set>

using namespace kmjm;
using namespace kmjm::test;

TEST_CASE("grade_of examples") {
  CHECK(grade_of(RootVec{3, 1}, Coweight{1, 1}) == 4);
  CHECK(grade_of(RootVec{7, -2}, Coweight{0, 0}) == 0);
  CHECK(grade_of(RootVec{1, 1}, Coweight{2, 0}) == 2);
}

TEST_CASE("check_finite_grading examples") {
  CHECK(check_finite_grading(hyp(3), Coweight{1, 2}));
  CHECK(check_finite_grading(hyp(5, 1), Coweight{2, 0}));
  CHECK_FALSE(check_finite_grading(affine_a1(), Coweight{0, 0}));
  CHECK_FALSE(check_finite_grading(hyp(3), Coweight{0, 0}));
  CHECK(check_finite_grading(a2(), Coweight{0, 0}));
  const Gcm g = gcm({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}});
  CHECK(check_finite_grading(g, Coweight{0, 1, 0}));
  CHECK_FALSE(check_finite_grading(g, Coweight{1, 0, 0}));
  CHECK(kind_of([] { check_finite_grading(hyp(3), Coweight{1, -1}); }) == ErrorKind::NotDominant);
}

TEST_CASE("phi_w_d examples") {
  CHECK(phi_w_d(hyp(3), WeylWord{0, 1, 0}, Coweight{1, 1}, 4) == std::vector<RootVec>{{3, 1}});
  CHECK(phi_w_d(hyp(5, 1), WeylWord{0, 1}, Coweight{2, 0}, 2) == std::vector<RootVec>{{1, 0}, {1, 1}});
  CHECK(phi_w_d(hyp(3), WeylWord{0, 1, 0}, Coweight{1, 1}, 12).empty());
  CHECK(kind_of([] { phi_w_d(hyp(3), WeylWord{0, 0}, Coweight{1, 1}, 1); }) == ErrorKind::NotReduced);
  CHECK(kind_of([] { phi_w_d(hyp(3), WeylWord{0}, Coweight{-1, 1}, 1); }) == ErrorKind::NotDominant);
  CHECK(kind_of([] { phi_w_d(hyp(3), WeylWord{0}, Coweight{1, 1}, 0); }) == ErrorKind::InvalidDegree);
}

TEST_CASE("property: the graded slices partition the inversion set") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = sweeps::random_graded_instance(rng);
    const auto inv = inversion_set(inst.g, inst.w);
    std::set<Integer> grades;
    for (const auto& beta : inv) grades.insert(grade_of(beta, inst.tau));
    std::size_t total = 0;
    for (const auto& d : grades) {
      const auto slice = phi_w_d(inst.g, inst.w, inst.tau, d);
      CHECK_FALSE(slice.empty());
      for (const auto& beta : slice) CHECK(grade_of(beta, inst.tau) == d);
      total += slice.size();
    }
    for (Integer d = 1; d <= 25; ++d)
      if (grades.count(d) == 0) CHECK(phi_w_d(inst.g, inst.w, inst.tau, d).empty());
    // Regular-dominant tau gives every positive root a positive grade.
    CHECK(total == inv.size());
  }
}
