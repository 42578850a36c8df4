#include "support.hpp"

using namespace kmjm;
using namespace kmjm::test;

TEST_CASE("validate_gcm examples") {
  CHECK(a2().symmetrizer() == to_int_vector(std::vector<int>{1, 1}));
  CHECK(hyp(5, 1).symmetrizer() == to_int_vector(std::vector<int>{5, 1}));
  CHECK(kind_of([] { gcm({{2, -1}, {0, 2}}); }) == ErrorKind::NotGCM);
}

TEST_CASE("validate_gcm rejects axiom violations") {
  CHECK(kind_of([] { gcm({{1, -1}, {-1, 2}}); }) == ErrorKind::NotGCM);
  CHECK(kind_of([] { gcm({{2, 1}, {-1, 2}}); }) == ErrorKind::NotGCM);
  CHECK(kind_of([] { gcm({{2, -1, 0}, {-1, 2}}); }) == ErrorKind::NotGCM);
  // A_12 A_23 A_31 = -1 but A_21 A_32 A_13 = -2.
  CHECK(kind_of([] { gcm({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}); }) == ErrorKind::NotSymmetrizable);
}

TEST_CASE("symmetrizer is minimal per component") {
  // B_2 next to G_2: components normalized independently.
  const Gcm g = gcm({{2, -2, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -3, 2}});
  CHECK(g.symmetrizer() == to_int_vector(std::vector<int>{1, 2, 3, 1}));
  CHECK(g.components().size() == 2);
}

TEST_CASE("classify examples") {
  CHECK(classify(a2()) == TypeTag{Type::Finite, false});
  CHECK(classify(affine_a1()) == TypeTag{Type::Affine, false});
  CHECK(classify(hyp(5, 1)) == TypeTag{Type::Indefinite, true});
}

TEST_CASE("rank-2 trichotomy, 1 <= a, b <= 10") {
  for (long long a = 1; a <= 10; ++a) {
    for (long long b = 1; b <= 10; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const TypeTag t = classify(hyp(a, b));
      if (a * b <= 3) CHECK(t == TypeTag{Type::Finite, false});
      else if (a * b == 4) CHECK(t == TypeTag{Type::Affine, false});
      else CHECK(t == TypeTag{Type::Indefinite, true});
    }
  }
}

TEST_CASE("classify decomposable matrices") {
  CHECK(classify(gcm({{2, 0}, {0, 2}})).type == Type::Finite);
  CHECK(classify(gcm({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}})).type == Type::Affine);
  const TypeTag t = classify(gcm({{2, -3, 0}, {-3, 2, 0}, {0, 0, 2}}));
  CHECK(t.type == Type::Indefinite);
  CHECK_FALSE(t.hyperbolic);
  // A_3, D_4, affine A_2, and a rank-3 indefinite cycle.
  CHECK(classify(gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).type == Type::Finite);
  CHECK(classify(gcm({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}})).type == Type::Finite);
  CHECK(classify(gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})).type == Type::Affine);
  CHECK(classify(gcm({{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}})).type == Type::Indefinite);
}

TEST_CASE("bilinear_form examples") {
  const Gcm g = hyp(5, 1);
  CHECK(bilinear_form(g, RootVec{1, 0}.coeffs(), RootVec{1, 0}.coeffs()) == 10);
  CHECK(bilinear_form(g, RootVec{1, 2}.coeffs(), RootVec{1, 2}.coeffs()) == -2);
  CHECK(bilinear_form(g, RootVec{0, 0}.coeffs(), RootVec{3, 7}.coeffs()) == 0);
  CHECK(kind_of([&] { bilinear_form(g, RootVec{1, 0, 0}.coeffs(), RootVec{1, 0}.coeffs()); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("property: symmetrizer, symmetry and Weyl invariance of the form") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Gcm g = sweeps::random_gcm(rng, 4, -4);
    const auto n = g.rank();
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) CHECK(g.symmetrizer()(i) * g(i, j) == g.symmetrizer()(j) * g(j, i));

    const RootVec x = random_vec(rng, n, -5, 5);
    const RootVec y = random_vec(rng, n, -5, 5);
    CHECK(bilinear_form(g, x.coeffs(), y.coeffs()) == bilinear_form(g, y.coeffs(), x.coeffs()));

    WeylWord w;
    const auto len = sweeps::uniform(rng, 0, 8);
    for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(sweeps::uniform(rng, 0, n - 1)));
    CHECK(bilinear_form(g, apply_word(g, w, x).coeffs(), apply_word(g, w, y).coeffs()) ==
          bilinear_form(g, x.coeffs(), y.coeffs()));
  }
}
