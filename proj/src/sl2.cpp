#include "kmjm/sl2.hpp"

#include "kmjm/error.hpp"
#include "kmjm/linalg.hpp"

namespace kmjm {

RatVector Sl2Triple::h_in_simple_coroots() const {
  const Gcm& g = system.ambient();
  RatVector h = RatVector::Constant(g.rank(), Rational(0));
  for (std::size_t k = 0; k < support.size(); ++k) {
    h += mu(static_cast<Eigen::Index>(k)) * coroot_coefficients(g, system.roots()[support[k]]);
  }
  return h;
}

RatVector solve_mu(const Gcm& b) {
  const IntMatrix bt = b.entries().transpose();
  if (linalg::determinant<Integer>(bt) == 0) fail(ErrorKind::SingularB, "B is singular, so B^T mu = 2 has no unique solution");
  auto mu = linalg::solve<Integer>(bt, IntVector::Constant(b.rank(), Integer(2)));
  if (!mu) fail(ErrorKind::InternalInconsistency, "nonsingular system reported inconsistent");
  return *mu;
}

Sl2Triple build_triple(const PiSystem& p, const RatVector& coeffs) {
  if (coeffs.size() != static_cast<Eigen::Index>(p.size())) {
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(p.size()) + " coefficients, got " + std::to_string(coeffs.size()));
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (coeffs(static_cast<Eigen::Index>(i)) != 0) support.push_back(i);
  }
  if (support.empty()) fail(ErrorKind::ZeroElement, "all coefficients are zero");

  const PiSystem sub = p.restrict_to(support);
  RatVector mu = solve_mu(sub.cartan());
  RatVector f(mu.size());
  for (Eigen::Index k = 0; k < mu.size(); ++k) f(k) = mu(k) / coeffs(static_cast<Eigen::Index>(support[static_cast<std::size_t>(k)]));
  return Sl2Triple{p, std::move(support), coeffs, std::move(mu), std::move(f)};
}

Report verify_symbolic(const Sl2Triple& t, const MultTable& oracle) {
  Report report;
  const Gcm& g = t.system.ambient();
  const auto& roots = t.system.roots();
  const std::size_t m = t.support.size();

  for (std::size_t j = 0; j < m; ++j) {
    Rational value(0);
    for (std::size_t i = 0; i < m; ++i) {
      value += t.mu(static_cast<Eigen::Index>(i)) * coroot_pairing(g, roots[t.support[i]], roots[t.support[j]]);
    }
    if (value != 2) report.failures.push_back("beta_" + std::to_string(t.support[j] + 1) + "(h) = " + value.str() + ", expected 2");
  }

  for (std::size_t i = 0; i < m; ++i) {
    const Rational c = t.e_coeffs(static_cast<Eigen::Index>(t.support[i]));
    if (c == 0) {
      report.failures.push_back("zero coefficient on the support at " + std::to_string(t.support[i] + 1));
      continue;
    }
    const Rational product = c * t.f_coeffs(static_cast<Eigen::Index>(i));
    if (product != t.mu(static_cast<Eigen::Index>(i))) {
      report.failures.push_back("c_i f_i = " + product.str() + " differs from mu_i = " + t.mu(static_cast<Eigen::Index>(i)).str());
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const RootVec diff = roots[t.support[i]] - roots[t.support[j]];
      if (diff.height() > oracle.height_bound() || -diff.height() > oracle.height_bound()) {
        report.failures.push_back("oracle too short for " + diff.str());
      } else if (diff.is_zero() || is_root(oracle, diff)) {
        report.failures.push_back("cross term [e_beta_i, e_-beta_j] may not vanish: " + diff.str() + " is a root");
      }
    }
  }
  return report;
}

RealizedTriple realize_triple(const Sl2Triple& t, const TruncatedAlgebra& alg) {
  RealizedTriple out{alg.zero(), alg.cartan_element(t.h_in_simple_coroots()), alg.zero()};
  for (std::size_t k = 0; k < t.support.size(); ++k) {
    const auto pair = real_root_vector(alg, t.system.roots()[t.support[k]]);
    out.e += t.e_coeffs(static_cast<Eigen::Index>(t.support[k])) * pair.positive;
    out.f += t.f_coeffs(static_cast<Eigen::Index>(k)) * pair.negative;
  }
  return out;
}

Report check_sl2_relations(const TruncatedAlgebra& alg, const RealizedTriple& t) {
  Report report;
  if (!(bracket(alg, t.h, t.e) == Rational(2) * t.e)) report.failures.push_back("[h,e] != 2e");
  if (!(bracket(alg, t.h, t.f) == Rational(-2) * t.f)) report.failures.push_back("[h,f] != -2f");
  if (!(bracket(alg, t.e, t.f) == t.h)) report.failures.push_back("[e,f] != h");
  return report;
}

Report verify_realized(const Sl2Triple& t, const TruncatedAlgebra& alg) {
  if (!(t.system.ambient() == alg.gcm())) fail(ErrorKind::PreconditionViolated, "algebra was built for a different GCM");
  return check_sl2_relations(alg, realize_triple(t, alg));
}

}  // namespace kmjm
