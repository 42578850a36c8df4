#include "kmjm/pisystem.hpp"

#include "kmjm/error.hpp"
#include "kmjm/linalg.hpp"

#include <algorithm>

namespace kmjm {

std::int64_t required_oracle_height(const std::vector<RootVec>& roots) {
  std::int64_t needed = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      needed = std::max(needed, to_int64(abs((roots[i] - roots[j]).height())));
    }
  }
  return needed;
}

PiSystem make_pi_system(const Gcm& g, const std::vector<RootVec>& roots, const MultTable& oracle) {
  if (roots.empty()) fail(ErrorKind::PreconditionViolated, "a pi-system needs at least one root");
  if (!(oracle.gcm() == g)) fail(ErrorKind::PreconditionViolated, "oracle was built for a different GCM");
  const std::size_t m = roots.size();

  for (std::size_t i = 0; i < m; ++i) {
    const auto& beta = roots[i];
    if (beta.rank() != g.rank()) fail(ErrorKind::DimensionMismatch, "root " + std::to_string(i + 1) + " has wrong length");
    if (!beta.is_positive() || !is_real_root(g, beta)) {
      fail(ErrorKind::NotRealRoot, "root " + std::to_string(i + 1) + " = " + beta.str() + " is not a positive real root");
    }
  }
  const std::int64_t needed = required_oracle_height(roots);
  if (needed > oracle.height_bound()) {
    fail(ErrorKind::OracleTooShort,
         "oracle height " + std::to_string(oracle.height_bound()) + " < " + std::to_string(needed));
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const RootVec diff = roots[i] - roots[j];
      if (diff.is_zero() || is_root(oracle, diff)) {
        fail(ErrorKind::NotPiSystem, "pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "): " +
                                         roots[i].str() + " - " + roots[j].str() +
                                         (diff.is_zero() ? " coincide" : " is a root"));
      }
    }
  }

  IntMatrix b(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  RatVector half_norms(static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) {
    half_norms(static_cast<Eigen::Index>(k)) = roots[k].norm(g) / 2;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational pairing = coroot_pairing(g, roots[k], roots[j]);
      if (!is_integral(pairing)) {
        fail(ErrorKind::InternalInconsistency, "non-integral coroot pairing " + pairing.str());
      }
      b(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = numerator(pairing);
    }
  }
  Gcm cartan = validate_gcm(b);

  IntMatrix coeffs(static_cast<Eigen::Index>(m), g.rank());
  for (std::size_t k = 0; k < m; ++k) coeffs.row(static_cast<Eigen::Index>(k)) = roots[k].coeffs().transpose();
  const bool independent = linalg::rank<Integer>(coeffs) == static_cast<Eigen::Index>(m);

  return PiSystem(g, roots, std::move(cartan), independent, std::move(half_norms));
}

PiSystem PiSystem::restrict_to(const std::vector<std::size_t>& indices) const {
  std::vector<RootVec> sub;
  std::vector<Eigen::Index> idx;
  RatVector half(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    sub.push_back(roots_.at(indices[k]));
    idx.push_back(static_cast<Eigen::Index>(indices[k]));
    half(static_cast<Eigen::Index>(k)) = form_symmetrizer_(static_cast<Eigen::Index>(indices[k]));
  }
  IntMatrix coeffs(static_cast<Eigen::Index>(sub.size()), ambient_.rank());
  for (std::size_t k = 0; k < sub.size(); ++k) coeffs.row(static_cast<Eigen::Index>(k)) = sub[k].coeffs().transpose();
  const bool indep = linalg::rank<Integer>(coeffs) == static_cast<Eigen::Index>(sub.size());
  return PiSystem(ambient_, std::move(sub), cartan_.principal_submatrix(idx), indep, std::move(half));
}

RootVec pi_image(const PiSystem& p, const IntVector& v) {
  if (v.size() != static_cast<Eigen::Index>(p.size())) fail(ErrorKind::DimensionMismatch, "coefficient vector length differs from |Sigma|");
  IntVector out = IntVector::Constant(p.ambient().rank(), Integer(0));
  for (std::size_t i = 0; i < p.size(); ++i) out += v(static_cast<Eigen::Index>(i)) * p.roots()[i].coeffs();
  return RootVec(std::move(out));
}

Rational pi_form(const PiSystem& p, const IntVector& x, const IntVector& y) {
  const RatMatrix gram = p.form_symmetrizer().asDiagonal() * p.cartan().entries().cast<Rational>();
  return x.cast<Rational>().dot(gram * y.cast<Rational>());
}

TypeTag classify_pi_type(const PiSystem& p) { return classify(p.cartan()); }

}  // namespace kmjm
