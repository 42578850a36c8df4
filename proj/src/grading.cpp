#include "kmjm/grading.hpp"

#include "kmjm/error.hpp"

#include <algorithm>

namespace kmjm {

namespace {

void require_dominant(const Gcm& g, const Coweight& tau) {
  if (tau.rank() != g.rank()) fail(ErrorKind::DimensionMismatch, "coweight length differs from the GCM rank");
  if (!tau.is_dominant()) fail(ErrorKind::NotDominant, "coweight has a negative value");
}

}  // namespace

Integer grade_of(const RootVec& beta, const Coweight& tau) {
  if (beta.rank() != tau.rank()) fail(ErrorKind::DimensionMismatch, "root and coweight lengths differ");
  return beta.coeffs().dot(tau.values);
}

bool check_finite_grading(const Gcm& g, const Coweight& tau) {
  require_dominant(g, tau);
  std::vector<Eigen::Index> zero_support;
  for (Eigen::Index i = 0; i < tau.rank(); ++i)
    if (tau.values(i) == 0) zero_support.push_back(i);
  if (zero_support.empty()) return true;
  return classify(g.principal_submatrix(zero_support)).type == Type::Finite;
}

std::vector<RootVec> phi_w_d(const Gcm& g, const WeylWord& w, const Coweight& tau, const Integer& d) {
  if (d < 1) fail(ErrorKind::InvalidDegree, "degree must be >= 1, got " + d.str());
  require_dominant(g, tau);
  std::vector<RootVec> out;
  for (auto& beta : inversion_set(g, w)) {
    if (grade_of(beta, tau) == d) out.push_back(std::move(beta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kmjm
