// Gradings of g by dominant integral coweights, and the graded slices of
// inversion sets.
#pragma once

#include "kmjm/weyl.hpp"

namespace kmjm {

/// sum_i beta_i tau_i.
Integer grade_of(const RootVec& beta, const Coweight& tau);

/// True iff every graded piece is finite-dimensional, decided by asking the
/// sub-diagram on which tau vanishes to be of finite type.
/// Throws NotDominant.
bool check_finite_grading(const Gcm& g, const Coweight& tau);

/// {beta in Phi_w : beta(tau) = d}, (height, lex) ordered.
/// Throws NotReduced, NotDominant, or InvalidDegree for d < 1.
std::vector<RootVec> phi_w_d(const Gcm& g, const WeylWord& w, const Coweight& tau, const Integer& d);

}  // namespace kmjm
