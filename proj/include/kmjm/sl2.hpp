// sl2-triples for elements supported on a nondegenerate pi-system, built by
// the principal-triple recipe and checked symbolically and in a realization.
#pragma once

#include "kmjm/pisystem.hpp"
#include "kmjm/realize.hpp"

#include <string>
#include <vector>

namespace kmjm {

/// e = sum c_i e_{beta_i}, h = sum mu_i beta_i^vee, f = sum (mu_i / c_i) e_{-beta_i},
/// over the support of c.
struct Sl2Triple {
  PiSystem system;               // the full system the coefficients refer to
  std::vector<std::size_t> support;
  RatVector e_coeffs;            // length |system|, zero off the support
  RatVector mu;                  // length |support|
  RatVector f_coeffs;            // length |support|

  /// h written over the simple coroots of the ambient algebra.
  RatVector h_in_simple_coroots() const;
  /// The sub-system on the support.
  PiSystem support_system() const { return system.restrict_to(support); }
};

struct Report {
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// The unique mu with B^T mu = (2, ..., 2). Throws SingularB.
RatVector solve_mu(const Gcm& b);

/// Throws SingularB, ZeroElement, DimensionMismatch.
Sl2Triple build_triple(const PiSystem& p, const RatVector& coeffs);

/// Pure root combinatorics: beta_j(h) = 2 on the support, c_i f_i = mu_i, and
/// no difference of support roots is a root.
Report verify_symbolic(const Sl2Triple& t, const MultTable& oracle);

/// The triple as elements of a realization, root vectors normalized by
/// real_root_vector.
struct RealizedTriple {
  AlgElement e;
  AlgElement h;
  AlgElement f;
};
RealizedTriple realize_triple(const Sl2Triple& t, const TruncatedAlgebra& alg);

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h, exactly.
Report check_sl2_relations(const TruncatedAlgebra& alg, const RealizedTriple& t);

/// realize_triple followed by check_sl2_relations. Throws HeightOutOfRange.
Report verify_realized(const Sl2Triple& t, const TruncatedAlgebra& alg);

}  // namespace kmjm
