// pi-systems: finite sets of positive real roots with no pairwise difference
// a root, their induced Cartan matrix, and the coefficient map into the
// ambient root lattice.
#pragma once

#include "kmjm/roots.hpp"

#include <vector>

namespace kmjm {

class PiSystem {
 public:
  const Gcm& ambient() const { return ambient_; }
  const std::vector<RootVec>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  /// B(k, j) = beta_j(beta_k^vee).
  const Gcm& cartan() const { return cartan_; }
  bool independent() const { return independent_; }

  /// (beta_k|beta_k) / 2, the symmetrizer of B that makes the coefficient
  /// map form-preserving. Proportional to cartan().symmetrizer() on each
  /// connected component.
  const RatVector& form_symmetrizer() const { return form_symmetrizer_; }

  /// The sub-system on the given indices, in the given order. Any subset of a
  /// pi-system is a pi-system, so no oracle is needed.
  PiSystem restrict_to(const std::vector<std::size_t>& indices) const;

 private:
  friend PiSystem make_pi_system(const Gcm&, const std::vector<RootVec>&, const MultTable&);
  PiSystem(Gcm ambient, std::vector<RootVec> roots, Gcm cartan, bool independent, RatVector form_symmetrizer)
      : ambient_(std::move(ambient)),
        roots_(std::move(roots)),
        cartan_(std::move(cartan)),
        independent_(independent),
        form_symmetrizer_(std::move(form_symmetrizer)) {}

  Gcm ambient_;
  std::vector<RootVec> roots_;
  Gcm cartan_;
  bool independent_;
  RatVector form_symmetrizer_;
};

/// Largest |height| of a pairwise difference: the oracle height that
/// make_pi_system needs.
std::int64_t required_oracle_height(const std::vector<RootVec>& roots);

/// Validates the pi-system axioms against the oracle and computes B.
/// Throws NotPiSystem (naming the pair), NotRealRoot, OracleTooShort.
PiSystem make_pi_system(const Gcm& g, const std::vector<RootVec>& roots, const MultTable& oracle);

/// sum_i v_i beta_i.
RootVec pi_image(const PiSystem& p, const IntVector& v);

/// (x|y) on Q(B), using form_symmetrizer().
Rational pi_form(const PiSystem& p, const IntVector& x, const IntVector& y);

TypeTag classify_pi_type(const PiSystem& p);

}  // namespace kmjm
