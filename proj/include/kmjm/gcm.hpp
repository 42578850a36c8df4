// Generalized Cartan matrices: validation, symmetrizers, the invariant form
// on the root lattice, and the finite / affine / indefinite trichotomy.
#pragma once

#include "kmjm/number.hpp"

#include <string>
#include <vector>

namespace kmjm {

enum class Type { Finite, Affine, Indefinite };

struct TypeTag {
  Type type = Type::Finite;
  /// Only set for indecomposable rank-2 matrices with ab >= 5.
  bool hyperbolic = false;

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

std::string to_string(Type type);

/// A validated, symmetrizable generalized Cartan matrix. Immutable.
class Gcm {
 public:
  /// Same as `validate_gcm`.
  explicit Gcm(IntMatrix entries);

  Eigen::Index rank() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  const Integer& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  /// Positive integers d with diag(d) * A symmetric, minimal per connected
  /// component.
  const IntVector& symmetrizer() const { return symmetrizer_; }

  /// diag(d) * A, the Gram matrix of the simple roots.
  const IntMatrix& form_matrix() const { return form_; }

  /// Index sets of the connected components of the Dynkin diagram, each in
  /// increasing order; components ordered by their smallest index.
  std::vector<std::vector<Eigen::Index>> components() const;

  Gcm principal_submatrix(const std::vector<Eigen::Index>& indices) const;

  friend bool operator==(const Gcm& a, const Gcm& b) { return a.entries_ == b.entries_; }

 private:
  IntMatrix entries_;
  IntVector symmetrizer_;
  IntMatrix form_;
};

/// Checks the GCM axioms and computes the normalized symmetrizer.
/// Throws NotGCM or NotSymmetrizable.
Gcm validate_gcm(const IntMatrix& matrix);
Gcm validate_gcm(const std::vector<std::vector<long long>>& rows);

/// [[2,-b],[-a,2]], the rank-2 matrix written A(a,b) in the rank2 module.
Gcm rank2_gcm(const Integer& a, const Integer& b);

TypeTag classify(const Gcm& g);

/// (beta|gamma) = sum_ij beta_i gamma_j d_i A_ij.
Rational bilinear_form(const Gcm& g, const IntVector& beta, const IntVector& gamma);

}  // namespace kmjm
