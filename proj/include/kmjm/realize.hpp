// Height-truncated realization of the derived Kac-Moody algebra g'(A):
// graded bases of every root space with |height| <= H, exact structure
// constants, exp(ad x) for locally nilpotent x, and the integrated simple
// reflections.
//
// Construction. Write F_beta for the root space g_{-beta}, beta > 0. The
// Chevalley relations make n_- free on the f_i, and g(A) is the quotient by
// the largest graded ideal meeting h trivially. Inside n_- that ideal is
// detected degree by degree: x in F_beta (ht beta >= 2) is zero in g(A) iff
// [e_j, x] = 0 for every j. So F_beta is spanned by the candidates
// [f_i, y], y a basis vector of F_{beta - alpha_i}, modulo the kernel of
// x -> ([e_1, x], ..., [e_n, x]); exact row reduction of that map picks a
// basis and the coordinates of every candidate. For symmetrizable A this
// quotient is the Serre quotient. Positive root spaces are the image of the
// negative ones under the Chevalley involution, with basis signs chosen so
// that the structure constants coincide.
#pragma once

#include "kmjm/roots.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace kmjm {

/// A basis vector: root space `root` (zero root means the Cartan part, where
/// `index` selects alpha_index^vee) and position inside that space.
struct BasisId {
  RootVec root;
  int index = 0;

  bool is_cartan() const { return root.is_zero(); }
  friend auto operator<=>(const BasisId& a, const BasisId& b) {
    if (auto c = a.root <=> b.root; c != 0) return c;
    return a.index <=> b.index;
  }
  friend bool operator==(const BasisId&, const BasisId&) = default;
};

/// A finite linear combination of basis vectors, grouped by root space.
class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(Eigen::Index rank) : cartan_(RatVector::Constant(rank, Rational(0))) {}

  Eigen::Index rank() const { return cartan_.size(); }
  const RatVector& cartan() const { return cartan_; }
  RatVector& cartan() { return cartan_; }
  /// Nonzero root-space components, keyed by signed root.
  const std::map<RootVec, RatVector>& parts() const { return parts_; }

  /// Coordinates in g_root; zero vector of length `dim` if absent.
  RatVector component(const RootVec& root, Eigen::Index dim) const;
  void add_to(const RootVec& root, const RatVector& coords);

  bool is_zero() const;
  /// Every nonzero term as (basis id, coefficient), in basis order.
  std::vector<std::pair<BasisId, Rational>> terms() const;

  AlgElement& operator+=(const AlgElement& other);
  AlgElement& operator-=(const AlgElement& other);
  AlgElement& operator*=(const Rational& s);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Rational& s, AlgElement a) { return a *= s; }
  AlgElement operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const AlgElement& a, const AlgElement& b) { return (a - b).is_zero(); }

 private:
  void prune();

  RatVector cartan_;
  std::map<RootVec, RatVector> parts_;
};

struct RealizeOptions {
  /// Upper bound on dim (Cartan + all root spaces), estimated up front from
  /// the Peterson multiplicities.
  std::int64_t dimension_cap = 20000;
};

class TruncatedAlgebra {
 public:
  TruncatedAlgebra(TruncatedAlgebra&&) noexcept;
  TruncatedAlgebra& operator=(TruncatedAlgebra&&) noexcept;
  ~TruncatedAlgebra();

  const Gcm& gcm() const { return gcm_; }
  Eigen::Index rank() const { return gcm_.rank(); }
  std::int64_t height_bound() const { return height_bound_; }

  /// dim g_root for |height| <= H (the Cartan dimension for the zero root).
  /// Throws HeightOutOfRange beyond H.
  Eigen::Index dim(const RootVec& root) const;
  /// Positive roots with nonzero dimension, (height, lex) ordered.
  std::map<RootVec, Eigen::Index> positive_dims() const;
  std::int64_t total_dimension() const;

  AlgElement zero() const { return AlgElement(rank()); }
  AlgElement e(Eigen::Index i) const;
  AlgElement f(Eigen::Index i) const;
  /// alpha_i^vee.
  AlgElement coroot(Eigen::Index i) const;
  /// sum_k coeffs_k alpha_k^vee.
  AlgElement cartan_element(const RatVector& coeffs) const;
  AlgElement basis_element(const BasisId& id) const;

  bool in_range(const RootVec& root) const;

  /// ad of e_i (positive = true) or f_i on x.
  AlgElement ad_generator(bool positive, Eigen::Index i, const AlgElement& x) const;

 private:
  friend TruncatedAlgebra build_truncated(const Gcm& g, std::int64_t height, const RealizeOptions& options);
  friend AlgElement bracket(const TruncatedAlgebra& alg, const AlgElement& x, const AlgElement& y);

  struct Space {
    Eigen::Index dim = 0;
    /// F_{beta,k} = [f_i, F_{beta - alpha_i, k'}] as (i, k'); mirrored for E.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> parent;
    /// ad_e[j]: F_beta -> F_{beta - alpha_j} (unused when beta - alpha_j
    /// has no space; beta = alpha_j is the Cartan case).
    std::vector<RatMatrix> ad_e;
    /// ad_f[i]: F_beta -> F_{beta + alpha_i}, filled when that space exists.
    std::vector<RatMatrix> ad_f;
  };
  struct Memo;

  TruncatedAlgebra(Gcm g, std::int64_t height);

  const Space* space(const RootVec& positive_root) const;
  void check_range(const RootVec& root) const;
  AlgElement bracket_basis(const BasisId& a, const BasisId& b) const;
  AlgElement bracket_basis_with(const BasisId& a, const AlgElement& y) const;
  AlgElement cartan_action(const RatVector& h, const AlgElement& x) const;

  Gcm gcm_;
  std::int64_t height_bound_;
  std::map<RootVec, Space> spaces_;
  std::unique_ptr<Memo> memo_;
};

/// Throws ResourceCap, InternalInconsistency.
TruncatedAlgebra build_truncated(const Gcm& g, std::int64_t height, const RealizeOptions& options = {});

/// Bilinear extension of the structure constants. Throws HeightOutOfRange
/// when a term of the result would leave the truncation.
AlgElement bracket(const TruncatedAlgebra& alg, const AlgElement& x, const AlgElement& y);

/// sum_k t^k ad_x^k(y) / k!, stopped at the first exact zero term. Throws
/// TruncationAmbiguous if a nonzero term would leave the range first, and
/// PreconditionViolated if x has a Cartan component.
AlgElement exp_ad(const TruncatedAlgebra& alg, const AlgElement& x, const AlgElement& y, const Rational& t);

/// s^_i = exp(ad e_i) exp(-ad f_i) exp(ad e_i), and its inverse.
AlgElement integrated_reflection(const TruncatedAlgebra& alg, Eigen::Index i, const AlgElement& x);
AlgElement integrated_reflection_inverse(const TruncatedAlgebra& alg, Eigen::Index i, const AlgElement& x);

/// e_beta by transport of e_j along the greedy descent word, and e_{-beta}
/// scaled so that [e_beta, e_{-beta}] = beta^vee.
struct RootVectorPair {
  AlgElement positive;
  AlgElement negative;
  /// [transported e, transported f] = scale * beta^vee before rescaling.
  Rational scale;
};
RootVectorPair real_root_vector(const TruncatedAlgebra& alg, const RootVec& beta);

/// beta^vee as an element of the Cartan part.
AlgElement coroot_element(const TruncatedAlgebra& alg, const RootVec& beta);

struct NilpotencyProbe {
  /// Least N with ad_e^N(y) = 0, or nullopt when inconclusive.
  std::optional<int> order;
  /// Set when the probe stopped because a term left the range.
  bool left_range = false;
};
std::vector<NilpotencyProbe> check_locally_nilpotent(const TruncatedAlgebra& alg, const AlgElement& e,
                                                     const std::vector<AlgElement>& probes, int max_n);

}  // namespace kmjm
