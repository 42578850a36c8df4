// Roots as integer coefficient vectors over the simple roots, real-root
// enumeration, and Peterson's recurrence for root multiplicities.
#pragma once

#include "kmjm/gcm.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

namespace kmjm {

enum class Sign { Zero, Positive, Negative, Mixed };

/// An element of the root lattice, written in the basis of simple roots.
class RootVec {
 public:
  RootVec() = default;
  explicit RootVec(IntVector coeffs) : coeffs_(std::move(coeffs)) {}
  RootVec(std::initializer_list<long long> coeffs);

  static RootVec zero(Eigen::Index rank);
  static RootVec simple(Eigen::Index rank, Eigen::Index i);

  Eigen::Index rank() const { return coeffs_.size(); }
  const IntVector& coeffs() const { return coeffs_; }
  const Integer& operator[](Eigen::Index i) const { return coeffs_(i); }

  Integer height() const { return coeffs_.sum(); }
  Sign sign() const;
  bool is_zero() const { return sign() == Sign::Zero; }
  bool is_positive() const { return sign() == Sign::Positive; }
  bool is_negative() const { return sign() == Sign::Negative; }

  /// (beta|beta).
  Rational norm(const Gcm& g) const { return bilinear_form(g, coeffs_, coeffs_); }

  RootVec operator-() const { return RootVec(IntVector(-coeffs_)); }
  friend RootVec operator+(const RootVec& a, const RootVec& b) { return RootVec(IntVector(a.coeffs_ + b.coeffs_)); }
  friend RootVec operator-(const RootVec& a, const RootVec& b) { return RootVec(IntVector(a.coeffs_ - b.coeffs_)); }
  friend RootVec operator*(const Integer& k, const RootVec& a) { return RootVec(IntVector(k * a.coeffs_)); }

  friend bool operator==(const RootVec& a, const RootVec& b) {
    return a.rank() == b.rank() && a.coeffs_ == b.coeffs_;
  }
  /// Height first, then lexicographic on the coefficients.
  friend std::strong_ordering operator<=>(const RootVec& a, const RootVec& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RootVec& r) { return os << r.str(); }

 private:
  IntVector coeffs_;
};

/// Multiplicities of all positive lattice vectors of height <= H.
class MultTable {
 public:
  MultTable(Gcm gcm, std::int64_t height_bound);

  const Gcm& gcm() const { return gcm_; }
  std::int64_t height_bound() const { return height_bound_; }

  /// mult(beta) for beta positive with height <= H; 0 for non-roots.
  /// Throws HeightOutOfRange beyond H and PreconditionViolated for
  /// non-positive input.
  Integer mult(const RootVec& beta) const;

  /// Every positive root in the table with its multiplicity, (height, lex)
  /// ordered.
  std::vector<std::pair<RootVec, Integer>> roots() const;

  struct Slot {
    std::vector<std::int64_t> coeffs;
    Integer mult;
  };

 private:
  friend MultTable peterson_multiplicities(const Gcm& g, std::int64_t height);

  std::uint64_t key(const std::vector<std::int64_t>& coeffs) const;

  Gcm gcm_;
  std::int64_t height_bound_;
  std::vector<Slot> slots_;  // (height, lex) order
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Positive real roots of height <= H, by orbit closure of the simple roots.
std::vector<RootVec> real_roots_up_to_height(const Gcm& g, std::int64_t height);

/// Multiplicities via (beta|beta - 2 rho) c_beta = sum (b'|b'') c_b' c_b''.
MultTable peterson_multiplicities(const Gcm& g, std::int64_t height);

bool is_root(const MultTable& table, const RootVec& v);

/// 2 (gamma|beta) / (beta|beta). Throws NotRealRoot when (beta|beta) <= 0.
Rational coroot_pairing(const Gcm& g, const RootVec& beta, const RootVec& gamma);

/// Coefficients of beta^vee over the simple coroots: 2 d_k beta_k / (beta|beta).
RatVector coroot_coefficients(const Gcm& g, const RootVec& beta);

/// <v, alpha_i^vee> = sum_j A_ij v_j.
Integer simple_coroot_pairing(const Gcm& g, Eigen::Index i, const RootVec& v);

/// beta = s_{word[0]} ... s_{word[k-1]} (alpha_simple).
struct SimpleRootWord {
  std::vector<int> word;
  Eigen::Index simple = 0;
};

/// Greedy height descent: repeatedly apply the first s_i that lowers the
/// height. Returns nullopt exactly when beta is not a positive real root.
std::optional<SimpleRootWord> descend_to_simple(const Gcm& g, const RootVec& beta);

inline bool is_real_root(const Gcm& g, const RootVec& beta) {
  if (beta.is_negative()) return descend_to_simple(g, -beta).has_value();
  return descend_to_simple(g, beta).has_value();
}

}  // namespace kmjm
