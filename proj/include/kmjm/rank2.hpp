// Rank-2 hyperbolic algebras H(a,b) = [[2,-b],[-a,2]], ab >= 5: the
// coefficient sequences of their real roots, the four root families, the
// interleaving inequalities, the classifier for graded slices of inversion
// sets, and sl2-triples for the two-root exceptional slices.
#pragma once

#include "kmjm/grading.hpp"
#include "kmjm/sl2.hpp"

#include <string>
#include <vector>

namespace kmjm::rank2 {

/// The pair (a, b) with g = H(a,b). Throws PreconditionViolated unless g is
/// rank 2 with ab >= 5.
std::pair<Integer, Integer> parameters(const Gcm& g);

/// b_0 = 0, b_1 = 1, b_n = a b_{n-1} - b_{n-2}. Needs a >= 3.
Integer b_seq(const Integer& a, int n);
std::vector<Integer> b_sequence(const Integer& a, int count);

struct GammaEta {
  std::vector<Integer> gamma;  // gamma_0 .. gamma_{J+1}
  std::vector<Integer> eta;    // eta_0 .. eta_J
};

/// gamma_0 = 0, eta_0 = 1, gamma_j = eta_{j-1} - gamma_{j-1},
/// eta_j = ab gamma_j - eta_{j-1}. Needs ab >= 5.
GammaEta gamma_eta_table(const Integer& a, const Integer& b, int J);
std::pair<Integer, Integer> gamma_eta(const Integer& a, const Integer& b, int j);

enum class Family { LL, LU, SU, SL };
std::string to_string(Family f);

struct Label {
  Family family;
  int j;
};

/// LL_j = (s1 s2)^j a1, LU_j = (s2 s1)^j s2 a1, SU_j = (s2 s1)^j a2,
/// SL_j = (s1 s2)^j s1 a2, from the closed forms.
RootVec family_root(const Gcm& g, Label label);
/// The defining Weyl word, letters 0-based, and the simple root it acts on.
std::pair<WeylWord, int> family_word(Label label);

struct ChainCheck {
  std::string name;
  std::size_t links = 0;
  /// Empty when the chain holds.
  std::string violation;
};

struct InterleavingReport {
  Integer a, b;  // after the swap to a >= b
  std::vector<ChainCheck> chains;
  bool passed() const;
};

/// Both interleaving chains for the case at hand (a > b > 1, or b = 1 with
/// eta_0 = gamma_1) plus strict growth of gamma and eta, up to index J.
/// a < b is swapped first. Throws PreconditionViolated if ab < 5 or J < 2.
InterleavingReport check_interleavings(const Integer& a, const Integer& b, int J);

enum class Verdict { Empty, Single, ExceptionalI, ExceptionalII };
std::string to_string(Verdict v);

struct IntersectionVerdict {
  Verdict kind = Verdict::Empty;
  /// The roots of Phi_w^d, (height, lex) ordered.
  std::vector<RootVec> roots;
};

/// Phi_w^d classified against the exceptional patterns. Any two-root slice
/// outside them, or any larger slice, throws InternalInconsistency.
/// Throws PreconditionViolated on a non-hyperbolic GCM or infinite grading.
IntersectionVerdict classify_intersection(const Gcm& g, const WeylWord& w, const Coweight& tau, const Integer& d);

struct ExceptionalTriple {
  RealizedTriple triple;
  /// x e_beta + y [e_q, e_beta] for the lower root beta of the pattern
  /// (e_beta = e_1 in case I) and q the simple root with tau value zero.
  AlgElement target;
};

/// e = x e_beta + y [e_q, e_beta] extended to an sl2-triple. Case II conjugates
/// the triple of x e_beta by exp(ad (y/x) e_q); case I is moved to case II by
/// the integrated reflection s^_q and moved back. Throws ZeroElement,
/// PreconditionViolated (not an exceptional verdict), HeightOutOfRange,
/// TruncationAmbiguous.
ExceptionalTriple build_exceptional_triple(const TruncatedAlgebra& alg, const IntersectionVerdict& verdict,
                                           const Rational& x, const Rational& y);

/// The triple for c e_gamma, c != 0, with e_gamma from real_root_vector.
RealizedTriple homogeneous_triple(const TruncatedAlgebra& alg, const RootVec& gamma, const Rational& c);

}  // namespace kmjm::rank2
