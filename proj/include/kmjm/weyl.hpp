// Weyl group words acting on the root lattice and on coweights.
#pragma once

#include "kmjm/roots.hpp"

#include <initializer_list>
#include <vector>

namespace kmjm {

/// A word s_{i1} s_{i2} ... s_{il} in the simple reflections. Letters are
/// 0-based here; the CLI speaks 1-based.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}
  WeylWord(std::initializer_list<int> l) : letters(l) {}

  std::size_t length() const { return letters.size(); }
  WeylWord inverse() const { return WeylWord(std::vector<int>(letters.rbegin(), letters.rend())); }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Integer values alpha_i(tau) of an integral coweight.
struct Coweight {
  IntVector values;

  Coweight() = default;
  explicit Coweight(IntVector v) : values(std::move(v)) {}
  Coweight(std::initializer_list<long long> v);

  Eigen::Index rank() const { return values.size(); }
  bool is_dominant() const;
  bool is_regular_dominant() const;

  friend bool operator==(const Coweight& a, const Coweight& b) { return a.values == b.values; }
};

/// s_i(v) = v - <v, alpha_i^vee> alpha_i.
RootVec reflect(const Gcm& g, int i, const RootVec& v);

/// The contragredient action: beta(s_i tau) = (s_i beta)(tau) for all beta.
Coweight reflect_coweight(const Gcm& g, int i, const Coweight& tau);

/// w(v), applying the rightmost letter first.
RootVec apply_word(const Gcm& g, const WeylWord& w, const RootVec& v);
Coweight apply_word(const Gcm& g, const WeylWord& w, const Coweight& tau);

/// beta_k = s_{i1} ... s_{i(k-1)} (alpha_{ik}), k = 1..l. Throws NotReduced
/// unless these are l distinct positive roots, in which case they are exactly
/// the inversion set.
std::vector<RootVec> inversion_set(const Gcm& g, const WeylWord& w);

bool is_reduced(const Gcm& g, const WeylWord& w);

/// Deletes letter pairs until the word is reduced, using the exchange
/// condition: when the k-th inversion root is negative or repeats an earlier
/// one, the corresponding letters cancel.
WeylWord reduce_word(const Gcm& g, const WeylWord& w);

}  // namespace kmjm
