// Shared fixtures for the unit tests.
#pragma once

#include "kmjm/error.hpp"
#include "kmjm/sweeps.hpp"

#include <doctest.h>

#include <random>
#include <vector>

namespace kmjm::test {

inline Gcm gcm(std::vector<std::vector<long long>> rows) { return validate_gcm(rows); }

inline Gcm a2() { return gcm({{2, -1}, {-1, 2}}); }
inline Gcm affine_a1() { return gcm({{2, -2}, {-2, 2}}); }
/// H(a,b) = [[2,-b],[-a,2]].
inline Gcm hyp(long long a, long long b) { return rank2_gcm(a, b); }
inline Gcm hyp(long long a) { return rank2_gcm(a, a); }

inline ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a kmjm::Error");
  return ErrorKind::InternalInconsistency;
}

/// Random root-lattice vector with entries in [lo, hi].
inline RootVec random_vec(std::mt19937_64& rng, Eigen::Index n, long long lo, long long hi) {
  IntVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = sweeps::uniform(rng, lo, hi);
  return RootVec(std::move(v));
}

}  // namespace kmjm::test
