// Falsification sweeps: each runs one of the structural claims over a family
// of small cases and collects every counterexample.
#pragma once

#include "kmjm/rank2.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

namespace kmjm::sweeps {

struct SuiteResult {
  std::string suite;
  std::int64_t cases = 0;
  std::vector<std::string> failures;
  std::uint64_t seed = 0;
  /// Extra counters (exceptional hits, realized checks, skips, ...).
  std::map<std::string, std::int64_t> tallies;

  bool passed() const { return failures.empty(); }
};

struct SweepOptions {
  std::uint64_t seed = 20240601;
  int instances = 500;
  /// Realized checks are run when every root has height at most this.
  int realized_height = 8;
  std::int64_t dimension_cap = 20000;
};

/// Peterson tables and realizations shared across cases, keyed by GCM.
class Cache {
 public:
  explicit Cache(std::int64_t dimension_cap = 20000) : cap_(dimension_cap) {}

  /// A table of height at least `height`.
  const MultTable& oracle(const Gcm& g, std::int64_t height);
  /// A realization of height exactly `height`.
  const TruncatedAlgebra& algebra(const Gcm& g, std::int64_t height);

 private:
  static std::string key(const Gcm& g);

  std::int64_t cap_;
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<MultTable>> oracles_;
  std::map<std::pair<std::string, std::int64_t>, std::unique_ptr<TruncatedAlgebra>> algebras_;
};

/// Uniform integer in [lo, hi] from a portable generator.
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Random symmetrizable GCM of rank 1..max_rank with off-diagonal entries in
/// [min_entry, -1] or zero.
Gcm random_gcm(std::mt19937_64& rng, int max_rank, int min_entry);

/// A random reduced word of length at most max_length, grown one letter at a
/// time while it stays reduced.
WeylWord random_reduced_word(std::mt19937_64& rng, const Gcm& g, int max_length);

/// Every reduced word of length <= max_length for a rank-2 matrix with
/// infinite Weyl group (the alternating words).
std::vector<WeylWord> alternating_words(int max_length);

/// One random instance of the regular-grading sweep.
struct GradedInstance {
  Gcm g;
  WeylWord w;
  Coweight tau;
  Integer d;
  std::vector<RootVec> slice;  // Phi_w^d
};
GradedInstance random_graded_instance(std::mt19937_64& rng);

SuiteResult symprop(const SweepOptions& options = {});
SuiteResult permissable(const SweepOptions& options = {});
SuiteResult reg_grade(const SweepOptions& options, Cache& cache);
SuiteResult regdomthm(const SweepOptions& options, Cache& cache);
SuiteResult rank2_theorem(const SweepOptions& options, Cache& cache);
SuiteResult affine_heisenberg(const SweepOptions& options, Cache& cache);

std::vector<std::string> suite_names();
/// Throws PreconditionViolated for an unknown name.
SuiteResult run_suite(const std::string& name, const SweepOptions& options, Cache& cache);

}  // namespace kmjm::sweeps
