#include "kmjm/sweeps.hpp"

#include "kmjm/error.hpp"
#include "kmjm/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kmjm::sweeps {

namespace {

std::string word_str(const WeylWord& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.letters.size(); ++k) s += (k ? "," : "") + std::to_string(w.letters[k] + 1);
  return s + "]";
}

std::string tau_str(const Coweight& tau) { return RootVec(tau.values).str(); }

std::string gcm_str(const Gcm& g) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < g.rank(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < g.rank(); ++j) s += (j ? "," : "") + g(i, j).str();
    s += "]";
  }
  return s + "]";
}

std::string case_key(const Gcm& g, const WeylWord& w, const Coweight& tau, const Integer& d) {
  return "A=" + gcm_str(g) + " w=" + word_str(w) + " tau=" + tau_str(tau) + " d=" + d.str();
}

std::int64_t max_height(const std::vector<RootVec>& roots) {
  std::int64_t h = 0;
  for (const auto& r : roots) h = std::max(h, to_int64(r.height()));
  return h;
}

/// The dominant coweights with entries in [0, bound] that give a grading
/// with finite-dimensional pieces.
std::vector<Coweight> finite_gradings(const Gcm& g, int bound) {
  std::vector<Coweight> out;
  for (int t1 = 0; t1 <= bound; ++t1) {
    for (int t2 = 0; t2 <= bound; ++t2) {
      Coweight tau{t1, t2};
      if (check_finite_grading(g, tau)) out.push_back(tau);
    }
  }
  return out;
}

/// Runs `check` over realizations of growing height until nothing leaves
/// the range. Returns false when even the largest height was not enough.
template <typename Check>
bool with_growing_height(Cache& cache, const Gcm& g, std::int64_t from, std::int64_t to, Check check) {
  for (std::int64_t h = from; h <= to; h += 2) {
    try {
      check(cache.algebra(g, h));
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HeightOutOfRange && e.kind() != ErrorKind::TruncationAmbiguous) throw;
    }
  }
  return false;
}

const std::vector<std::pair<int, int>> kPermissablePairs = {{3, 2}, {2, 3}, {5, 1}, {1, 5}, {6, 1}, {7, 1}};

}  // namespace

const MultTable& Cache::oracle(const Gcm& g, std::int64_t height) {
  std::lock_guard lock(mutex_);
  auto& slot = oracles_[key(g)];
  if (!slot || slot->height_bound() < height) {
    slot = std::make_unique<MultTable>(peterson_multiplicities(g, std::max<std::int64_t>(height, 1)));
  }
  return *slot;
}

const TruncatedAlgebra& Cache::algebra(const Gcm& g, std::int64_t height) {
  std::lock_guard lock(mutex_);
  auto& slot = algebras_[{key(g), height}];
  if (!slot) slot = std::make_unique<TruncatedAlgebra>(build_truncated(g, height, RealizeOptions{cap_}));
  return *slot;
}

std::string Cache::key(const Gcm& g) { return gcm_str(g); }

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Gcm random_gcm(std::mt19937_64& rng, int max_rank, int min_entry) {
  for (;;) {
    const auto n = static_cast<Eigen::Index>(uniform(rng, 1, max_rank));
    IntMatrix a = IntMatrix::Constant(n, n, Integer(0));
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) = 2;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (uniform(rng, 0, 3) == 0) continue;
        a(i, j) = uniform(rng, min_entry, -1);
        a(j, i) = uniform(rng, min_entry, -1);
      }
    }
    try {
      return validate_gcm(a);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSymmetrizable) throw;
    }
  }
}

WeylWord random_reduced_word(std::mt19937_64& rng, const Gcm& g, int max_length) {
  const auto target = static_cast<std::size_t>(uniform(rng, 0, max_length));
  WeylWord w;
  int misses = 0;
  while (w.length() < target && misses < 4 * g.rank()) {
    const int letter = static_cast<int>(uniform(rng, 0, g.rank() - 1));
    // w s_j is reduced iff w(alpha_j) > 0.
    if (apply_word(g, w, RootVec::simple(g.rank(), letter)).is_positive()) {
      w.letters.push_back(letter);
      misses = 0;
    } else {
      ++misses;
    }
  }
  return w;
}

std::vector<WeylWord> alternating_words(int max_length) {
  std::vector<WeylWord> out{WeylWord{}};
  for (int len = 1; len <= max_length; ++len) {
    for (int first = 0; first < 2; ++first) {
      WeylWord w;
      for (int k = 0; k < len; ++k) w.letters.push_back((first + k) % 2);
      out.push_back(std::move(w));
    }
  }
  return out;
}

GradedInstance random_graded_instance(std::mt19937_64& rng) {
  Gcm g = random_gcm(rng, 3, -4);
  IntVector t(g.rank());
  for (Eigen::Index i = 0; i < g.rank(); ++i) t(i) = uniform(rng, 1, 3);
  Coweight tau(std::move(t));
  WeylWord w = random_reduced_word(rng, g, 10);

  std::vector<Integer> grades;
  for (const auto& beta : inversion_set(g, w)) {
    const Integer gr = grade_of(beta, tau);
    if (gr <= 20) grades.push_back(gr);
  }
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  // Bias towards grades that occur so that most slices are nonempty.
  Integer d = grades.empty() || uniform(rng, 0, 4) == 0
                  ? Integer(uniform(rng, 1, 20))
                  : grades[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(grades.size()) - 1))];
  auto slice = phi_w_d(g, w, tau, d);
  return {std::move(g), std::move(w), std::move(tau), std::move(d), std::move(slice)};
}

SuiteResult symprop(const SweepOptions& options) {
  SuiteResult r{"symprop", 0, {}, options.seed, {}};
  for (int a : {3, 4, 5}) {
    const Gcm g = rank2_gcm(a, a);
    const auto taus = finite_gradings(g, 5);
    for (const auto& w : alternating_words(12)) {
      for (const auto& tau : taus) {
        for (int d = 1; d <= 30; ++d) {
          ++r.cases;
          const auto slice = phi_w_d(g, w, tau, d);
          ++r.tallies[slice.empty() ? "empty" : "single"];
          if (slice.size() > 1) {
            r.failures.push_back(case_key(g, w, tau, d) + ": " + std::to_string(slice.size()) + " roots");
          }
        }
      }
    }
  }
  return r;
}

SuiteResult permissable(const SweepOptions& options) {
  SuiteResult r{"permissable", 0, {}, options.seed, {}};
  for (auto [a, b] : kPermissablePairs) {
    const Gcm g = rank2_gcm(a, b);
    const auto taus = finite_gradings(g, 5);
    for (const auto& w : alternating_words(12)) {
      for (const auto& tau : taus) {
        for (int d = 1; d <= 30; ++d) {
          ++r.cases;
          try {
            const auto v = rank2::classify_intersection(g, w, tau, d);
            ++r.tallies[rank2::to_string(v.kind)];
            if (v.kind != rank2::Verdict::Empty && v.kind != rank2::Verdict::Single && std::min(a, b) > 1) {
              r.failures.push_back(case_key(g, w, tau, d) + ": exceptional slice with min(a,b) > 1");
            }
          } catch (const Error& e) {
            r.failures.push_back(case_key(g, w, tau, d) + ": " + e.name() + ": " + e.what());
          }
        }
      }
    }
  }
  return r;
}

SuiteResult reg_grade(const SweepOptions& options, Cache& cache) {
  SuiteResult r{"reg-grade", 0, {}, options.seed, {}};
  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < options.instances; ++k) {
    const auto inst = random_graded_instance(rng);
    ++r.cases;
    if (inst.slice.empty()) {
      ++r.tallies["empty"];
      continue;
    }
    const std::string key = case_key(inst.g, inst.w, inst.tau, inst.d);
    try {
      const auto& oracle = cache.oracle(inst.g, required_oracle_height(inst.slice));
      const PiSystem p = make_pi_system(inst.g, inst.slice, oracle);
      ++r.tallies["pi-systems"];
      if (classify_pi_type(p).type != Type::Finite) r.failures.push_back(key + ": B is not of finite type");
      if (linalg::determinant<Integer>(p.cartan().entries()) == 0) r.failures.push_back(key + ": det B = 0");
      if (!p.independent()) r.failures.push_back(key + ": roots are linearly dependent");
    } catch (const Error& e) {
      r.failures.push_back(key + ": " + e.name() + ": " + e.what());
    }
  }
  return r;
}

SuiteResult regdomthm(const SweepOptions& options, Cache& cache) {
  SuiteResult r{"regdomthm", 0, {}, options.seed, {}};
  std::mt19937_64 rng(options.seed);
  std::mt19937_64 coeff_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < options.instances; ++k) {
    const auto inst = random_graded_instance(rng);
    if (inst.slice.empty()) continue;
    ++r.cases;
    RatVector c(static_cast<Eigen::Index>(inst.slice.size()));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const std::int64_t v = uniform(coeff_rng, -2, 1);
      c(i) = Rational(v < 0 ? v : v + 1);
    }

    std::ostringstream key;
    key << case_key(inst.g, inst.w, inst.tau, inst.d) << " c=" << c.transpose();
    try {
      const std::int64_t h = max_height(inst.slice);
      const auto& oracle = cache.oracle(inst.g, required_oracle_height(inst.slice));
      const PiSystem p = make_pi_system(inst.g, inst.slice, oracle);
      const Sl2Triple t = build_triple(p, c);
      const Report sym = verify_symbolic(t, oracle);
      for (const auto& f : sym.failures) r.failures.push_back(key.str() + ": symbolic: " + f);
      if (h > options.realized_height) {
        ++r.tallies["realized-skipped-height"];
        continue;
      }
      Report realized;
      const bool done = with_growing_height(cache, inst.g, h + 1, 2 * h + 2,
                                            [&](const TruncatedAlgebra& alg) { realized = verify_realized(t, alg); });
      if (!done) {
        r.failures.push_back(key.str() + ": realized check left every truncation");
        continue;
      }
      ++r.tallies["realized"];
      for (const auto& f : realized.failures) r.failures.push_back(key.str() + ": realized: " + f);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ResourceCap) {
        ++r.tallies["realized-skipped-cap"];
        continue;
      }
      r.failures.push_back(key.str() + ": " + e.name() + ": " + e.what());
    }
  }
  return r;
}

SuiteResult rank2_theorem(const SweepOptions& options, Cache& cache) {
  SuiteResult r{"rank2-theorem", 0, {}, options.seed, {}};
  constexpr std::int64_t kHeight = 12;
  const std::vector<std::pair<Rational, Rational>> xy = {{1, 1}, {2, 3}, {1, -1}};

  std::vector<std::pair<int, int>> params = {{3, 3}, {4, 4}, {5, 5}};
  params.insert(params.end(), kPermissablePairs.begin(), kPermissablePairs.end());
  for (auto [a, b] : params) {
    const Gcm g = rank2_gcm(a, b);
    std::set<std::vector<RootVec>> singles;
    std::map<rank2::Verdict, rank2::IntersectionVerdict> exceptional;
    for (const auto& w : alternating_words(12)) {
      for (const auto& tau : finite_gradings(g, 5)) {
        for (int d = 1; d <= 30; ++d) {
          auto v = rank2::classify_intersection(g, w, tau, d);
          if (v.kind == rank2::Verdict::Single) singles.insert(v.roots);
          else if (v.kind != rank2::Verdict::Empty) exceptional.emplace(v.kind, std::move(v));
        }
      }
    }

    for (const auto& roots : singles) {
      ++r.cases;
      const std::string key = "A=" + gcm_str(g) + " root=" + roots[0].str();
      try {
        const std::int64_t h = max_height(roots);
        const auto& oracle = cache.oracle(g, required_oracle_height(roots));
        const Sl2Triple t = build_triple(make_pi_system(g, roots, oracle), RatVector::Constant(1, Rational(1)));
        for (const auto& f : verify_symbolic(t, oracle).failures) r.failures.push_back(key + ": symbolic: " + f);
        if (h > kHeight) {
          ++r.tallies["realized-skipped-height"];
          continue;
        }
        Report realized;
        if (!with_growing_height(cache, g, kHeight, kHeight, [&](const TruncatedAlgebra& alg) { realized = verify_realized(t, alg); })) {
          ++r.tallies["realized-skipped-height"];
          continue;
        }
        ++r.tallies["realized"];
        for (const auto& f : realized.failures) r.failures.push_back(key + ": realized: " + f);
      } catch (const Error& e) {
        r.failures.push_back(key + ": " + e.name() + ": " + e.what());
      }
    }

    for (const auto& [kind, verdict] : exceptional) {
      for (const auto& [x, y] : xy) {
        ++r.cases;
        const std::string key = "A=" + gcm_str(g) + " " + rank2::to_string(kind) + " x=" + x.str() + " y=" + y.str();
        try {
          const auto& alg = cache.algebra(g, kHeight);
          const auto ex = rank2::build_exceptional_triple(alg, verdict, x, y);
          if (!(ex.triple.e == ex.target)) r.failures.push_back(key + ": e differs from x e_beta + y [e_q, e_beta]");
          for (const auto& f : check_sl2_relations(alg, ex.triple).failures) r.failures.push_back(key + ": " + f);
          ++r.tallies[rank2::to_string(kind)];
        } catch (const Error& e) {
          r.failures.push_back(key + ": " + e.name() + ": " + e.what());
        }
      }
    }
  }
  return r;
}

SuiteResult affine_heisenberg(const SweepOptions& options, Cache& cache) {
  SuiteResult r{"affine-heisenberg", 1, {}, options.seed, {}};
  const Gcm g = validate_gcm(std::vector<std::vector<long long>>{{2, -2}, {-2, 2}});
  try {
    const PiSystem p = make_pi_system(g, {RootVec{1, 0}, RootVec{0, 1}}, cache.oracle(g, 1));
    try {
      solve_mu(p.cartan());
      r.failures.push_back("solve_mu found a solution for a singular B");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularB) throw;
    }
    const auto& alg = cache.algebra(g, 6);
    const AlgElement e = alg.e(0) + alg.e(1);
    const AlgElement z = bracket(alg, e, alg.f(0) + alg.f(1));
    if (z.is_zero()) r.failures.push_back("[e, f_0 + f_1] is zero");
    for (Eigen::Index i = 0; i < 2; ++i) {
      if (!bracket(alg, z, alg.e(i)).is_zero()) r.failures.push_back("[z, e_" + std::to_string(i) + "] != 0");
      if (!bracket(alg, z, alg.f(i)).is_zero()) r.failures.push_back("[z, f_" + std::to_string(i) + "] != 0");
    }
  } catch (const Error& e) {
    r.failures.push_back(e.name() + ": " + e.what());
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"symprop", "permissable", "reg-grade", "regdomthm", "rank2-theorem", "affine-heisenberg"};
}

SuiteResult run_suite(const std::string& name, const SweepOptions& options, Cache& cache) {
  if (name == "symprop") return symprop(options);
  if (name == "permissable") return permissable(options);
  if (name == "reg-grade") return reg_grade(options, cache);
  if (name == "regdomthm") return regdomthm(options, cache);
  if (name == "rank2-theorem") return rank2_theorem(options, cache);
  if (name == "affine-heisenberg") return affine_heisenberg(options, cache);
  fail(ErrorKind::PreconditionViolated, "unknown suite '" + name + "'");
}

}  // namespace kmjm::sweeps
