// kmjm: command-line front end. Every command prints one JSON document (or a
// TSV rendering of it) on stdout. Domain errors exit 1 with
// {"error": <variant>, "message": ...} on stderr; usage errors exit 2.
#include "cli_io.hpp"

#include "kmjm/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace kmjm;
using cli::Json;
using cli::UsageError;

namespace {

struct RunConfig {
  std::string gcm_file;
  std::string gcm_inline;
  std::uint64_t seed = sweeps::SweepOptions{}.seed;
  std::int64_t cap = 20000;
  std::string format = "json";
};

struct Args {
  std::int64_t height = 0;
  std::int64_t oracle_height = 0;
  bool real_only = false;
  bool dims = false;
  std::string word;
  std::string tau;
  std::string degree;
  std::string coeffs;
  std::string roots;
  std::string a, b;
  int count = 10;
  std::string x = "1", y = "0";
  std::vector<std::string> suites;
  int instances = sweeps::SweepOptions{}.instances;
  int realized_height = sweeps::SweepOptions{}.realized_height;
};

Gcm load_gcm(const RunConfig& cfg) {
  if (!cfg.gcm_file.empty() && !cfg.gcm_inline.empty()) throw UsageError("give only one of --gcm and --gcm-inline");
  if (!cfg.gcm_file.empty()) return cli::read_gcm_file(cfg.gcm_file);
  if (!cfg.gcm_inline.empty()) return cli::parse_gcm_inline(cfg.gcm_inline);
  throw UsageError("a GCM is required (--gcm FILE or --gcm-inline MATRIX)");
}

std::int64_t lattice_points(Eigen::Index rank, std::int64_t height) {
  // Positive lattice vectors of height <= H: C(H + n, n) - 1, saturating.
  double count = 1;
  for (Eigen::Index k = 1; k <= rank; ++k) count = count * static_cast<double>(height + k) / static_cast<double>(k);
  return count > 9e18 ? INT64_MAX : static_cast<std::int64_t>(count) - 1;
}

MultTable guarded_oracle(const Gcm& g, std::int64_t height, const RunConfig& cfg) {
  const std::int64_t points = lattice_points(g.rank(), height);
  if (points > cfg.cap) {
    fail(ErrorKind::ResourceCap, "Peterson table of height " + std::to_string(height) + " spans " +
                                     std::to_string(points) + " lattice vectors > cap " + std::to_string(cfg.cap));
  }
  return peterson_multiplicities(g, std::max<std::int64_t>(height, 1));
}

Coweight parse_tau(const std::string& text, Eigen::Index rank) {
  if (text.empty()) throw UsageError("--tau is required");
  auto values = cli::parse_integers(text);
  if (static_cast<Eigen::Index>(values.size()) != rank) throw UsageError("--tau needs " + std::to_string(rank) + " values");
  return Coweight(to_int_vector(values));
}

Integer parse_degree(const std::string& text) {
  if (text.empty()) throw UsageError("-d/--degree is required");
  const auto v = cli::parse_integers(text);
  if (v.size() != 1) throw UsageError("-d takes one integer");
  return v[0];
}

Json root_list(const std::vector<RootVec>& roots) { return cli::to_json(roots); }

/// Runs `body` on realizations of height from..to until no term leaves the
/// range. Returns the height used, or nullopt.
template <typename Body>
std::optional<std::int64_t> with_height(const Gcm& g, std::int64_t from, std::int64_t to, const RunConfig& cfg, Body body) {
  for (std::int64_t h = from; h <= to; h += 2) {
    try {
      const TruncatedAlgebra alg = build_truncated(g, h, RealizeOptions{cfg.cap});
      body(alg);
      return h;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HeightOutOfRange && e.kind() != ErrorKind::TruncationAmbiguous) throw;
    }
  }
  return std::nullopt;
}

Json cmd_roots(const RunConfig& cfg, const Args& args) {
  const Gcm g = load_gcm(cfg);
  if (args.height < 1) throw UsageError("--height must be >= 1");
  Json out = Json::array();
  if (args.real_only) {
    for (const auto& r : real_roots_up_to_height(g, args.height)) {
      out.push_back({{"coeffs", cli::to_json(r)}, {"mult", 1}, {"norm", r.norm(g).str()}, {"real", true}});
    }
    return out;
  }
  const MultTable t = guarded_oracle(g, args.height, cfg);
  for (const auto& [r, m] : t.roots()) {
    const Rational norm = r.norm(g);
    out.push_back({{"coeffs", cli::to_json(r)}, {"mult", cli::to_json(m)}, {"norm", norm.str()}, {"real", norm > 0}});
  }
  return out;
}

Json cmd_weyl(const RunConfig& cfg, const Args& args) {
  const Gcm g = load_gcm(cfg);
  const WeylWord w = cli::parse_word(args.word, g.rank());
  if (is_reduced(g, w)) return Json{{"reduced", true}, {"inversions", root_list(inversion_set(g, w))}};
  const WeylWord r = reduce_word(g, w);
  Json letters = Json::array();
  for (int l : r.letters) letters.push_back(l + 1);
  return Json{{"reduced", false}, {"reduced_word", letters}, {"inversions", root_list(inversion_set(g, r))}};
}

Json cmd_grade(const RunConfig& cfg, const Args& args) {
  const Gcm g = load_gcm(cfg);
  const WeylWord w = cli::parse_word(args.word, g.rank());
  const Coweight tau = parse_tau(args.tau, g.rank());
  const Integer d = parse_degree(args.degree);
  const bool finite = check_finite_grading(g, tau);
  return Json{{"phi_w_d", root_list(phi_w_d(g, w, tau, d))}, {"finite_grading", finite}};
}

Json cmd_pisys(const RunConfig& cfg, const Args& args) {
  const Gcm g = load_gcm(cfg);
  if (args.roots.empty()) throw UsageError("--roots is required");
  const auto roots = cli::parse_roots(args.roots, g.rank());
  const std::int64_t h = args.oracle_height > 0 ? args.oracle_height : std::max<std::int64_t>(required_oracle_height(roots), 1);
  const MultTable oracle = guarded_oracle(g, h, cfg);
  try {
    const PiSystem p = make_pi_system(g, roots, oracle);
    return Json{{"pi_system", true},
                {"B", cli::to_json(p.cartan().entries())},
                {"type", to_string(classify_pi_type(p).type)},
                {"independent", p.independent()},
                {"oracle_height", oracle.height_bound()}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPiSystem) throw;
    return Json{{"pi_system", false}, {"reason", e.what()}, {"oracle_height", oracle.height_bound()}};
  }
}

Json cmd_sl2(const RunConfig& cfg, const Args& args) {
  const Gcm g = load_gcm(cfg);
  std::vector<RootVec> roots;
  if (!args.roots.empty()) {
    if (!args.word.empty() || !args.tau.empty()) throw UsageError("give either --roots or --word/--tau/-d");
    roots = cli::parse_roots(args.roots, g.rank());
  } else {
    roots = phi_w_d(g, cli::parse_word(args.word, g.rank()), parse_tau(args.tau, g.rank()), parse_degree(args.degree));
    if (roots.empty()) fail(ErrorKind::ZeroElement, "Phi_w^d is empty, so every e in it is zero");
  }
  if (args.coeffs.empty()) throw UsageError("--coeffs is required");
  const RatVector c = cli::parse_rationals(args.coeffs);

  const MultTable oracle = guarded_oracle(g, std::max<std::int64_t>(required_oracle_height(roots), 1), cfg);
  const PiSystem p = make_pi_system(g, roots, oracle);
  const Sl2Triple t = build_triple(p, c);
  const Report sym = verify_symbolic(t, oracle);

  Json support = Json::array();
  Json mu = Json::array();
  Json pi_coroots = Json::object();
  Json f = Json::object();
  for (std::size_t k = 0; k < t.support.size(); ++k) {
    support.push_back(t.support[k] + 1);
    mu.push_back(t.mu(static_cast<Eigen::Index>(k)).str());
    pi_coroots[roots[t.support[k]].str()] = t.mu(static_cast<Eigen::Index>(k)).str();
    f[roots[t.support[k]].str()] = t.f_coeffs(static_cast<Eigen::Index>(k)).str();
  }
  Json coroots = Json::object();
  const RatVector h = t.h_in_simple_coroots();
  for (Eigen::Index i = 0; i < h.size(); ++i) coroots[std::to_string(i + 1)] = h(i).str();

  Json out{{"roots", root_list(roots)},
           {"support", support},
           {"B", cli::to_json(t.support_system().cartan().entries())},
           {"mu", mu},
           {"h", {{"coroots", coroots}, {"pi_coroots", pi_coroots}}},
           {"f", f},
           {"symbolic", sym.passed() ? "pass" : "fail"}};
  if (!sym.passed()) out["symbolic_failures"] = sym.failures;

  std::int64_t top = 0;
  for (const auto& r : roots) top = std::max(top, to_int64(r.height()));
  const std::int64_t from = args.height > 0 ? args.height : top + 2;
  const std::int64_t to = args.height > 0 ? args.height : 2 * top + 2;
  try {
    Report realized;
    Json elements;
    const auto used = with_height(g, from, to, cfg, [&](const TruncatedAlgebra& alg) {
      const RealizedTriple r = realize_triple(t, alg);
      realized = check_sl2_relations(alg, r);
      elements = Json{{"e", cli::to_json(r.e)}, {"h", cli::to_json(r.h)}, {"f", cli::to_json(r.f)}};
    });
    if (!used) {
      out["realized"] = "skipped(height)";
    } else {
      out["realized"] = realized.passed() ? "pass" : "fail";
      out["height"] = *used;
      out["elements"] = elements;
      if (!realized.passed()) out["realized_failures"] = realized.failures;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResourceCap) throw;
    out["realized"] = "skipped(cap)";
  }
  return out;
}

Json cmd_realize(const RunConfig& cfg, const Args& args) {
  const Gcm g = load_gcm(cfg);
  if (args.height < 1) throw UsageError("--height must be >= 1");
  const TruncatedAlgebra alg = build_truncated(g, args.height, RealizeOptions{cfg.cap});
  Json out{{"height", args.height}, {"total_dimension", alg.total_dimension()}};
  if (args.dims) {
    Json dims = Json::object();
    for (const auto& [r, d] : alg.positive_dims()) dims[r.str()] = d;
    out["dims"] = dims;
  }
  return out;
}

std::pair<Integer, Integer> rank2_params(const Args& args) {
  if (args.a.empty() || args.b.empty()) throw UsageError("rank2 needs --a and --b");
  const auto a = cli::parse_integers(args.a);
  const auto b = cli::parse_integers(args.b);
  if (a.size() != 1 || b.size() != 1) throw UsageError("--a and --b take one integer each");
  return {a[0], b[0]};
}

Json strings(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(z.str());
  return out;
}

Json cmd_rank2_sequences(const Args& args) {
  const auto [a, b] = rank2_params(args);
  if (args.count < 1) throw UsageError("--count must be >= 1");
  const auto t = rank2::gamma_eta_table(a, b, args.count - 1);
  Json out{{"a", a.str()}, {"b", b.str()}};
  if (a == b) out["b_n"] = strings(rank2::b_sequence(a, args.count));
  out["gamma"] = strings(std::vector<Integer>(t.gamma.begin(), t.gamma.begin() + args.count));
  out["eta"] = strings(t.eta);
  return out;
}

Json cmd_rank2_families(const Args& args) {
  const auto [a, b] = rank2_params(args);
  const Gcm g = rank2_gcm(a, b);
  Json out = Json::array();
  for (auto fam : {rank2::Family::LL, rank2::Family::LU, rank2::Family::SU, rank2::Family::SL}) {
    for (int j = 0; j < args.count; ++j) {
      out.push_back({{"label", rank2::to_string(fam)}, {"j", j}, {"coeffs", cli::to_json(rank2::family_root(g, {fam, j}))}});
    }
  }
  return out;
}

Json cmd_rank2_interleavings(const Args& args) {
  const auto [a, b] = rank2_params(args);
  const auto report = rank2::check_interleavings(a, b, args.count);
  Json chains = Json::array();
  for (const auto& c : report.chains) {
    chains.push_back({{"chain", c.name}, {"links", c.links}, {"holds", c.violation.empty()}, {"violation", c.violation}});
  }
  return Json{{"a", report.a.str()}, {"b", report.b.str()}, {"J", args.count}, {"passed", report.passed()}, {"chains", chains}};
}

Json cmd_rank2_classify(const Args& args) {
  const auto [a, b] = rank2_params(args);
  const Gcm g = rank2_gcm(a, b);
  const auto v = rank2::classify_intersection(g, cli::parse_word(args.word, 2), parse_tau(args.tau, 2), parse_degree(args.degree));
  return Json{{"verdict", rank2::to_string(v.kind)}, {"roots", root_list(v.roots)}};
}

Json cmd_rank2_triple(const RunConfig& cfg, const Args& args) {
  const auto [a, b] = rank2_params(args);
  const Gcm g = rank2_gcm(a, b);
  const auto v = rank2::classify_intersection(g, cli::parse_word(args.word, 2), parse_tau(args.tau, 2), parse_degree(args.degree));
  Rational x, y;
  try {
    x = parse_rational(args.x);
    y = parse_rational(args.y);
  } catch (const std::invalid_argument&) {
    throw UsageError("--x and --y must be rationals");
  }
  if (v.kind == rank2::Verdict::Empty) fail(ErrorKind::ZeroElement, "Phi_w^d is empty");
  if (v.kind == rank2::Verdict::Single && y != 0) throw UsageError("a single-root slice takes only --x");

  std::int64_t top = 0;
  for (const auto& r : v.roots) top = std::max(top, to_int64(r.height()));
  const std::int64_t from = args.height > 0 ? args.height : top + 2;
  const std::int64_t to = args.height > 0 ? args.height : top + 12;
  Json out{{"verdict", rank2::to_string(v.kind)}, {"roots", root_list(v.roots)}};
  const auto used = with_height(g, from, to, cfg, [&](const TruncatedAlgebra& alg) {
    RealizedTriple t;
    if (v.kind == rank2::Verdict::Single) {
      t = rank2::homogeneous_triple(alg, v.roots[0], x);
    } else {
      auto ex = rank2::build_exceptional_triple(alg, v, x, y);
      out["e_matches_target"] = ex.triple.e == ex.target;
      t = std::move(ex.triple);
    }
    const Report rel = check_sl2_relations(alg, t);
    out["relations"] = rel.passed() ? "pass" : "fail";
    if (!rel.passed()) out["relation_failures"] = rel.failures;
    out["e"] = cli::to_json(t.e);
    out["h"] = cli::to_json(t.h);
    out["f"] = cli::to_json(t.f);
  });
  if (!used) fail(ErrorKind::HeightOutOfRange, "no truncation up to height " + std::to_string(to) + " holds the triple");
  out["height"] = *used;
  return out;
}

Json cmd_verify(const RunConfig& cfg, const Args& args, bool& all_passed) {
  sweeps::SweepOptions options;
  options.seed = cfg.seed;
  options.instances = args.instances;
  options.realized_height = args.realized_height;
  options.dimension_cap = cfg.cap;
  sweeps::Cache cache(cfg.cap);

  std::vector<std::string> names;
  for (const auto& s : args.suites) {
    if (s == "all") {
      for (const auto& n : sweeps::suite_names()) names.push_back(n);
    } else {
      names.push_back(s);
    }
  }
  Json out = Json::array();
  for (const auto& name : names) {
    const auto r = sweeps::run_suite(name, options, cache);
    all_passed = all_passed && r.passed();
    out.push_back(cli::to_json(r));
  }
  return names.size() == 1 ? out.front() : out;
}

void report_error(const std::string& variant, const std::string& message) {
  std::cerr << Json{{"error", variant}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root systems, gradings, pi-systems and sl2-triples of symmetrizable Kac-Moody algebras"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  Args args;
  app.add_option("--gcm", cfg.gcm_file, "GCM JSON file {\"rank\": n, \"entries\": [[...]]}");
  app.add_option("--gcm-inline", cfg.gcm_inline, "GCM as inline JSON, e.g. \"[[2,-1],[-5,2]]\"");
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Resource cap (realized dimension, Peterson lattice vectors)")
      ->envname("KMJM_CAP")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();

  auto word = [&](CLI::App* c) { c->add_option("--word", args.word, "Weyl word, comma-separated 1-based letters"); };
  auto graded = [&](CLI::App* c) {
    word(c);
    c->add_option("--tau", args.tau, "Coweight values alpha_i(tau), comma-separated");
    c->add_option("-d,--degree", args.degree, "Degree d >= 1");
  };

  auto* roots = app.add_subcommand("roots", "Positive roots up to a height with multiplicities");
  roots->add_option("--height", args.height, "Height bound")->required();
  roots->add_flag("--real-only", args.real_only, "Only real roots, from the Weyl orbit closure");

  auto* weyl = app.add_subcommand("weyl", "Inversion set of a Weyl word");
  word(weyl);

  auto* grade = app.add_subcommand("grade", "Phi_w^d for a dominant coweight");
  graded(grade);

  auto* pisys = app.add_subcommand("pisys", "Validate a pi-system and compute B");
  pisys->add_option("--roots", args.roots, "Roots as JSON, e.g. \"[[1,0],[1,4]]\"")->required();
  pisys->add_option("--oracle-height", args.oracle_height, "Peterson oracle height (default: what the roots need)");

  auto* sl2 = app.add_subcommand("sl2", "Build and verify an sl2-triple");
  graded(sl2);
  sl2->add_option("--roots", args.roots, "Roots as JSON instead of --word/--tau/-d");
  sl2->add_option("--coeffs", args.coeffs, "Coefficients of e, comma-separated rationals");
  sl2->add_option("--height", args.height, "Realization height (default: grown from max height + 2)");

  auto* realize = app.add_subcommand("realize", "Height-truncated realization");
  realize->add_option("--height", args.height, "Height bound")->required();
  realize->add_flag("--dims", args.dims, "Print every positive root space dimension");

  auto* r2 = app.add_subcommand("rank2", "Closed forms and classification for H(a,b) = [[2,-b],[-a,2]]");
  r2->add_option("--a", args.a, "a")->required();
  r2->add_option("--b", args.b, "b")->required();
  r2->require_subcommand(1);
  r2->fallthrough();
  auto* seq = r2->add_subcommand("sequences", "b_n (a = b), gamma_j, eta_j as decimal strings");
  seq->add_option("--count", args.count, "Number of terms")->capture_default_str();
  auto* fam = r2->add_subcommand("families", "LL, LU, SU, SL roots for j < count");
  fam->add_option("--count", args.count, "Number of indices per family")->capture_default_str();
  auto* inter = r2->add_subcommand("interleavings", "Check the interleaving chains up to index J");
  inter->add_option("--count", args.count, "J")->capture_default_str();
  auto* cls = r2->add_subcommand("classify", "Classify Phi_w^d");
  graded(cls);
  auto* tri = r2->add_subcommand("triple", "sl2-triple for e = x e_beta (+ y [e_q, e_beta])");
  graded(tri);
  tri->add_option("--x", args.x, "Coefficient x")->capture_default_str();
  tri->add_option("--y", args.y, "Coefficient y (exceptional slices)")->capture_default_str();
  tri->add_option("--height", args.height, "Realization height (default: grown as needed)");

  auto* verify = app.add_subcommand("verify", "Run falsification suites");
  verify->add_option("suites", args.suites, "Suite names, or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto names = sweeps::suite_names();
        names.push_back("all");
        return names;
      }()));
  verify->add_option("--instances", args.instances, "Random instances for reg-grade / regdomthm")->capture_default_str();
  verify->add_option("--realized-height", args.realized_height, "Largest root height checked in a realization")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("UsageError", e.what());
    return 2;
  }

  bool passed = true;
  try {
    Json out;
    if (*roots) out = cmd_roots(cfg, args);
    else if (*weyl) out = cmd_weyl(cfg, args);
    else if (*grade) out = cmd_grade(cfg, args);
    else if (*pisys) out = cmd_pisys(cfg, args);
    else if (*sl2) out = cmd_sl2(cfg, args);
    else if (*realize) out = cmd_realize(cfg, args);
    else if (*seq) out = cmd_rank2_sequences(args);
    else if (*fam) out = cmd_rank2_families(args);
    else if (*inter) out = cmd_rank2_interleavings(args);
    else if (*cls) out = cmd_rank2_classify(args);
    else if (*tri) out = cmd_rank2_triple(cfg, args);
    else if (*verify) out = cmd_verify(cfg, args, passed);

    if (cfg.format == "tsv") {
      std::cout << "# seed=" << cfg.seed << '\n' << cli::to_tsv(out);
    } else {
      std::cout << out.dump() << '\n';
    }
  } catch (const UsageError& e) {
    report_error("UsageError", e.what());
    return 2;
  } catch (const Error& e) {
    report_error(e.name(), e.what());
    return 1;
  } catch (const std::overflow_error& e) {
    report_error("ResourceCap", e.what());
    return 1;
  }
  return passed ? 0 : 1;
}
