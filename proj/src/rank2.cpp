#include "kmjm/rank2.hpp"

#include "kmjm/error.hpp"

#include <algorithm>

namespace kmjm::rank2 {

namespace {

struct Orientation {
  Integer big, small;
  int p = 0;  // the long simple root alpha_p
  int q = 1;  // the reflecting simple root, tau_q = 0 in the exceptional cases
};

Orientation orient(const Gcm& g) {
  auto [a, b] = parameters(g);
  if (a >= b) return {a, b, 0, 1};
  return {b, a, 1, 0};
}

RootVec simple_combo(const Integer& cp, const Integer& cq, int p) {
  IntVector v(2);
  v(p) = cp;
  v(1 - p) = cq;
  return RootVec(std::move(v));
}

struct Term {
  std::string name;
  Integer value;
};

ChainCheck run_chain(std::string name, const std::vector<Term>& terms, const std::string& relations) {
  ChainCheck check{std::move(name), relations.size(), {}};
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const Term& l = terms[k];
    const Term& r = terms[k + 1];
    const bool ok = relations[k] == '=' ? l.value == r.value : l.value < r.value;
    if (!ok) {
      check.violation = l.name + " = " + l.value.str() + " " + relations[k] + " " + r.name + " = " + r.value.str() + " fails";
      break;
    }
  }
  return check;
}

std::string idx(const char* base, int j) { return std::string(base) + "_" + std::to_string(j); }

Rational coefficient_on(const AlgElement& x, const RootVec& root) {
  for (const auto& [r, coords] : x.parts()) {
    if (!(r == root)) fail(ErrorKind::InternalInconsistency, "element has a component outside " + root.str());
  }
  if (!x.cartan().isZero()) fail(ErrorKind::InternalInconsistency, "element has a Cartan component");
  return x.component(root, 1)(0);
}

RealizedTriple conjugate(const TruncatedAlgebra& alg, const AlgElement& by, const Rational& t, const RealizedTriple& tr) {
  return {exp_ad(alg, by, tr.e, t), exp_ad(alg, by, tr.h, t), exp_ad(alg, by, tr.f, t)};
}

/// x v + y [e_q, v] for v spanning g_beta, beta + alpha_q a real root.
RealizedTriple core_case(const TruncatedAlgebra& alg, const AlgElement& v, const RootVec& beta, int q,
                         const Rational& x, const Rational& y) {
  const auto base = real_root_vector(alg, beta).positive;
  const Rational lambda = coefficient_on(v, beta) / coefficient_on(base, beta);
  if (y == 0) return homogeneous_triple(alg, beta, x * lambda);
  const RootVec up = beta + RootVec::simple(2, q);
  if (x == 0) {
    const AlgElement u = bracket(alg, alg.e(q), v);
    const Rational mu = coefficient_on(u, up) / coefficient_on(real_root_vector(alg, up).positive, up);
    return homogeneous_triple(alg, up, y * mu);
  }
  return conjugate(alg, alg.e(q), y / x, homogeneous_triple(alg, beta, x * lambda));
}

}  // namespace

std::pair<Integer, Integer> parameters(const Gcm& g) {
  if (g.rank() != 2) fail(ErrorKind::PreconditionViolated, "rank-2 operation on a rank-" + std::to_string(g.rank()) + " GCM");
  Integer a = -g(1, 0);
  Integer b = -g(0, 1);
  if (a * b < 5) fail(ErrorKind::PreconditionViolated, "H(a,b) needs ab >= 5, got ab = " + Integer(a * b).str());
  return {a, b};
}

Integer b_seq(const Integer& a, int n) {
  if (n < 0) fail(ErrorKind::PreconditionViolated, "negative index");
  return b_sequence(a, n + 1).back();
}

std::vector<Integer> b_sequence(const Integer& a, int count) {
  if (a < 3) fail(ErrorKind::PreconditionViolated, "b_n needs a >= 3, got " + a.str());
  std::vector<Integer> out;
  for (int n = 0; n < count; ++n) {
    if (n == 0) out.emplace_back(0);
    else if (n == 1) out.emplace_back(1);
    else out.push_back(a * out[n - 1] - out[n - 2]);
  }
  return out;
}

GammaEta gamma_eta_table(const Integer& a, const Integer& b, int J) {
  const Integer ab = a * b;
  if (ab < 5) fail(ErrorKind::PreconditionViolated, "gamma/eta need ab >= 5, got " + ab.str());
  if (J < 0) fail(ErrorKind::PreconditionViolated, "negative index");
  GammaEta t;
  t.gamma.emplace_back(0);
  t.eta.emplace_back(1);
  for (int j = 1; j <= J + 1; ++j) {
    t.gamma.push_back(t.eta[j - 1] - t.gamma[j - 1]);
    if (j <= J) t.eta.push_back(ab * t.gamma[j] - t.eta[j - 1]);
  }
  return t;
}

std::pair<Integer, Integer> gamma_eta(const Integer& a, const Integer& b, int j) {
  auto t = gamma_eta_table(a, b, j);
  return {t.gamma[j], t.eta[j]};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::LL: return "LL";
    case Family::LU: return "LU";
    case Family::SU: return "SU";
    case Family::SL: return "SL";
  }
  return "?";
}

RootVec family_root(const Gcm& g, Label label) {
  auto [a, b] = parameters(g);
  const int j = label.j;
  const auto t = gamma_eta_table(a, b, j);
  switch (label.family) {
    case Family::LL: return RootVec(to_int_vector(std::vector<Integer>{t.eta[j], a * t.gamma[j]}));
    case Family::LU: return RootVec(to_int_vector(std::vector<Integer>{t.eta[j], a * t.gamma[j + 1]}));
    case Family::SU: return RootVec(to_int_vector(std::vector<Integer>{b * t.gamma[j], t.eta[j]}));
    case Family::SL: return RootVec(to_int_vector(std::vector<Integer>{b * t.gamma[j + 1], t.eta[j]}));
  }
  fail(ErrorKind::PreconditionViolated, "unknown family");
}

std::pair<WeylWord, int> family_word(Label label) {
  std::vector<int> letters;
  const bool starts_one = label.family == Family::LL || label.family == Family::SL;
  for (int k = 0; k < label.j; ++k) {
    letters.push_back(starts_one ? 0 : 1);
    letters.push_back(starts_one ? 1 : 0);
  }
  switch (label.family) {
    case Family::LL: return {WeylWord(letters), 0};
    case Family::LU: letters.push_back(1); return {WeylWord(letters), 0};
    case Family::SU: return {WeylWord(letters), 1};
    case Family::SL: letters.push_back(0); return {WeylWord(letters), 1};
  }
  return {WeylWord(letters), 0};
}

bool InterleavingReport::passed() const {
  return std::all_of(chains.begin(), chains.end(), [](const ChainCheck& c) { return c.violation.empty(); });
}

InterleavingReport check_interleavings(const Integer& a_in, const Integer& b_in, int J) {
  if (J < 2) fail(ErrorKind::PreconditionViolated, "J must be at least 2");
  if (a_in * b_in < 5) fail(ErrorKind::PreconditionViolated, "interleavings need ab >= 5");
  const Integer a = a_in >= b_in ? a_in : b_in;
  const Integer b = a_in >= b_in ? b_in : a_in;
  const auto t = gamma_eta_table(a, b, J + 1);
  InterleavingReport report{a, b, {}};

  if (b > 1) {
    for (const auto& [scale, label] : {std::pair{b, "b*gamma"}, std::pair{a, "a*gamma"}}) {
      std::vector<Term> terms;
      std::string rel;
      for (int j = 0; j <= J; ++j) {
        terms.push_back({idx(label, j), scale * t.gamma[j]});
        terms.push_back({idx("eta", j), t.eta[j]});
        rel += "<<";
      }
      terms.push_back({idx(label, J + 1), scale * t.gamma[J + 1]});
      report.chains.push_back(run_chain(std::string(label) + " < eta interleaving", terms, rel));
    }
  } else {
    std::vector<Term> terms{{"gamma_0", t.gamma[0]}, {"eta_0", t.eta[0]}, {"gamma_1", t.gamma[1]}};
    std::string rel = "<=";
    for (int j = 1; j <= J; ++j) {
      terms.push_back({idx("gamma", j + 1), t.gamma[j + 1]});
      terms.push_back({idx("eta", j), t.eta[j]});
      rel += "<<";
    }
    report.chains.push_back(run_chain("gamma / eta interleaving", terms, rel));

    terms = {{"a*gamma_0", a * t.gamma[0]}, {"eta_0", t.eta[0]}};
    rel = "<";
    for (int j = 1; j <= J; ++j) {
      terms.push_back({idx("eta", j), t.eta[j]});
      terms.push_back({idx("a*gamma", j), a * t.gamma[j]});
      rel += "<<";
    }
    report.chains.push_back(run_chain("eta / a*gamma interleaving", terms, rel));
  }

  for (const auto& [seq, label] : {std::pair{&t.gamma, "gamma"}, std::pair{&t.eta, "eta"}}) {
    std::vector<Term> terms;
    for (int j = 0; j <= J; ++j) terms.push_back({idx(label, j), (*seq)[j]});
    report.chains.push_back(run_chain(std::string(label) + " strictly increasing", terms, std::string(J, '<')));
  }
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Empty: return "empty";
    case Verdict::Single: return "single";
    case Verdict::ExceptionalI: return "exceptional-i";
    case Verdict::ExceptionalII: return "exceptional-ii";
  }
  return "?";
}

IntersectionVerdict classify_intersection(const Gcm& g, const WeylWord& w, const Coweight& tau, const Integer& d) {
  const Orientation o = orient(g);
  if (!check_finite_grading(g, tau)) fail(ErrorKind::PreconditionViolated, "grading has an infinite-dimensional piece");
  IntersectionVerdict out;
  out.roots = phi_w_d(g, w, tau, d);
  if (out.roots.empty()) return out;
  if (out.roots.size() == 1) {
    out.kind = Verdict::Single;
    return out;
  }

  auto describe = [&] {
    std::string s = "slice of size " + std::to_string(out.roots.size()) + ":";
    for (const auto& r : out.roots) s += " " + r.str();
    return s;
  };
  if (out.roots.size() > 2 || o.small != 1) fail(ErrorKind::InternalInconsistency, "unexpected " + describe());

  const bool tau_ok = tau.values(o.q) == 0 && tau.values(o.p) == d;
  const auto& L = w.letters;
  const RootVec lo = out.roots[0];
  const RootVec hi = out.roots[1];
  if (lo == simple_combo(1, 0, o.p) && hi == simple_combo(1, 1, o.p) && tau_ok && L.size() >= 2 && L[0] == o.p &&
      L[1] == o.q) {
    out.kind = Verdict::ExceptionalI;
    return out;
  }
  if (lo == simple_combo(1, o.big - 1, o.p) && hi == simple_combo(1, o.big, o.p) && tau_ok && L.size() >= 3 &&
      L[0] == o.q && L[1] == o.p && L[2] == o.q) {
    out.kind = Verdict::ExceptionalII;
    return out;
  }
  fail(ErrorKind::InternalInconsistency, "two-root " + describe() + " matches neither exceptional pattern");
}

RealizedTriple homogeneous_triple(const TruncatedAlgebra& alg, const RootVec& gamma, const Rational& c) {
  if (c == 0) fail(ErrorKind::ZeroElement, "zero multiple of a root vector");
  const auto pair = real_root_vector(alg, gamma);
  return {c * pair.positive, coroot_element(alg, gamma), (Rational(1) / c) * pair.negative};
}

ExceptionalTriple build_exceptional_triple(const TruncatedAlgebra& alg, const IntersectionVerdict& verdict,
                                           const Rational& x, const Rational& y) {
  if (verdict.kind != Verdict::ExceptionalI && verdict.kind != Verdict::ExceptionalII) {
    fail(ErrorKind::PreconditionViolated, "verdict is not exceptional");
  }
  if (x == 0 && y == 0) fail(ErrorKind::ZeroElement, "x = y = 0");
  const Orientation o = orient(alg.gcm());
  const AlgElement eq = alg.e(o.q);

  if (verdict.kind == Verdict::ExceptionalII) {
    const RootVec beta = simple_combo(1, o.big - 1, o.p);
    const AlgElement v = real_root_vector(alg, beta).positive;
    return {core_case(alg, v, beta, o.q, x, y), x * v + y * bracket(alg, eq, v)};
  }

  const AlgElement ep = alg.e(o.p);
  const AlgElement up = bracket(alg, eq, ep);
  AlgElement target = x * ep + y * up;
  if (y == 0) return {homogeneous_triple(alg, RootVec::simple(2, o.p), x), std::move(target)};

  // s^_q sends g_{a_p} + g_{a_p + a_q} to g_{beta + a_q} + g_beta.
  const RootVec beta = simple_combo(1, o.big - 1, o.p);
  const RootVec top = simple_combo(1, o.big, o.p);
  const AlgElement v = integrated_reflection(alg, o.q, up);
  const AlgElement moved_p = integrated_reflection(alg, o.q, ep);
  const Rational lambda = coefficient_on(moved_p, top) / coefficient_on(bracket(alg, eq, v), top);
  const RealizedTriple there = core_case(alg, v, beta, o.q, y, x * lambda);
  RealizedTriple back{integrated_reflection_inverse(alg, o.q, there.e), integrated_reflection_inverse(alg, o.q, there.h),
                      integrated_reflection_inverse(alg, o.q, there.f)};
  return {std::move(back), std::move(target)};
}

}  // namespace kmjm::rank2
