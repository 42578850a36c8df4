#include "kmjm/weyl.hpp"

#include "kmjm/error.hpp"

#include <algorithm>
#include <sstream>

namespace kmjm {

namespace {

void check_letter(const Gcm& g, int i) {
  if (i < 0 || i >= g.rank()) {
    fail(ErrorKind::PreconditionViolated, "reflection index " + std::to_string(i + 1) + " out of range");
  }
}

std::string word_str(const WeylWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters.size(); ++k) os << (k ? "," : "") << w.letters[k] + 1;
  return os.str();
}

// The k-th prefix roots, with no reducedness check.
std::vector<RootVec> prefix_roots(const Gcm& g, const WeylWord& w) {
  std::vector<RootVec> out;
  out.reserve(w.length());
  for (std::size_t k = 0; k < w.length(); ++k) {
    check_letter(g, w.letters[k]);
    RootVec v = RootVec::simple(g.rank(), w.letters[k]);
    for (std::size_t j = k; j-- > 0;) v = reflect(g, w.letters[j], v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

Coweight::Coweight(std::initializer_list<long long> v) : values(static_cast<Eigen::Index>(v.size())) {
  Eigen::Index i = 0;
  for (long long x : v) values(i++) = Integer(x);
}

bool Coweight::is_dominant() const {
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values(i) < 0) return false;
  return true;
}

bool Coweight::is_regular_dominant() const {
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values(i) <= 0) return false;
  return true;
}

RootVec reflect(const Gcm& g, int i, const RootVec& v) {
  check_letter(g, i);
  IntVector c = v.coeffs();
  c(i) -= simple_coroot_pairing(g, i, v);
  return RootVec(std::move(c));
}

Coweight reflect_coweight(const Gcm& g, int i, const Coweight& tau) {
  check_letter(g, i);
  // alpha_j(s_i tau) = (s_i alpha_j)(tau) = tau_j - A_ij tau_i.
  IntVector out = tau.values;
  for (Eigen::Index j = 0; j < g.rank(); ++j) out(j) -= g(i, j) * tau.values(i);
  return Coweight(std::move(out));
}

RootVec apply_word(const Gcm& g, const WeylWord& w, const RootVec& v) {
  RootVec out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect(g, *it, out);
  return out;
}

Coweight apply_word(const Gcm& g, const WeylWord& w, const Coweight& tau) {
  Coweight out = tau;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect_coweight(g, *it, out);
  return out;
}

std::vector<RootVec> inversion_set(const Gcm& g, const WeylWord& w) {
  auto roots = prefix_roots(g, w);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!roots[k].is_positive()) {
      fail(ErrorKind::NotReduced, "word " + word_str(w) + " is not reduced (letter " + std::to_string(k + 1) + ")");
    }
  }
  // Positive prefixes already force distinctness, but the post-condition is
  // cheap to confirm.
  auto sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::NotReduced, "word " + word_str(w) + " repeats an inversion");
  }
  return roots;
}

bool is_reduced(const Gcm& g, const WeylWord& w) {
  try {
    inversion_set(g, w);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotReduced) return false;
    throw;
  }
}

WeylWord reduce_word(const Gcm& g, const WeylWord& w) {
  WeylWord cur = w;
  while (true) {
    const auto roots = prefix_roots(g, cur);
    std::size_t bad = roots.size();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (!roots[k].is_positive()) {
        bad = k;
        break;
      }
    }
    if (bad == roots.size()) return cur;
    const RootVec target = -roots[bad];
    std::size_t partner = bad;
    for (std::size_t j = 0; j < bad; ++j) {
      if (roots[j] == target) partner = j;
    }
    if (partner == bad) fail(ErrorKind::InternalInconsistency, "exchange condition found no partner letter");
    cur.letters.erase(cur.letters.begin() + static_cast<std::ptrdiff_t>(bad));
    cur.letters.erase(cur.letters.begin() + static_cast<std::ptrdiff_t>(partner));
  }
}

}  // namespace kmjm
