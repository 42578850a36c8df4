#include "kmjm/roots.hpp"

#include "kmjm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace kmjm {

RootVec::RootVec(std::initializer_list<long long> coeffs) : coeffs_(static_cast<Eigen::Index>(coeffs.size())) {
  Eigen::Index i = 0;
  for (long long c : coeffs) coeffs_(i++) = Integer(c);
}

RootVec RootVec::zero(Eigen::Index rank) { return RootVec(IntVector::Constant(rank, Integer(0))); }

RootVec RootVec::simple(Eigen::Index rank, Eigen::Index i) {
  IntVector v = IntVector::Constant(rank, Integer(0));
  v(i) = 1;
  return RootVec(std::move(v));
}

Sign RootVec::sign() const {
  bool pos = false;
  bool neg = false;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i) > 0) pos = true;
    if (coeffs_(i) < 0) neg = true;
  }
  if (pos && neg) return Sign::Mixed;
  if (pos) return Sign::Positive;
  if (neg) return Sign::Negative;
  return Sign::Zero;
}

std::strong_ordering operator<=>(const RootVec& a, const RootVec& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  const Integer ha = a.height();
  const Integer hb = b.height();
  if (ha != hb) return ha < hb ? std::strong_ordering::less : std::strong_ordering::greater;
  for (Eigen::Index i = 0; i < a.rank(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string RootVec::str() const {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_(i);
  os << ']';
  return os.str();
}

Integer simple_coroot_pairing(const Gcm& g, Eigen::Index i, const RootVec& v) {
  return g.entries().row(i).dot(v.coeffs());
}

Rational coroot_pairing(const Gcm& g, const RootVec& beta, const RootVec& gamma) {
  const Rational nb = beta.norm(g);
  if (nb <= 0) fail(ErrorKind::NotRealRoot, beta.str() + " has norm " + nb.str() + " <= 0");
  return Rational(2) * bilinear_form(g, gamma.coeffs(), beta.coeffs()) / nb;
}

RatVector coroot_coefficients(const Gcm& g, const RootVec& beta) {
  const Rational nb = beta.norm(g);
  if (nb <= 0) fail(ErrorKind::NotRealRoot, beta.str() + " has norm " + nb.str() + " <= 0");
  RatVector out(g.rank());
  for (Eigen::Index k = 0; k < g.rank(); ++k) {
    out(k) = Rational(2) * Rational(g.symmetrizer()(k) * beta[k]) / nb;
  }
  return out;
}

std::optional<SimpleRootWord> descend_to_simple(const Gcm& g, const RootVec& beta) {
  if (!beta.is_positive() || beta.rank() != g.rank()) return std::nullopt;
  SimpleRootWord out;
  IntVector v = beta.coeffs();
  while (true) {
    if (v.sum() == 1) {
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) == 1) out.simple = i;
      return out;
    }
    bool stepped = false;
    for (Eigen::Index i = 0; i < g.rank(); ++i) {
      const Integer p = g.entries().row(i).dot(v);
      if (p > 0) {
        v(i) -= p;
        if (v(i) < 0) return std::nullopt;  // beta was a multiple of alpha_i, or not a root
        out.word.push_back(static_cast<int>(i));
        stepped = true;
        break;
      }
    }
    if (!stepped) return std::nullopt;
  }
}

std::vector<RootVec> real_roots_up_to_height(const Gcm& g, std::int64_t height) {
  const Eigen::Index n = g.rank();
  std::set<RootVec> seen;
  std::vector<RootVec> frontier;
  if (height >= 1) {
    for (Eigen::Index i = 0; i < n; ++i) {
      frontier.push_back(RootVec::simple(n, i));
      seen.insert(frontier.back());
    }
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& r : frontier) {
      for (Eigen::Index i = 0; i < n; ++i) {
        IntVector v = r.coeffs();
        v(i) -= simple_coroot_pairing(g, i, r);
        RootVec s(std::move(v));
        if (!s.is_positive() || s.height() > height) continue;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Peterson recurrence

namespace {

void compositions(std::int64_t total, std::size_t parts, std::vector<std::int64_t>& prefix,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::int64_t c = 0; c <= total; ++c) {
    prefix.push_back(c);
    compositions(total - c, parts, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultTable::MultTable(Gcm gcm, std::int64_t height_bound) : gcm_(std::move(gcm)), height_bound_(height_bound) {}

std::uint64_t MultTable::key(const std::vector<std::int64_t>& coeffs) const {
  std::uint64_t k = 0;
  for (std::int64_t c : coeffs) k = k * static_cast<std::uint64_t>(height_bound_ + 1) + static_cast<std::uint64_t>(c);
  return k;
}

Integer MultTable::mult(const RootVec& beta) const {
  if (beta.rank() != gcm_.rank()) fail(ErrorKind::DimensionMismatch, "root rank differs from table rank");
  if (!beta.is_positive()) fail(ErrorKind::PreconditionViolated, "mult() needs a positive vector, got " + beta.str());
  if (beta.height() > height_bound_) {
    fail(ErrorKind::HeightOutOfRange,
         beta.str() + " has height " + beta.height().str() + " > " + std::to_string(height_bound_));
  }
  std::vector<std::int64_t> c(static_cast<std::size_t>(beta.rank()));
  for (Eigen::Index i = 0; i < beta.rank(); ++i) c[static_cast<std::size_t>(i)] = to_int64(beta[i]);
  return slots_[index_.at(key(c))].mult;
}

std::vector<std::pair<RootVec, Integer>> MultTable::roots() const {
  std::vector<std::pair<RootVec, Integer>> out;
  for (const auto& s : slots_) {
    if (s.mult == 0) continue;
    IntVector v(static_cast<Eigen::Index>(s.coeffs.size()));
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) v(static_cast<Eigen::Index>(i)) = Integer(s.coeffs[i]);
    out.emplace_back(RootVec(std::move(v)), s.mult);
  }
  return out;
}

MultTable peterson_multiplicities(const Gcm& g, std::int64_t height) {
  if (height < 1) fail(ErrorKind::PreconditionViolated, "height bound must be >= 1");
  const auto n = static_cast<std::size_t>(g.rank());
  if (static_cast<double>(n) * std::log2(static_cast<double>(height + 1)) >= 62.0) {
    fail(ErrorKind::ResourceCap, "lattice box too large for rank " + std::to_string(n));
  }
  MultTable table(g, height);

  std::vector<std::vector<std::int64_t>> all;
  for (std::int64_t h = 1; h <= height; ++h) {
    std::vector<std::int64_t> prefix;
    compositions(h, n, prefix, all);
  }
  table.slots_.reserve(all.size());
  for (auto& c : all) {
    table.index_.emplace(table.key(c), table.slots_.size());
    table.slots_.push_back({std::move(c), Integer(0)});
  }

  std::vector<std::int64_t> form(n * n);
  std::vector<std::int64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = to_int64(g.symmetrizer()(static_cast<Eigen::Index>(i)));
    for (std::size_t j = 0; j < n; ++j)
      form[i * n + j] = to_int64(g.form_matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  }
  auto pair_form = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) s += x[i] * y[j] * form[i * n + j];
    }
    return s;
  };

  std::vector<Rational> c(table.slots_.size());
  std::vector<std::int64_t> sub(n);
  std::vector<std::int64_t> rest(n);
  for (std::size_t idx = 0; idx < table.slots_.size(); ++idx) {
    const auto& beta = table.slots_[idx].coeffs;
    std::int64_t ht = 0;
    for (auto x : beta) ht += x;
    if (ht == 1) {
      c[idx] = 1;
      table.slots_[idx].mult = 1;
      continue;
    }
    // Ordered pairs beta' + beta'' = beta with both positive.
    Rational rhs(0);
    std::fill(sub.begin(), sub.end(), 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < n && sub[pos] == beta[pos]) sub[pos++] = 0;
      if (pos == n) break;
      ++sub[pos];
      std::int64_t hs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        rest[i] = beta[i] - sub[i];
        hs += sub[i];
      }
      if (hs == ht) continue;
      const Rational& c1 = c[table.index_.at(table.key(sub))];
      if (c1 == 0) continue;
      const Rational& c2 = c[table.index_.at(table.key(rest))];
      if (c2 == 0) continue;
      rhs += Rational(pair_form(sub, rest)) * c1 * c2;
    }
    std::int64_t two_rho = 0;
    for (std::size_t i = 0; i < n; ++i) two_rho += 2 * d[i] * beta[i];
    const std::int64_t denom = pair_form(beta, beta) - two_rho;
    // c_beta = sum_{k | beta} mult(beta/k) / k; `lower` is the k >= 2 part.
    Rational lower(0);
    std::int64_t content = 0;
    for (auto x : beta) content = std::gcd(content, x);
    for (std::int64_t k = 2; k <= content; ++k) {
      if (content % k != 0) continue;
      std::vector<std::int64_t> part(n);
      for (std::size_t i = 0; i < n; ++i) part[i] = beta[i] / k;
      lower += Rational(table.slots_[table.index_.at(table.key(part))].mult) / Rational(k);
    }

    if (denom == 0) {
      // A vanishing (beta|beta - 2rho) leaves c_beta free; only simple roots
      // are roots there, so mult(beta) = 0 and c_beta is the divisor part.
      if (rhs != 0) {
        std::ostringstream os;
        os << "(beta|beta-2rho) = 0 with nonzero right-hand side at " << RootVec(to_int_vector(beta));
        fail(ErrorKind::DegenerateDenominator, os.str());
      }
      c[idx] = lower;
      continue;
    }
    c[idx] = rhs / Rational(denom);
    const Rational m = c[idx] - lower;
    if (!is_integral(m) || m < 0) {
      fail(ErrorKind::InternalInconsistency,
           "non-integral or negative multiplicity " + m.str() + " at " + RootVec(to_int_vector(beta)).str());
    }
    table.slots_[idx].mult = numerator(m);
  }
  return table;
}

bool is_root(const MultTable& table, const RootVec& v) {
  const Integer h = v.height();
  if (h > table.height_bound() || -h > table.height_bound()) {
    fail(ErrorKind::HeightOutOfRange, v.str() + " exceeds table height " + std::to_string(table.height_bound()));
  }
  switch (v.sign()) {
    case Sign::Positive: return table.mult(v) > 0;
    case Sign::Negative: return table.mult(-v) > 0;
    default: return false;
  }
}

}  // namespace kmjm
