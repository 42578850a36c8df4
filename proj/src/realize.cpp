#include "kmjm/realize.hpp"

#include "kmjm/error.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace kmjm {

// ---------------------------------------------------------------------------
// AlgElement

namespace {

bool all_zero(const RatVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace

RatVector AlgElement::component(const RootVec& root, Eigen::Index dim) const {
  if (root.is_zero()) return cartan_;
  auto it = parts_.find(root);
  if (it == parts_.end()) return RatVector::Constant(dim, Rational(0));
  return it->second;
}

void AlgElement::add_to(const RootVec& root, const RatVector& coords) {
  if (root.is_zero()) {
    cartan_ += coords;
    return;
  }
  auto [it, inserted] = parts_.try_emplace(root, coords);
  if (!inserted) it->second += coords;
  if (all_zero(it->second)) parts_.erase(it);
}

bool AlgElement::is_zero() const { return parts_.empty() && all_zero(cartan_); }

std::vector<std::pair<BasisId, Rational>> AlgElement::terms() const {
  std::vector<std::pair<BasisId, Rational>> out;
  const Eigen::Index n = rank();
  for (const auto& [root, v] : parts_) {
    if (root < RootVec::zero(n)) {
      for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v(k) != 0) out.push_back({BasisId{root, static_cast<int>(k)}, v(k)});
    }
  }
  for (Eigen::Index k = 0; k < n; ++k)
    if (cartan_(k) != 0) out.push_back({BasisId{RootVec::zero(n), static_cast<int>(k)}, cartan_(k)});
  for (const auto& [root, v] : parts_) {
    if (root > RootVec::zero(n)) {
      for (Eigen::Index k = 0; k < v.size(); ++k)
        if (v(k) != 0) out.push_back({BasisId{root, static_cast<int>(k)}, v(k)});
    }
  }
  return out;
}

void AlgElement::prune() {
  for (auto it = parts_.begin(); it != parts_.end();) {
    if (all_zero(it->second)) {
      it = parts_.erase(it);
    } else {
      ++it;
    }
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& other) {
  if (cartan_.size() == 0) cartan_ = RatVector::Constant(other.rank(), Rational(0));
  cartan_ += other.cartan_;
  for (const auto& [root, v] : other.parts_) add_to(root, v);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& other) {
  if (cartan_.size() == 0) cartan_ = RatVector::Constant(other.rank(), Rational(0));
  cartan_ -= other.cartan_;
  for (const auto& [root, v] : other.parts_) add_to(root, RatVector(-v));
  return *this;
}

AlgElement& AlgElement::operator*=(const Rational& s) {
  if (s == 0) {
    parts_.clear();
    cartan_.setConstant(Rational(0));
    return *this;
  }
  cartan_ *= s;
  for (auto& [root, v] : parts_) v *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// TruncatedAlgebra

struct TruncatedAlgebra::Memo {
  std::mutex mutex;
  std::map<std::pair<BasisId, BasisId>, AlgElement> brackets;
};

TruncatedAlgebra::TruncatedAlgebra(Gcm g, std::int64_t height)
    : gcm_(std::move(g)), height_bound_(height), memo_(std::make_unique<Memo>()) {}
TruncatedAlgebra::TruncatedAlgebra(TruncatedAlgebra&&) noexcept = default;
TruncatedAlgebra& TruncatedAlgebra::operator=(TruncatedAlgebra&&) noexcept = default;
TruncatedAlgebra::~TruncatedAlgebra() = default;

const TruncatedAlgebra::Space* TruncatedAlgebra::space(const RootVec& positive_root) const {
  auto it = spaces_.find(positive_root);
  return it == spaces_.end() ? nullptr : &it->second;
}

bool TruncatedAlgebra::in_range(const RootVec& root) const {
  const Integer h = root.height();
  return h <= height_bound_ && -h <= height_bound_;
}

void TruncatedAlgebra::check_range(const RootVec& root) const {
  if (!in_range(root)) {
    fail(ErrorKind::HeightOutOfRange,
         "term in root space " + root.str() + " exceeds height bound " + std::to_string(height_bound_));
  }
}

Eigen::Index TruncatedAlgebra::dim(const RootVec& root) const {
  check_range(root);
  switch (root.sign()) {
    case Sign::Zero: return rank();
    case Sign::Positive: {
      const Space* s = space(root);
      return s ? s->dim : 0;
    }
    case Sign::Negative: {
      const Space* s = space(-root);
      return s ? s->dim : 0;
    }
    case Sign::Mixed: return 0;
  }
  return 0;
}

std::map<RootVec, Eigen::Index> TruncatedAlgebra::positive_dims() const {
  std::map<RootVec, Eigen::Index> out;
  for (const auto& [root, s] : spaces_) out.emplace(root, s.dim);
  return out;
}

std::int64_t TruncatedAlgebra::total_dimension() const {
  std::int64_t total = rank();
  for (const auto& [root, s] : spaces_) total += 2 * s.dim;
  return total;
}

AlgElement TruncatedAlgebra::e(Eigen::Index i) const {
  AlgElement x = zero();
  x.add_to(RootVec::simple(rank(), i), RatVector::Constant(1, Rational(1)));
  return x;
}

AlgElement TruncatedAlgebra::f(Eigen::Index i) const {
  AlgElement x = zero();
  x.add_to(-RootVec::simple(rank(), i), RatVector::Constant(1, Rational(1)));
  return x;
}

AlgElement TruncatedAlgebra::coroot(Eigen::Index i) const {
  AlgElement x = zero();
  x.cartan()(i) = 1;
  return x;
}

AlgElement TruncatedAlgebra::cartan_element(const RatVector& coeffs) const {
  if (coeffs.size() != rank()) fail(ErrorKind::DimensionMismatch, "Cartan coefficient length differs from rank");
  AlgElement x = zero();
  x.cartan() = coeffs;
  return x;
}

AlgElement TruncatedAlgebra::basis_element(const BasisId& id) const {
  if (id.is_cartan()) return coroot(id.index);
  const Eigen::Index d = dim(id.root);
  if (id.index < 0 || id.index >= d) {
    fail(ErrorKind::PreconditionViolated, "basis index out of range for root space " + id.root.str());
  }
  AlgElement x = zero();
  RatVector v = RatVector::Constant(d, Rational(0));
  v(id.index) = 1;
  x.add_to(id.root, v);
  return x;
}

AlgElement TruncatedAlgebra::cartan_action(const RatVector& h, const AlgElement& x) const {
  AlgElement out = zero();
  for (const auto& [root, v] : x.parts()) {
    // root(h) = sum_k h_k <root, alpha_k^vee>.
    Rational value(0);
    for (Eigen::Index k = 0; k < rank(); ++k) {
      if (h(k) != 0) value += h(k) * Rational(simple_coroot_pairing(gcm_, k, root));
    }
    if (value != 0) out.add_to(root, RatVector(value * v));
  }
  return out;
}

AlgElement TruncatedAlgebra::ad_generator(bool positive, Eigen::Index i, const AlgElement& x) const {
  const Eigen::Index n = rank();
  const RootVec alpha = RootVec::simple(n, i);
  AlgElement out = zero();

  // [e_i, h] = -alpha_i(h) e_i and [f_i, h] = alpha_i(h) f_i.
  Rational alpha_h(0);
  for (Eigen::Index k = 0; k < n; ++k) alpha_h += x.cartan()(k) * Rational(gcm_(k, i));
  if (alpha_h != 0) {
    if (positive) {
      out.add_to(alpha, RatVector::Constant(1, Rational(-alpha_h)));
    } else {
      out.add_to(-alpha, RatVector::Constant(1, alpha_h));
    }
  }

  for (const auto& [root, v] : x.parts()) {
    const bool root_positive = root.is_positive();
    const RootVec beta = root_positive ? root : -root;
    const Space* sp = space(beta);
    if (!sp) fail(ErrorKind::InternalInconsistency, "element has a component outside the realized spaces");
    const Space& s = *sp;
    // e_i on g_{-beta} and f_i on g_{beta} lower |height|; the other two raise it.
    const bool lowers = positive != root_positive;
    if (lowers) {
      if (beta == alpha) {
        RatVector h = RatVector::Constant(n, Rational(0));
        h(i) = positive ? v(0) : Rational(-v(0));
        out.add_to(RootVec::zero(n), h);
        continue;
      }
      const RootVec lower = beta - alpha;
      if (!lower.is_positive() || !space(lower)) continue;
      const RatVector image = s.ad_e[static_cast<std::size_t>(i)] * v;
      out.add_to(root_positive ? lower : -lower, image);
    } else {
      const RootVec upper = beta + alpha;
      check_range(upper);
      if (!space(upper)) continue;
      const RatVector image = s.ad_f[static_cast<std::size_t>(i)] * v;
      out.add_to(root_positive ? upper : -upper, image);
    }
  }
  return out;
}

AlgElement TruncatedAlgebra::bracket_basis_with(const BasisId& a, const AlgElement& y) const {
  AlgElement out = zero();
  for (const auto& [b, coeff] : y.terms()) {
    out += coeff * bracket_basis(a, b);
  }
  return out;
}

AlgElement TruncatedAlgebra::bracket_basis(const BasisId& a, const BasisId& b) const {
  const RootVec target = a.root + b.root;
  check_range(target);
  if (target.sign() == Sign::Mixed || (!target.is_zero() && dim(target) == 0)) return zero();

  if (a.is_cartan()) {
    RatVector h = RatVector::Constant(rank(), Rational(0));
    h(a.index) = 1;
    return cartan_action(h, basis_element(b));
  }
  if (b.is_cartan()) return -bracket_basis(b, a);
  if (a == b) return zero();

  const Integer ha = abs(a.root.height());
  const Integer hb = abs(b.root.height());
  // Decompose the lower argument: the smaller |height| strictly drops along
  // the recursion.
  if (ha > hb || (ha == hb && a > b)) return -bracket_basis(b, a);

  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->brackets.find({a, b});
    if (it != memo_->brackets.end()) return it->second;
  }

  const bool positive = a.root.is_positive();
  const RootVec beta = positive ? a.root : -a.root;
  AlgElement result;
  if (ha == 1) {
    Eigen::Index i = 0;
    while (beta[i] == 0) ++i;
    result = ad_generator(positive, i, basis_element(b));
  } else {
    const auto [i, parent_index] = space(beta)->parent[static_cast<std::size_t>(a.index)];
    const RootVec parent_beta = beta - RootVec::simple(rank(), i);
    const BasisId parent{positive ? parent_beta : -parent_beta, static_cast<int>(parent_index)};
    // [[g_i, p], y] = [g_i, [p, y]] - [p, [g_i, y]].
    result = ad_generator(positive, i, bracket_basis(parent, b)) -
             bracket_basis_with(parent, ad_generator(positive, i, basis_element(b)));
  }

  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->brackets.emplace(std::make_pair(a, b), result);
  return result;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

// Incremental forward elimination that tracks, for every stored row, its
// expression in terms of the rows accepted as basis vectors.
class BasisBuilder {
 public:
  explicit BasisBuilder(Eigen::Index width) : width_(width) {}

  /// Returns coordinates of `row` in the basis, accepting it as a new basis
  /// vector when it is independent of the current ones.
  std::vector<Rational> insert(std::vector<Rational> row, bool& accepted) {
    std::vector<Rational> coords(basis_count_, Rational(0));
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const Rational factor = row[static_cast<std::size_t>(pivots_[t])];
      if (factor == 0) continue;
      const auto& r = rows_[t];
      for (Eigen::Index c = pivots_[t]; c < width_; ++c) {
        if (r[static_cast<std::size_t>(c)] != 0) row[static_cast<std::size_t>(c)] -= factor * r[static_cast<std::size_t>(c)];
      }
      const auto& x = combos_[t];
      for (std::size_t b = 0; b < x.size(); ++b) {
        if (x[b] != 0) coords[b] += factor * x[b];
      }
    }
    Eigen::Index pivot = 0;
    while (pivot < width_ && row[static_cast<std::size_t>(pivot)] == 0) ++pivot;
    accepted = pivot < width_;
    if (!accepted) return coords;

    const Rational inv = Rational(1) / row[static_cast<std::size_t>(pivot)];
    for (auto& value : row) value *= inv;
    // New stored row = (new basis vector - sum coords_b basis_b) / pivot value.
    std::vector<Rational> combo(basis_count_ + 1, Rational(0));
    for (std::size_t b = 0; b < basis_count_; ++b) combo[b] = -coords[b] * inv;
    combo[basis_count_] = inv;
    for (auto& x : combos_) x.resize(basis_count_ + 1, Rational(0));
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    combos_.push_back(std::move(combo));
    ++basis_count_;
    std::vector<Rational> unit(basis_count_, Rational(0));
    unit.back() = 1;
    return unit;
  }

  std::size_t basis_count() const { return basis_count_; }

 private:
  Eigen::Index width_;
  std::size_t basis_count_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Eigen::Index> pivots_;
  std::vector<std::vector<Rational>> combos_;
};

}  // namespace

TruncatedAlgebra build_truncated(const Gcm& g, std::int64_t height, const RealizeOptions& options) {
  if (height < 1) fail(ErrorKind::PreconditionViolated, "height bound must be >= 1");
  {
    const MultTable estimate = peterson_multiplicities(g, height);
    Integer total(g.rank());
    for (const auto& [root, m] : estimate.roots()) total += 2 * m;
    if (total > options.dimension_cap) {
      fail(ErrorKind::ResourceCap, "estimated dimension " + total.str() + " exceeds cap " +
                                       std::to_string(options.dimension_cap));
    }
  }

  const Eigen::Index n = g.rank();
  const auto nn = static_cast<std::size_t>(n);
  TruncatedAlgebra alg(g, height);
  using Space = TruncatedAlgebra::Space;

  for (Eigen::Index i = 0; i < n; ++i) {
    Space s;
    s.dim = 1;
    s.ad_e.assign(nn, RatMatrix());
    s.ad_f.assign(nn, RatMatrix());
    alg.spaces_.emplace(RootVec::simple(n, i), std::move(s));
  }

  std::vector<RootVec> previous;
  for (Eigen::Index i = 0; i < n; ++i) previous.push_back(RootVec::simple(n, i));

  for (std::int64_t h = 2; h <= height; ++h) {
    std::set<RootVec> targets;
    for (const auto& gamma : previous)
      for (Eigen::Index i = 0; i < n; ++i) targets.insert(gamma + RootVec::simple(n, i));

    std::vector<RootVec> current;
    for (const RootVec& beta : targets) {
      // Column layout: one block per j with a space at beta - alpha_j.
      std::vector<Eigen::Index> offset(nn, -1);
      Eigen::Index width = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const RootVec lower = beta - RootVec::simple(n, j);
        if (const Space* s = alg.space(lower)) {
          offset[static_cast<std::size_t>(j)] = width;
          width += s->dim;
        }
      }

      BasisBuilder builder(width);
      std::vector<std::pair<Eigen::Index, Eigen::Index>> basis_parents;
      std::vector<std::vector<Rational>> basis_rows;
      // Candidate coordinates, grouped per generator i.
      std::vector<std::vector<std::vector<Rational>>> coords(nn);

      for (Eigen::Index i = 0; i < n; ++i) {
        const RootVec gamma = beta - RootVec::simple(n, i);
        const Space* gs = alg.space(gamma);
        if (!gs) continue;
        for (Eigen::Index k = 0; k < gs->dim; ++k) {
          std::vector<Rational> row(static_cast<std::size_t>(width), Rational(0));
          for (Eigen::Index j = 0; j < n; ++j) {
            const Eigen::Index off = offset[static_cast<std::size_t>(j)];
            if (off < 0) continue;
            // [e_j, [f_i, y]] = delta_ij [alpha_i^vee, y] + [f_i, [e_j, y]].
            if (i == j) {
              row[static_cast<std::size_t>(off + k)] -= Rational(simple_coroot_pairing(g, i, gamma));
            }
            const RootVec alpha_j = RootVec::simple(n, j);
            if (gamma == alpha_j) {
              // [e_j, f_j] = alpha_j^vee and [f_i, alpha_j^vee] = A_ji f_i.
              row[static_cast<std::size_t>(off)] += Rational(g(j, i));
              continue;
            }
            const RootVec lower = gamma - alpha_j;
            const Space* ls = alg.space(lower);
            if (!ls) continue;
            const RatVector ej_y = gs->ad_e[static_cast<std::size_t>(j)].col(k);
            const RatVector fi = ls->ad_f[static_cast<std::size_t>(i)] * ej_y;
            for (Eigen::Index r = 0; r < fi.size(); ++r) row[static_cast<std::size_t>(off + r)] += fi(r);
          }
          bool accepted = false;
          auto row_copy = row;
          coords[static_cast<std::size_t>(i)].push_back(builder.insert(std::move(row), accepted));
          if (accepted) {
            basis_parents.emplace_back(i, k);
            basis_rows.push_back(std::move(row_copy));
          }
        }
      }

      const auto dim = static_cast<Eigen::Index>(builder.basis_count());
      if (dim == 0) continue;

      for (Eigen::Index i = 0; i < n; ++i) {
        const RootVec gamma = beta - RootVec::simple(n, i);
        auto it = alg.spaces_.find(gamma);
        if (it == alg.spaces_.end()) continue;
        RatMatrix m = RatMatrix::Constant(dim, it->second.dim, Rational(0));
        const auto& cs = coords[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < cs.size(); ++k)
          for (std::size_t b = 0; b < cs[k].size(); ++b) m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(k)) = cs[k][b];
        it->second.ad_f[static_cast<std::size_t>(i)] = std::move(m);
      }

      Space s;
      s.dim = dim;
      s.parent = std::move(basis_parents);
      s.ad_f.assign(nn, RatMatrix());
      s.ad_e.assign(nn, RatMatrix());
      for (Eigen::Index j = 0; j < n; ++j) {
        const Eigen::Index off = offset[static_cast<std::size_t>(j)];
        if (off < 0) continue;
        const Eigen::Index rows = alg.space(beta - RootVec::simple(n, j))->dim;
        RatMatrix m(rows, dim);
        for (Eigen::Index b = 0; b < dim; ++b)
          for (Eigen::Index r = 0; r < rows; ++r) m(r, b) = basis_rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(off + r)];
        s.ad_e[static_cast<std::size_t>(j)] = std::move(m);
      }
      alg.spaces_.emplace(beta, std::move(s));
      current.push_back(beta);
    }
    previous = std::move(current);
  }

  // Serre relations (ad e_i)^{1 - A_ij} e_j = 0, wherever the height allows.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::int64_t power = 1 - to_int64(g(i, j));
      if (power + 1 > height) continue;
      AlgElement x = alg.e(j);
      for (std::int64_t p = 0; p < power; ++p) x = alg.ad_generator(true, i, x);
      if (!x.is_zero()) fail(ErrorKind::InternalInconsistency, "Serre relation fails in the realization");
    }
  }
  return alg;
}

// ---------------------------------------------------------------------------
// Brackets, exponentials, reflections

AlgElement bracket(const TruncatedAlgebra& alg, const AlgElement& x, const AlgElement& y) {
  AlgElement out = alg.zero();
  const auto ys = y.terms();
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : ys) {
      out += (ca * cb) * alg.bracket_basis(a, b);
    }
  }
  return out;
}

AlgElement exp_ad(const TruncatedAlgebra& alg, const AlgElement& x, const AlgElement& y, const Rational& t) {
  for (Eigen::Index k = 0; k < x.rank(); ++k) {
    if (x.cartan()(k) != 0) fail(ErrorKind::PreconditionViolated, "exp_ad needs x without a Cartan component");
  }
  if (t == 0 || x.is_zero()) return y;
  AlgElement result = y;
  AlgElement term = y;
  const std::int64_t max_terms = 2 * alg.height_bound() + 2;
  for (std::int64_t k = 1; k <= max_terms; ++k) {
    try {
      term = (t / Rational(k)) * bracket(alg, x, term);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HeightOutOfRange) throw;
      fail(ErrorKind::TruncationAmbiguous, "exp(ad x) series term " + std::to_string(k) + " leaves the range: " + e.what());
    }
    if (term.is_zero()) return result;
    result += term;
  }
  fail(ErrorKind::TruncationAmbiguous, "exp(ad x) series did not terminate within the range");
}

AlgElement integrated_reflection(const TruncatedAlgebra& alg, Eigen::Index i, const AlgElement& x) {
  const AlgElement e = alg.e(i);
  const AlgElement f = alg.f(i);
  return exp_ad(alg, e, exp_ad(alg, f, exp_ad(alg, e, x, Rational(1)), Rational(-1)), Rational(1));
}

AlgElement integrated_reflection_inverse(const TruncatedAlgebra& alg, Eigen::Index i, const AlgElement& x) {
  const AlgElement e = alg.e(i);
  const AlgElement f = alg.f(i);
  return exp_ad(alg, e, exp_ad(alg, f, exp_ad(alg, e, x, Rational(-1)), Rational(1)), Rational(-1));
}

AlgElement coroot_element(const TruncatedAlgebra& alg, const RootVec& beta) {
  return alg.cartan_element(coroot_coefficients(alg.gcm(), beta));
}

RootVectorPair real_root_vector(const TruncatedAlgebra& alg, const RootVec& beta) {
  const auto word = descend_to_simple(alg.gcm(), beta);
  if (!word) fail(ErrorKind::NotRealRoot, beta.str() + " is not a positive real root");
  alg.dim(beta);  // range check
  AlgElement pos = alg.e(word->simple);
  AlgElement neg = alg.f(word->simple);
  for (auto it = word->word.rbegin(); it != word->word.rend(); ++it) {
    pos = integrated_reflection(alg, *it, pos);
    neg = integrated_reflection(alg, *it, neg);
  }
  if (pos.parts().size() != 1 || pos.parts().begin()->first != beta || neg.parts().size() != 1 ||
      neg.parts().begin()->first != -beta) {
    fail(ErrorKind::InternalInconsistency, "reflection transport left the root space of " + beta.str());
  }
  const AlgElement pairing = bracket(alg, pos, neg);
  const RatVector target = coroot_coefficients(alg.gcm(), beta);
  if (!pairing.parts().empty()) fail(ErrorKind::InternalInconsistency, "[e_beta, e_-beta] left the Cartan part");
  Rational scale(0);
  for (Eigen::Index k = 0; k < target.size(); ++k) {
    if (target(k) != 0) {
      scale = pairing.cartan()(k) / target(k);
      break;
    }
  }
  if (scale == 0 || pairing.cartan() != RatVector(scale * target)) {
    fail(ErrorKind::InternalInconsistency, "[e_beta, e_-beta] is not a multiple of beta^vee");
  }
  neg *= Rational(1) / scale;
  return {std::move(pos), std::move(neg), scale};
}

std::vector<NilpotencyProbe> check_locally_nilpotent(const TruncatedAlgebra& alg, const AlgElement& e,
                                                     const std::vector<AlgElement>& probes, int max_n) {
  std::vector<NilpotencyProbe> out;
  for (const auto& y : probes) {
    NilpotencyProbe probe;
    AlgElement z = y;
    for (int k = 1; k <= max_n; ++k) {
      try {
        z = bracket(alg, e, z);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::HeightOutOfRange) throw;
        probe.left_range = true;
        break;
      }
      if (z.is_zero()) {
        probe.order = k;
        break;
      }
    }
    out.push_back(probe);
  }
  return out;
}

}  // namespace kmjm
