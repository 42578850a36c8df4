#include "kmjm/gcm.hpp"

#include "kmjm/error.hpp"
#include "kmjm/linalg.hpp"

#include <numeric>
#include <queue>
#include <sstream>

namespace kmjm {

namespace {

std::string entry_name(Eigen::Index i, Eigen::Index j) {
  std::ostringstream os;
  os << "A[" << i + 1 << "][" << j + 1 << "]";
  return os.str();
}

void check_axioms(const IntMatrix& a) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    fail(ErrorKind::NotGCM, "matrix must be square and nonempty");
  }
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i, i) != 2) fail(ErrorKind::NotGCM, entry_name(i, i) + " = " + a(i, i).str() + ", expected 2");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) fail(ErrorKind::NotGCM, entry_name(i, j) + " = " + a(i, j).str() + " is positive");
      if ((a(i, j) == 0) != (a(j, i) == 0)) {
        fail(ErrorKind::NotGCM, entry_name(i, j) + " and " + entry_name(j, i) + " break the zero pattern");
      }
    }
  }
}

std::vector<std::vector<Eigen::Index>> connected_components(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Eigen::Index>> out;
  for (Eigen::Index start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Eigen::Index> comp;
    std::queue<Eigen::Index> todo;
    todo.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!todo.empty()) {
      const Eigen::Index i = todo.front();
      todo.pop();
      comp.push_back(i);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j != i && a(i, j) != 0 && !seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = 1;
          todo.push(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// d_i A_ij = d_j A_ji, solved along a spanning tree of each component and then
// checked on every edge.
IntVector compute_symmetrizer(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
  for (const auto& comp : connected_components(a)) {
    d[static_cast<std::size_t>(comp.front())] = 1;
    std::queue<Eigen::Index> todo;
    todo.push(comp.front());
    while (!todo.empty()) {
      const Eigen::Index i = todo.front();
      todo.pop();
      for (Eigen::Index j : comp) {
        if (j == i || a(i, j) == 0) continue;
        auto& dj = d[static_cast<std::size_t>(j)];
        if (dj == 0) {
          dj = d[static_cast<std::size_t>(i)] * Rational(a(i, j)) / Rational(a(j, i));
          todo.push(j);
        }
      }
    }
    for (Eigen::Index i : comp) {
      for (Eigen::Index j : comp) {
        if (d[static_cast<std::size_t>(i)] * Rational(a(i, j)) != d[static_cast<std::size_t>(j)] * Rational(a(j, i))) {
          fail(ErrorKind::NotSymmetrizable,
               "cycle condition fails at " + entry_name(i, j) + " / " + entry_name(j, i));
        }
      }
    }
    // Scale the component to the smallest positive integers.
    Integer lcm_den(1);
    for (Eigen::Index i : comp) lcm_den = lcm(lcm_den, denominator(d[static_cast<std::size_t>(i)]));
    Integer g(0);
    for (Eigen::Index i : comp) {
      d[static_cast<std::size_t>(i)] *= Rational(lcm_den);
      g = gcd(g, numerator(d[static_cast<std::size_t>(i)]));
    }
    for (Eigen::Index i : comp) d[static_cast<std::size_t>(i)] /= Rational(g);
  }
  IntVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = numerator(d[static_cast<std::size_t>(i)]);
  return out;
}

Type classify_block(const IntMatrix& sym) {
  const auto minors = linalg::leading_principal_minors<Integer>(sym);
  const std::size_t k = minors.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (minors[i] <= 0) return Type::Indefinite;
  }
  if (minors.back() > 0) return Type::Finite;
  if (minors.back() == 0) return Type::Affine;
  return Type::Indefinite;
}

}  // namespace

std::string to_string(Type type) {
  switch (type) {
    case Type::Finite: return "finite";
    case Type::Affine: return "affine";
    case Type::Indefinite: return "indefinite";
  }
  return "?";
}

Gcm::Gcm(IntMatrix entries) : entries_(std::move(entries)) {
  check_axioms(entries_);
  symmetrizer_ = compute_symmetrizer(entries_);
  form_ = symmetrizer_.asDiagonal() * entries_;
}

std::vector<std::vector<Eigen::Index>> Gcm::components() const { return connected_components(entries_); }

Gcm Gcm::principal_submatrix(const std::vector<Eigen::Index>& indices) const {
  IntMatrix sub(static_cast<Eigen::Index>(indices.size()), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c)
      sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries_(indices[r], indices[c]);
  return Gcm(std::move(sub));
}

Gcm validate_gcm(const IntMatrix& matrix) { return Gcm(matrix); }

Gcm validate_gcm(const std::vector<std::vector<long long>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      fail(ErrorKind::NotGCM, "matrix must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Integer(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return Gcm(std::move(m));
}

Gcm rank2_gcm(const Integer& a, const Integer& b) {
  IntMatrix m(2, 2);
  m << Integer(2), Integer(-b), Integer(-a), Integer(2);
  return Gcm(std::move(m));
}

TypeTag classify(const Gcm& g) {
  bool any_affine = false;
  bool any_indefinite = false;
  const auto comps = g.components();
  for (const auto& comp : comps) {
    IntMatrix sym(static_cast<Eigen::Index>(comp.size()), static_cast<Eigen::Index>(comp.size()));
    for (std::size_t r = 0; r < comp.size(); ++r)
      for (std::size_t c = 0; c < comp.size(); ++c)
        sym(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g.form_matrix()(comp[r], comp[c]);
    switch (classify_block(sym)) {
      case Type::Finite: break;
      case Type::Affine: any_affine = true; break;
      case Type::Indefinite: any_indefinite = true; break;
    }
  }
  TypeTag tag;
  if (any_indefinite) {
    tag.type = Type::Indefinite;
    tag.hyperbolic = g.rank() == 2 && comps.size() == 1 && g(0, 1) * g(1, 0) >= 5;
  } else if (any_affine) {
    tag.type = Type::Affine;
  }
  return tag;
}

Rational bilinear_form(const Gcm& g, const IntVector& beta, const IntVector& gamma) {
  if (beta.size() != g.rank() || gamma.size() != g.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "root vector length differs from the GCM rank");
  }
  return Rational(beta.dot(g.form_matrix() * gamma));
}

}  // namespace kmjm
