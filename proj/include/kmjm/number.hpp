// Exact scalar types and the Eigen aliases used throughout kmjm.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kmjm {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer (GMP backed, no expression templates so that
/// it composes with Eigen's own expression machinery).
using Integer = mp::number<mp::gmp_int, mp::et_off>;
/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

inline Rational to_rational(const Integer& z) { return Rational(z); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Numerator of an integral rational; caller guarantees integrality.
inline Integer as_integer(const Rational& q) { return numerator(q); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

template <typename Scalar>
IntVector to_int_vector(const std::vector<Scalar>& values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = Integer(values[i]);
  return v;
}

/// Fits-in-int64 conversion for small quantities (indices, heights, loop
/// bounds). Throws std::overflow_error otherwise.
std::int64_t to_int64(const Integer& z);

}  // namespace kmjm
