#include "kmjm/number.hpp"

#include "kmjm/error.hpp"

#include <limits>
#include <stdexcept>

namespace kmjm {

namespace {

bool is_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_integer_text(text)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num) / Rational(den);
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + z.str() + " does not fit in 64 bits");
  }
  return z.convert_to<std::int64_t>();
}

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorKind::NotRealRoot: return "NotRealRoot";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::NotPiSystem: return "NotPiSystem";
    case ErrorKind::OracleTooShort: return "OracleTooShort";
    case ErrorKind::SingularB: return "SingularB";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::TruncationAmbiguous: return "TruncationAmbiguous";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace kmjm
