#include "msu/scalar.hpp"

#include "msu/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace msu {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

/// Decimal digits to an integer. GMP reads a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer v = decimal_integer(s);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    Integer den = decimal_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    // Division canonicalizes; the string constructor does not.
    return Rational(num) / Rational(den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer num = decimal_integer(digits.empty() ? std::string_view("0") : std::string_view(digits));
    Integer den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    Rational r = Rational(num) / Rational(den);
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(double value) {
  // Shortest representation that round-trips.
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf, end);
}

Integer floor(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NotUltrametric: return "NotUltrametric";
    case ErrorCode::ResultNotUltrametric: return "ResultNotUltrametric";
    case ErrorCode::R0TooSmall: return "R0TooSmall";
    case ErrorCode::EpsilonTooSmall: return "EpsilonTooSmall";
    case ErrorCode::BadSeparators: return "BadSeparators";
    case ErrorCode::NotPseudolinear: return "NotPseudolinear";
    case ErrorCode::IsometricDuplicate: return "IsometricDuplicate";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::OriginNotAllowed: return "OriginNotAllowed";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::NonpositiveDistance: return "NonpositiveDistance";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace msu
