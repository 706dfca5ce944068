#include "lexraf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace lexraf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::MissingPayoffs: return "MissingPayoffs";
    case ErrorKind::WeightArityMismatch: return "WeightArityMismatch";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::NonContiguousRanks: return "NonContiguousRanks";
    case ErrorKind::EqualInputs: return "EqualInputs";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorKind::Parse, "invalid rational literal '" + std::string(text) +
                                    "' (expected p/q or a finite decimal)");
}

// cpp_int reads a leading zero as an octal prefix, so strip zeros first.
BigInt decimal(std::string digits) {
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? BigInt(0) : BigInt(digits);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash);
    auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_rational(text);
    BigInt den = decimal(std::string(q));
    if (den.is_zero()) bad_rational(text);
    BigInt num = decimal(std::string(p));
    return Rational(negative ? BigInt(-num) : num, den);
  }

  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (dot != std::string_view::npos) {
    // "1." and "." are rejected; ".5" is accepted.
    if (frac_part.empty() || (!int_part.empty() && !all_digits(int_part)) ||
        !all_digits(frac_part)) {
      bad_rational(text);
    }
  } else if (!all_digits(int_part)) {
    bad_rational(text);
  }

  BigInt num = decimal(std::string(int_part) + std::string(frac_part));
  BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
  return Rational(negative ? BigInt(-num) : num, den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lexraf
