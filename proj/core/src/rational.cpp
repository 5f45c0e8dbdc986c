#include "barysimplex/rational.hpp"

#include <cctype>
#include <ostream>

#include "barysimplex/error.hpp"

namespace barysimplex {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const char* why) {
  throw Error(ErrorCode::ParseError,
              "'" + std::string(text) + "' at position " + std::to_string(pos) + ": " + why);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) parse_fail(text, begin, "empty number");

  bool negative = false;
  std::size_t i = 0;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    i = 1;
  }
  std::string_view mag = body.substr(i);

  mpq_class value;
  if (auto slash = mag.find('/'); slash != std::string_view::npos) {
    auto num = mag.substr(0, slash);
    auto den = mag.substr(slash + 1);
    if (!all_digits(num)) parse_fail(text, begin + i, "bad numerator");
    if (!all_digits(den)) parse_fail(text, begin + i + slash + 1, "bad denominator");
    mpz_class d(std::string(den), 10);
    if (d == 0) parse_fail(text, begin + i + slash + 1, "zero denominator");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = mag.find('.'); dot != std::string_view::npos) {
    auto whole = mag.substr(0, dot);
    auto frac = mag.substr(dot + 1);
    if (!whole.empty() && !all_digits(whole)) parse_fail(text, begin + i, "bad integer part");
    if (!frac.empty() && !all_digits(frac)) parse_fail(text, begin + i + dot + 1, "bad fraction part");
    if (whole.empty() && frac.empty()) parse_fail(text, begin + i, "no digits");
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = mpq_class(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(mag)) parse_fail(text, begin + i, "bad integer");
    value = mpq_class(mpz_class(std::string(mag), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pos_part(const Rational& c) { return c.sign() > 0 ? c : Rational(0); }

Rational neg_part(const Rational& c) { return c.sign() < 0 ? c : Rational(0); }

}  // namespace barysimplex
