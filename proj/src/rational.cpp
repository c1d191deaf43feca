#include "takagi/rational.hpp"

#include <cctype>
#include <ostream>

#include "takagi/errors.hpp"

namespace takagi {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_decimal_integer(s)) {
    throw ParseError("malformed rational '" + std::string(whole) + "': bad token '" +
                     std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer pow2(std::size_t k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  const Integer num = parse_integer(num_text, text);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "': bad token '" +
                     std::string(den_text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::frac() const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(r, value_.get_den());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::scaled_pow2(long k) const {
  mpq_class r;
  if (k >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), value_.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(r.get_mpq_t(), value_.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return Rational(std::move(r));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer num = value_.get_num();
  if (num < 0) num = -num;
  const Integer& den = value_.get_den();
  // round(|num| * scale / den), halves away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);
  std::string body = scaled.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sign() < 0 && scaled != 0;
  return negative ? "-" + body : body;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace takagi
