#include "frieze/rational.hpp"

#include <limits>
#include <stdexcept>

namespace frieze {

Rat::Rat(long long v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    v_ = static_cast<long>(v);
  } else {
    v_ = mpq_class(mpz_class(std::to_string(v)));
  }
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
  if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  mpz_class num = parse_integer(trim(text.substr(0, slash)));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text[0] == '-') throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

long long Rat::to_int64() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  const mpz_class& z = v_.get_num();
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of range: " + str());
  return z.get_si();
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

}  // namespace frieze
