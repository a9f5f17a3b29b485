#include "mixzeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mixzeta {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  std::string num_part(text);
  std::string den_part = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = std::string(text.substr(0, slash));
    den_part = std::string(text.substr(slash + 1));
  }
  Integer num, den;
  if (num.set_str(num_part, 10) != 0 || den.set_str(den_part, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("zero raised to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);  // already coprime
}

double to_double(const Rational& q) {
  // mpq_get_d truncates toward zero; route through a wider mantissa instead.
  mpf_class f(0, 128);
  f = q;
  return f.get_d();
}

}  // namespace mixzeta
