#include "rigorkit/rational.hpp"

#include <cctype>

namespace rigorkit {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos >= s.size()) return std::nullopt;

  const auto slash = s.find('/', pos);
  const auto dot = s.find('.', pos);
  if (slash != std::string::npos && dot != std::string::npos) {
    return std::nullopt;
  }

  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  Rational result;
  if (slash != std::string::npos) {
    const std::string num = s.substr(pos, slash - pos);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den == "0") {
      return std::nullopt;
    }
    result = Rational(Integer(num), Integer(den));
  } else if (dot != std::string::npos) {
    const std::string whole = s.substr(pos, dot - pos);
    const std::string frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      return std::nullopt;
    }
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, frac.size());
    Integer digits(whole.empty() ? "0" : whole);
    digits *= ten_pow;
    if (!frac.empty()) digits += Integer(frac);
    result = Rational(digits, ten_pow);
  } else {
    if (!all_digits(s.substr(pos))) return std::nullopt;
    result = Rational(Integer(s.substr(pos)));
  }
  result.canonicalize();
  if (neg) result = -result;
  return result;
}

std::string rational_to_string(const Rational& q) {
  Integer den = q.get_den();
  if (den == 1) return q.get_num().get_str();
  // Exact decimal when den = 2^a 5^b.
  unsigned long twos = 0, fives = 0;
  Integer d = den;
  while (mpz_even_p(d.get_mpz_t())) {
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), 1);
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    ++fives;
  }
  if (d != 1) return q.get_str();
  const unsigned long k = std::max(twos, fives);
  Integer scale2, scale5;
  mpz_ui_pow_ui(scale2.get_mpz_t(), 2, k - twos);
  mpz_ui_pow_ui(scale5.get_mpz_t(), 5, k - fives);
  Integer num = q.get_num() * scale2 * scale5;
  std::string digits = num.get_str();
  bool neg = false;
  if (!digits.empty() && digits[0] == '-') {
    neg = true;
    digits = digits.substr(1);
  }
  if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
  digits.insert(digits.size() - k, ".");
  return (neg ? "-" : "") + digits;
}

}  // namespace rigorkit
