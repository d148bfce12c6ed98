#include "rigorkit/dyadic.hpp"

#include <sstream>
#include <stdexcept>

namespace rigorkit {

void Dyadic::normalize() {
  if (man_ == 0) {
    exp_ = 0;
    return;
  }
  const auto shift = mpz_scan1(man_.get_mpz_t(), 0);
  if (shift > 0) {
    mpz_fdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), shift);
    exp_ += static_cast<long>(shift);
  }
}

Dyadic Dyadic::from_rational_exact(const Rational& q) {
  const Integer& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("denominator is not a power of two: " +
                                q.get_str());
  }
  const auto k = mpz_scan1(den.get_mpz_t(), 0);
  return Dyadic(q.get_num(), -static_cast<long>(k));
}

Dyadic Dyadic::from_rational_dir(const Rational& q, unsigned precision,
                                 bool up) {
  if (q == 0) return Dyadic();
  if (precision == 0) precision = 1;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  // Scale so the quotient carries `precision` significant bits.
  const long nbits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long dbits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = static_cast<long>(precision) + 1 + dbits - nbits;
  Integer scaled_num = num;
  Integer scaled_den = den;
  long exp = 0;
  if (shift > 0) {
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(),
                 static_cast<unsigned long>(shift));
    exp = -shift;
  } else if (shift < 0) {
    mpz_mul_2exp(scaled_den.get_mpz_t(), scaled_den.get_mpz_t(),
                 static_cast<unsigned long>(-shift));
    exp = -shift;
  }
  Integer quot;
  if (up) {
    mpz_cdiv_q(quot.get_mpz_t(), scaled_num.get_mpz_t(),
               scaled_den.get_mpz_t());
  } else {
    mpz_fdiv_q(quot.get_mpz_t(), scaled_num.get_mpz_t(),
               scaled_den.get_mpz_t());
  }
  return Dyadic(quot, exp).round_dir(precision, up);
}

Dyadic Dyadic::from_rational_down(const Rational& q, unsigned precision) {
  return from_rational_dir(q, precision, false);
}

Dyadic Dyadic::from_rational_up(const Rational& q, unsigned precision) {
  return from_rational_dir(q, precision, true);
}

Rational Dyadic::to_rational() const {
  Rational r(man_);
  if (exp_ >= 0) {
    mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(),
                 static_cast<unsigned long>(exp_));
  } else {
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
                 static_cast<unsigned long>(-exp_));
  }
  r.canonicalize();
  return r;
}

double Dyadic::to_double() const {
  return mpq_get_d(to_rational().get_mpq_t());
}

std::string Dyadic::to_string() const {
  if (exp_ >= 0) {
    Integer v = man_;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(),
                 static_cast<unsigned long>(exp_));
    return v.get_str();
  }
  // Exact decimal: man / 2^k == man * 5^k / 10^k.
  const unsigned long k = static_cast<unsigned long>(-exp_);
  Integer scaled = man_;
  Integer five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, k);
  scaled *= five_pow;
  std::string digits = scaled.get_str();
  bool neg = false;
  if (!digits.empty() && digits[0] == '-') {
    neg = true;
    digits = digits.substr(1);
  }
  if (digits.size() <= k) {
    digits.insert(0, k - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - k, ".");
  return (neg ? "-" : "") + digits;
}

std::strong_ordering Dyadic::cmp_impl(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Align exponents and compare mantissas.
  const long e = std::min(a.exp_, b.exp_);
  Integer ma = a.man_;
  Integer mb = b.man_;
  if (a.exp_ > e) {
    mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(),
                 static_cast<unsigned long>(a.exp_ - e));
  }
  if (b.exp_ > e) {
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(),
                 static_cast<unsigned long>(b.exp_ - e));
  }
  const int c = cmp(ma, mb);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long e = std::min(a.exp_, b.exp_);
  Integer ma = a.man_;
  Integer mb = b.man_;
  if (a.exp_ > e) {
    mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(),
                 static_cast<unsigned long>(a.exp_ - e));
  }
  if (b.exp_ > e) {
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(),
                 static_cast<unsigned long>(b.exp_ - e));
  }
  return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
}

Dyadic Dyadic::round_dir(unsigned precision, bool up) const {
  if (precision == 0) precision = 1;
  const std::size_t nbits = bits();
  if (nbits <= precision) return *this;
  const unsigned long shift =
      static_cast<unsigned long>(nbits - precision);
  Integer m;
  if (up) {
    mpz_cdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), shift);
  } else {
    mpz_fdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), shift);
  }
  return Dyadic(m, exp_ + static_cast<long>(shift));
}

Dyadic Dyadic::round_down(unsigned precision) const {
  return round_dir(precision, false);
}

Dyadic Dyadic::round_up(unsigned precision) const {
  return round_dir(precision, true);
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }
Dyadic abs(const Dyadic& a) { return a.sign() < 0 ? -a : a; }

}  // namespace rigorkit
