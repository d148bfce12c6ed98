#include "rigorkit/interval.hpp"

#include <algorithm>
#include <array>

namespace rigorkit {

Interval::Interval(Dyadic lo, Dyadic hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw std::invalid_argument("interval endpoints out of order");
  }
}

Interval Interval::from_rational(const Rational& q, unsigned precision) {
  const Integer& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) == 1) {
    const Dyadic d = Dyadic::from_rational_exact(q);
    return Interval(d, d);
  }
  return Interval(Dyadic::from_rational_down(q, precision),
                  Dyadic::from_rational_up(q, precision));
}

Interval Interval::from_rationals(const Rational& lo, const Rational& hi,
                                  unsigned precision) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  return Interval(from_rational(lo, precision).lo(),
                  from_rational(hi, precision).hi());
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

std::string Interval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

Interval interval_add(const Interval& a, const Interval& b,
                      unsigned precision) {
  return Interval((a.lo() + b.lo()).round_down(precision),
                  (a.hi() + b.hi()).round_up(precision));
}

Interval interval_sub(const Interval& a, const Interval& b,
                      unsigned precision) {
  return Interval((a.lo() - b.hi()).round_down(precision),
                  (a.hi() - b.lo()).round_up(precision));
}

Interval interval_mul(const Interval& a, const Interval& b,
                      unsigned precision) {
  const std::array<Dyadic, 4> prods = {
      a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  Dyadic lo = prods[0];
  Dyadic hi = prods[0];
  for (int i = 1; i < 4; ++i) {
    lo = min(lo, prods[i]);
    hi = max(hi, prods[i]);
  }
  return Interval(lo.round_down(precision), hi.round_up(precision));
}

Interval interval_div(const Interval& a, const Interval& b,
                      unsigned precision) {
  if (b.contains_zero()) {
    throw DomainError("interval division by an interval containing zero");
  }
  const Rational alo = a.lo_q();
  const Rational ahi = a.hi_q();
  const Rational blo = b.lo_q();
  const Rational bhi = b.hi_q();
  const std::array<Rational, 4> quots = {alo / blo, alo / bhi, ahi / blo,
                                         ahi / bhi};
  Rational lo = quots[0];
  Rational hi = quots[0];
  for (int i = 1; i < 4; ++i) {
    lo = std::min(lo, quots[i]);
    hi = std::max(hi, quots[i]);
  }
  return Interval(Dyadic::from_rational_down(lo, precision),
                  Dyadic::from_rational_up(hi, precision));
}

Interval interval_pow(const Interval& a, unsigned n, unsigned precision) {
  if (n == 0) return Interval(Dyadic::one());
  if (n == 1) return a;
  auto pow_dyadic = [](const Dyadic& d, unsigned k) {
    Dyadic acc = Dyadic::one();
    for (unsigned i = 0; i < k; ++i) acc = acc * d;
    return acc;
  };
  const Dyadic plo = pow_dyadic(a.lo(), n);
  const Dyadic phi = pow_dyadic(a.hi(), n);
  Dyadic lo, hi;
  if (n % 2 == 1) {
    lo = plo;
    hi = phi;
  } else if (a.lo().sign() >= 0) {
    lo = plo;
    hi = phi;
  } else if (a.hi().sign() <= 0) {
    lo = phi;
    hi = plo;
  } else {
    lo = Dyadic::zero();
    hi = max(plo, phi);
  }
  return Interval(lo.round_down(precision), hi.round_up(precision));
}

namespace {

// Scaling for integer square root: d = m 2^e = M 2^(-2u) with
// M = m 2^(e+2u) an integer holding ~2(precision+2) bits.
// Returns (M, u).
std::pair<Integer, long> sqrt_scale(const Dyadic& d, unsigned precision) {
  const long e = d.exponent();
  const long want_bits = 2 * (static_cast<long>(precision) + 2);
  long shift = want_bits - static_cast<long>(d.bits()) - e;
  if (shift < -e) shift = -e;  // keep e + shift >= 0
  if (shift < 0) shift = 0;
  if (shift % 2 != 0) ++shift;
  Integer scaled = d.mantissa();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
               static_cast<unsigned long>(e + shift));
  return {scaled, shift / 2};
}

}  // namespace

Dyadic sqrt_down(const Dyadic& d, unsigned precision) {
  if (d.sign() < 0) throw DomainError("sqrt of negative dyadic");
  if (d.is_zero()) return Dyadic();
  auto [scaled, u] = sqrt_scale(d, precision);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  // root^2 <= scaled, so root 2^(-u) <= sqrt(d).
  return Dyadic(root, -u).round_down(precision);
}

Dyadic sqrt_up(const Dyadic& d, unsigned precision) {
  if (d.sign() < 0) throw DomainError("sqrt of negative dyadic");
  if (d.is_zero()) return Dyadic();
  auto [scaled, u] = sqrt_scale(d, precision);
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  if (rem != 0) root += 1;
  return Dyadic(root, -u).round_up(precision);
}

Interval interval_sqrt(const Interval& a, unsigned precision) {
  if (a.lo().sign() < 0) {
    throw DomainError("sqrt of interval with negative lower endpoint");
  }
  return Interval(sqrt_down(a.lo(), precision), sqrt_up(a.hi(), precision));
}

namespace {

// Alternating series sum_{k} (-1)^k x^(2k+1) / (2k+1) on |x| <= 1/2,
// with remainder bounded by the first omitted term.
Interval arctan_series(const Rational& x, unsigned precision) {
  const unsigned work = precision + 8;
  Rational sum = 0;
  Rational power = x;  // x^(2k+1)
  const Rational x2 = x * x;
  unsigned k = 0;
  // |x| <= 1/2 gives at least 2 bits per term.
  const unsigned max_terms = work / 2 + 4;
  for (; k < max_terms; ++k) {
    Rational term = power / Rational(2 * k + 1);
    if (k % 2 == 1) term = -term;
    sum += term;
    power *= x2;
  }
  Rational rem = abs(power) / Rational(2 * k + 1);
  return Interval(Dyadic::from_rational_down(sum - rem, work),
                  Dyadic::from_rational_up(sum + rem, work));
}

Interval pi_over_2(unsigned precision);

// Enclosure of arctan at a rational point, any magnitude.
Interval arctan_point_impl(const Rational& x, unsigned precision) {
  const unsigned work = precision + 8;
  if (x == 0) return Interval();
  if (x < 0) return -arctan_point_impl(-x, precision);
  if (x > 1) {
    // arctan x = pi/2 - arctan(1/x)
    return interval_sub(pi_over_2(precision),
                        arctan_point_impl(1 / x, precision), work);
  }
  if (2 * x > 1) {
    // One halving: arctan x = 2 arctan(x / (1 + sqrt(1 + x^2))).
    const Interval s = interval_sqrt(
        Interval::from_rational(1 + x * x, work), work);
    const Interval denom =
        interval_add(Interval(Dyadic::one()), s, work);
    const Interval t =
        interval_div(Interval::from_rational(x, work), denom, work);
    // t is a narrow interval inside [0, 1/2]; take the hull of the
    // series enclosures at its endpoints (arctan is monotone).
    const Interval at_lo = arctan_series(t.lo_q(), work);
    const Interval at_hi = arctan_series(t.hi_q(), work);
    const Interval at = Interval(at_lo.lo(), at_hi.hi());
    return interval_add(at, at, work);
  }
  return arctan_series(x, precision);
}

Interval pi_enclosure(unsigned precision) {
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  const unsigned work = precision + 12;
  const Interval a = arctan_series(Rational(1, 5), work);
  const Interval b = arctan_series(Rational(1, 239), work);
  const Interval a16 =
      interval_mul(Interval(Dyadic(16)), a, work);
  const Interval b4 = interval_mul(Interval(Dyadic(4)), b, work);
  return interval_sub(a16, b4, work);
}

Interval pi_over_2(unsigned precision) {
  const Interval pi = pi_enclosure(precision + 2);
  return Interval(pi.lo().ldexp(-1), pi.hi().ldexp(-1));
}

}  // namespace

Interval arctan_point(const Rational& x, unsigned precision) {
  const Interval raw = arctan_point_impl(x, precision);
  return Interval(raw.lo().round_down(precision + 4),
                  raw.hi().round_up(precision + 4));
}

Interval interval_arctan(const Interval& a, unsigned precision) {
  if (a.is_point()) {
    return arctan_point(a.lo_q(), precision);
  }
  const Interval at_lo = arctan_point(a.lo_q(), precision);
  const Interval at_hi = arctan_point(a.hi_q(), precision);
  return Interval(at_lo.lo(), at_hi.hi());
}

namespace detail {
Interval pi_enclosure_for_constants(unsigned precision) {
  return pi_enclosure(precision);
}
}  // namespace detail

}  // namespace rigorkit
