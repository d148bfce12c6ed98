#include "rigorkit/constants.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rigorkit {

namespace detail {
Interval pi_enclosure_for_constants(unsigned precision);
}

namespace {

Interval compute(ConstantName name, unsigned precision) {
  const unsigned work = precision + 16;
  switch (name) {
    case ConstantName::kPi:
      return detail::pi_enclosure_for_constants(work);
    case ConstantName::kSqrt2: {
      const Interval two(Dyadic(2));
      return interval_sqrt(two, work);
    }
    case ConstantName::kAtanSqrt2Over5: {
      const Interval s = compute(ConstantName::kSqrt2, work);
      const Interval arg(Dyadic::from_rational_down(s.lo_q() / 5, work),
                         Dyadic::from_rational_up(s.hi_q() / 5, work));
      return interval_arctan(arg, work);
    }
    case ConstantName::kPt: {
      // pt = -pi/3 + 4 arctan(sqrt(2)/5)
      const Interval pi = compute(ConstantName::kPi, work);
      const Interval atn = compute(ConstantName::kAtanSqrt2Over5, work);
      const Interval third = interval_div(pi, Interval(Dyadic(3)), work);
      const Interval four_atn =
          interval_mul(Interval(Dyadic(4)), atn, work);
      return interval_sub(four_atn, third, work);
    }
    case ConstantName::kDeltaOct: {
      // delta_oct = (pi - 4 arctan(sqrt(2)/5)) / (2 sqrt(2))
      const Interval pi = compute(ConstantName::kPi, work);
      const Interval atn = compute(ConstantName::kAtanSqrt2Over5, work);
      const Interval num = interval_sub(
          pi, interval_mul(Interval(Dyadic(4)), atn, work), work);
      const Interval s2 = compute(ConstantName::kSqrt2, work);
      const Interval den = interval_mul(Interval(Dyadic(2)), s2, work);
      return interval_div(num, den, work);
    }
  }
  throw std::logic_error("unknown constant");
}

}  // namespace

Interval enclose_constant(ConstantName name, unsigned precision) {
  if (precision < 8) {
    throw std::invalid_argument("constant precision must be >= 8 bits");
  }
  static std::mutex mu;
  static std::map<std::pair<int, unsigned>, Interval> cache;
  const auto key = std::make_pair(static_cast<int>(name), precision);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Interval raw = compute(name, precision);
  Interval result(raw.lo().round_down(precision + 4),
                  raw.hi().round_up(precision + 4));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, result);
  return result;
}

const char* constant_name_string(ConstantName name) {
  switch (name) {
    case ConstantName::kPi: return "pi";
    case ConstantName::kSqrt2: return "sqrt2";
    case ConstantName::kAtanSqrt2Over5: return "atn";
    case ConstantName::kPt: return "pt";
    case ConstantName::kDeltaOct: return "doct";
  }
  return "?";
}

bool parse_constant_name(const std::string& text, ConstantName* out) {
  if (text == "pi") *out = ConstantName::kPi;
  else if (text == "sqrt2") *out = ConstantName::kSqrt2;
  else if (text == "atn" || text == "atan_sqrt2_over5")
    *out = ConstantName::kAtanSqrt2Over5;
  else if (text == "pt") *out = ConstantName::kPt;
  else if (text == "doct" || text == "delta_oct")
    *out = ConstantName::kDeltaOct;
  else return false;
  return true;
}

}  // namespace rigorkit
