#include "makespan/rational.hpp"

#include "makespan/errors.hpp"

#include <limits>

namespace makespan {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

BigInt floor_of(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;
  if (q * den != num && num < 0) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt q = num / den;
  if (q * den != num && num > 0) q += 1;
  return q;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorKind::NumericOverflow, "value exceeds 64 bits");
  }
  return v.convert_to<std::int64_t>();
}

std::size_t bit_size(const Rational& r) {
  const BigInt num = abs(numerator(r));
  const BigInt den = denominator(r);
  const std::size_t a = num == 0 ? 0 : msb(num) + 1;
  const std::size_t b = msb(den) + 1;
  return a > b ? a : b;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    fail(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
  }
}

}  // namespace makespan
