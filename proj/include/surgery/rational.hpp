#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace surgery {

/// Exact rational arithmetic for every distance and weight in the toolkit.
/// Values are kept in canonical reduced form by the backing type, so
/// equality and ordering are exact and reproducible.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders a rational as reduced "p/q", or plain "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Floor of a rational, exact (rounds toward minus infinity).
inline BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

/// (1/2)^k as an exact rational.
inline Rational inverse_power_of_two(unsigned k) {
  return Rational(1, BigInt(1) << k);
}

/// True when b/a is an integer, i.e. a divides b.
inline bool divides(const Rational& a, const Rational& b) {
  if (a == 0) return b == 0;
  return denominator(Rational(b / a)) == 1;
}

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

/// Parses "p/q", an integer, or a finite decimal literal ("1.25", ".5",
/// "-3"). Decimals convert exactly; anything else (including a zero
/// denominator) throws std::invalid_argument. There is no rounding path.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  const size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return fail();
  s = s.substr(b, s.find_last_not_of(" \t") - b + 1);
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  Rational value;
  if (const size_t slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (const size_t dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) return fail();
    if (!ip.empty() && !detail::all_digits(ip)) return fail();
    if (!fp.empty() && !detail::all_digits(fp)) return fail();
    value = ip.empty() ? Rational(0) : Rational(BigInt(std::string(ip)));
    if (!fp.empty()) {
      BigInt scale = 1;
      for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
      value += Rational(BigInt(std::string(fp)), scale);
    }
  } else {
    if (!detail::all_digits(s)) return fail();
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

/// Decimal rendering with the given number of significant digits (round
/// half up, trailing zeros stripped). A reading aid only; the exact
/// "p/q" string stays authoritative wherever both appear.
inline std::string decimal_string(const Rational& r, int significant = 12) {
  if (significant < 1) significant = 1;
  if (r == 0) return "0";
  const BigInt n = abs(numerator(r));
  const BigInt d = abs(denominator(r));
  int frac_digits = 0;
  if (const BigInt ip = n / d; ip > 0) {
    const int int_digits = static_cast<int>(ip.str().size());
    frac_digits = significant > int_digits ? significant - int_digits : 0;
  } else {
    int zeros = 0;
    BigInt scaled = n * 10;
    while (scaled < d) {
      ++zeros;
      scaled *= 10;
    }
    frac_digits = zeros + significant;
  }
  BigInt pow10 = 1;
  for (int i = 0; i < frac_digits; ++i) pow10 *= 10;
  const BigInt rounded = (n * pow10 * 2 + d) / (2 * d);
  std::string digits = rounded.str();
  std::string out;
  if (frac_digits == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= frac_digits)
      digits.insert(0, static_cast<size_t>(frac_digits) + 1 - digits.size(), '0');
    out = digits.substr(0, digits.size() - frac_digits) + "." +
          digits.substr(digits.size() - frac_digits);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (r < 0) out.insert(out.begin(), '-');
  return out;
}

}  // namespace surgery
