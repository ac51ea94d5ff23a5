#pragma once

// Scalar types shared by every module: float64 for sweeps, exact rationals
// for the equality constructions. Everything downstream is templated on a
// `Scalar`, and the helpers here hide the differences between the two modes.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smalldev {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class NumericMode { rational, float64 };

/// Absolute tolerance for float-mode sum and mean checks. Rational mode is exact.
inline constexpr double kFloatTolerance = 1e-12;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

/// Input rejected because it violates a model invariant. `code()` is the
/// machine-readable name of the violated invariant.
class InputError : public std::invalid_argument {
 public:
  InputError(std::string code, const std::string& message)
      : std::invalid_argument(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

template <Scalar Num>
constexpr NumericMode mode_of() {
  if constexpr (std::same_as<Num, double>) {
    return NumericMode::float64;
  } else {
    return NumericMode::rational;
  }
}

template <Scalar Num>
constexpr bool is_exact() {
  return mode_of<Num>() == NumericMode::rational;
}

inline std::string_view mode_name(NumericMode mode) {
  return mode == NumericMode::rational ? "rational" : "float";
}

inline NumericMode parse_mode(std::string_view name) {
  if (name == "rational") return NumericMode::rational;
  if (name == "float" || name == "float64") return NumericMode::float64;
  throw InputError("unknown-mode", "mode must be 'rational' or 'float', got '" +
                                       std::string(name) + "'");
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Finite check; rationals are always finite.
inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Rational&) { return true; }

/// Mode-appropriate equality: exact for rationals, |a-b| <= tol for floats.
inline bool same_value(double a, double b, double tol = kFloatTolerance) {
  return std::abs(a - b) <= tol;
}
inline bool same_value(const Rational& a, const Rational& b, double = 0.0) {
  return a == b;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline BigInt pow10(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("bad-number", "empty integer in '" + std::string(whole) + "'");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw InputError("bad-number", "malformed number '" + std::string(whole) + "'");
  BigInt r = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw InputError("bad-number", "malformed number '" + std::string(whole) + "'");
    }
    r = r * 10 + (c - '0');
  }
  return negative ? BigInt(-r) : r;
}

// Decimal literal (optionally with exponent) converted without rounding.
inline Rational parse_decimal_exact(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt ex = parse_integer(s.substr(e + 1), whole);
    if (ex > 4096 || ex < -4096) throw InputError("bad-number", "exponent out of range");
    exponent = ex.convert_to<long>();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw InputError("bad-number", "malformed number '" + std::string(whole) + "'");
    }
  }
  if (digits.empty()) throw InputError("bad-number", "malformed number '" + std::string(whole) + "'");
  Rational value(parse_integer(digits, whole));
  const long shift = exponent - frac_digits;
  if (shift >= 0) {
    value *= Rational(pow10(static_cast<unsigned>(shift)));
  } else {
    value /= Rational(pow10(static_cast<unsigned>(-shift)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal. Rational results are exact.
template <Scalar Num>
Num parse_number(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.empty()) throw InputError("bad-number", "empty number");
  const auto slash = s.find('/');
  if constexpr (std::same_as<Num, Rational>) {
    if (slash != std::string_view::npos) {
      const BigInt p = detail::parse_integer(detail::trim(s.substr(0, slash)), s);
      const BigInt q = detail::parse_integer(detail::trim(s.substr(slash + 1)), s);
      if (q == 0) throw InputError("bad-number", "zero denominator in '" + std::string(s) + "'");
      return Rational(p, q);
    }
    return detail::parse_decimal_exact(s, s);
  } else {
    if (slash != std::string_view::npos) {
      const double p = parse_number<double>(s.substr(0, slash));
      const double q = parse_number<double>(s.substr(slash + 1));
      if (q == 0.0) throw InputError("bad-number", "zero denominator in '" + std::string(s) + "'");
      return p / q;
    }
    const std::string buf(s);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(buf, &used);
    } catch (const std::exception&) {
      throw InputError("bad-number", "malformed number '" + buf + "'");
    }
    if (used != buf.size()) throw InputError("bad-number", "malformed number '" + buf + "'");
    if (!std::isfinite(value)) throw InputError("non-finite", "number '" + buf + "' is not finite");
    return value;
  }
}

/// "p/q" for rationals (always with a denominator), shortest round-trip form for doubles.
inline std::string format_number(const Rational& x) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(x) << '/' << boost::multiprecision::denominator(x);
  return os.str();
}

inline std::string format_number(double x) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << x;
  return os.str();
}

template <Scalar Num>
Num from_double(double x) {
  if constexpr (std::same_as<Num, double>) {
    return x;
  } else {
    return Rational(x);
  }
}

}  // namespace smalldev
