#include "pivotlab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "pivotlab/errors.hpp"

namespace pivotlab {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad(std::string_view text) {
  throw FormatError(0, "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad(text);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) bad(text);
    q.canonicalize();
    return q;
  }

  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = rest.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) bad(text);
    rest = rest.substr(0, e);
  }

  std::string digits;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = rest.substr(0, dot);
    const std::string_view frac = rest.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(rest)) bad(text);
    digits = std::string(rest);
  }

  mpz_class numerator(digits, 10);
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(numerator * ten_power) : Rational(numerator, ten_power);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Rational to_rational(double value) {
  if (!std::isfinite(value)) {
    throw FormatError(0, "non-finite value has no rational form");
  }
  return Rational(value);
}

double to_double(const Rational& q) { return q.get_d(); }

std::size_t bit_size(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

}  // namespace pivotlab
