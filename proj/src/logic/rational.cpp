#include "claimlogic/logic/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace claimlogic::logic {

std::optional<Rational> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  long long integer = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    integer = integer * 10 + (text[i] - '0');
    any_digit = true;
  }
  long long num = integer;
  long long den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    bool any_frac = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      num = num * 10 + (text[i] - '0');
      den *= 10;
      any_frac = true;
    }
    if (!any_frac) return std::nullopt;
    any_digit = true;
  }
  if (!any_digit || i != text.size()) return std::nullopt;
  Rational r(num, den);
  return negative ? -r : r;
}

bool has_finite_decimal(const Rational& r) {
  long long d = r.denominator();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

std::string decimal_string(const Rational& r) {
  long long num = r.numerator();
  long long den = r.denominator();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  if (den == 1) return sign + std::to_string(num);
  // Scale denominator to a power of ten, then place the decimal point.
  int twos = 0, fives = 0;
  long long d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return display_string(r);  // no finite expansion; diagnostic form
  int digits = twos > fives ? twos : fives;
  for (int i = twos; i < digits; ++i) num *= 2;
  for (int i = fives; i < digits; ++i) num *= 5;
  std::string s = std::to_string(num);
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return sign + s;
}

std::string display_string(const Rational& r) {
  if (has_finite_decimal(r)) return decimal_string(r);
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace claimlogic::logic
