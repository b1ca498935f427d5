#include "urprior/numerics.hpp"

#include <cctype>

namespace urprior {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("not an exact rational literal: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    const Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    value = Rational(Integer(std::string(num)), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad_literal(text);
    std::string digits(whole);
    digits += frac;
    Integer scale(1);
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(Integer(digits), scale);
  } else {
    if (!all_digits(s)) bad_literal(text);
    value = Rational(Integer(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.str(); }

Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

VectorQ to_primitive_integer(const VectorQ& v) {
  Integer common_den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) common_den = boost::multiprecision::lcm(common_den, denominator(v(i)));

  std::vector<Integer> ints(static_cast<std::size_t>(v.size()));
  Integer g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational scaled = v(i) * Rational(common_den);
    ints[static_cast<std::size_t>(i)] = numerator(scaled);
    g = boost::multiprecision::gcd(g, ints[static_cast<std::size_t>(i)]);
  }
  if (g == 0) return v;

  Integer sign(1);
  for (const auto& x : ints) {
    if (x != 0) {
      sign = x < 0 ? Integer(-1) : Integer(1);
      break;
    }
  }
  VectorQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(ints[static_cast<std::size_t>(i)] / g * sign);
  return out;
}

}  // namespace urprior
