#include "envymin/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <limits>

namespace envymin {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix; decimal
// literals like "00390625" need the zeros stripped first.
BigInt from_digits(const std::string& s) {
  std::size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return BigInt(0);
  return BigInt(s.substr(first));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw input_error("empty rational literal: '" + text + "'");

  Rational r;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw input_error("bad rational literal: '" + text + "'");
    BigInt num = from_digits(p), den = from_digits(q);
    if (den == 0) throw input_error("zero denominator: '" + text + "'");
    r = Rational(num, den);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp)) throw input_error("bad decimal literal: '" + text + "'");
    BigInt pow10 = 1;
    for (size_t i = 0; i < fp.size(); ++i) pow10 *= 10;
    r = Rational(from_digits(ip) * pow10 + from_digits(fp), pow10);
  } else {
    if (!all_digits(s)) throw input_error("bad rational literal: '" + text + "'");
    r = Rational(from_digits(s));
  }
  return neg ? Rational(-r) : r;
}

std::string format_rational(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

std::string format_decimal6(const Rational& x) {
  BigInt num = numerator(x), den = denominator(x);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt ip = num / den;
  BigInt rem = num % den;
  BigInt frac = rem * 1000000 / den;
  std::string f = frac.str();
  f.insert(f.begin(), 6 - f.size(), '0');
  return (neg ? "-" : "") + ip.str() + "." + f;
}

std::vector<BigInt> scale_to_bigint(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, BigInt(denominator(v)));
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (const auto& v : values)
    out.push_back(BigInt(numerator(v)) * (l / BigInt(denominator(v))));
  return out;
}

std::optional<std::vector<std::int64_t>> scale_to_int64(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, BigInt(denominator(v)));
  const std::size_t n = values.size();
  BigInt bound = (BigInt(1) << 62) / (BigInt(n) * BigInt(n) + 1);
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (const auto& v : values) {
    BigInt scaled = BigInt(numerator(v)) * (l / BigInt(denominator(v)));
    if (boost::multiprecision::abs(scaled) > bound) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(scaled));
  }
  return out;
}

}  // namespace envymin
