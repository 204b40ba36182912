#include "rbt/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rbt {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto bad = [&]() { throw std::invalid_argument("malformed rational: '" + s + "'"); };
  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size()) bad();
  auto digits = [&](std::string& out) {
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
  };
  std::string ip;
  digits(ip);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::string qs;
    digits(qs);
    if (ip.empty() || qs.empty() || pos != s.size()) bad();
    Int q(qs);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat r(Int(ip), q);
    return neg ? -r : r;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::string fp;
    digits(fp);
    if ((ip.empty() && fp.empty()) || pos != s.size()) bad();
    Int num = ip.empty() ? Int(0) : Int(ip);
    Int den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rat r(num, den);
    return neg ? -r : r;
  }
  if (ip.empty() || pos != s.size()) bad();
  Rat r((Int(ip)));
  return neg ? -r : r;
}

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  if (denominator(r) == 1)
    os << numerator(r);
  else
    os << numerator(r) << "/" << denominator(r);
  return os.str();
}

std::string rat_decimal(const Rat& r, int places) {
  Int num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half away from zero
  Int scaled = (num * scale * 2 + den) / (den * 2);
  Int ip = scaled / scale, fp = scaled % scale;
  std::ostringstream os;
  if (neg && (ip != 0 || fp != 0)) os << '-';
  os << ip;
  if (places > 0) {
    std::string f = fp.str();
    os << '.' << std::string(places - f.size(), '0') << f;
  }
  return os.str();
}

std::string rat_report(const Rat& r, int places) {
  return rat_string(r) + " (~" + rat_decimal(r, places) + ")";
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace rbt
