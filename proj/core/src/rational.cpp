#include "codimlab/rational.hpp"

#include <stdexcept>

namespace codimlab {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational r(num, den);
  mpq_canonicalize(r.backend().data());
  return r;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  std::size_t slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid_int(num) || !valid_int(den))
    throw std::invalid_argument("malformed rational literal: " + s);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Rational r(n, d);
  mpq_canonicalize(r.backend().data());
  return r;
}

std::string rational_text(const Rational& value) {
  return value.str();
}

}  // namespace codimlab
