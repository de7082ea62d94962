#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lieons {

using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
  if (q == 0) throw std::domain_error("zero denominator");
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() == start) throw std::invalid_argument("bad rational: " + s);
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational: " + s);
  };
  std::string num = s.substr(0, slash);
  check_int(num);
  mpz_class p(num[0] == '+' ? num.substr(1) : num);
  mpz_class q(1);
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    check_int(den);
    q = mpz_class(den[0] == '+' ? den.substr(1) : den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace lieons
