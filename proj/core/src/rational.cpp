#include "nflab/rational.hpp"

#include <boost/multiprecision/number.hpp>

namespace nflab {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational literal: " + text);
  }
}

std::string rational_wire(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_compact(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double log10_bigint(const BigInt& n) {
  if (n <= 0) throw Error("log10 of non-positive integer");
  return static_cast<double>(log10(BigFloat(n)));
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n + 1 - i;
    r /= i;
  }
  return r;
}

}  // namespace nflab
