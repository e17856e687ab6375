#ifndef NFLAB_RATIONAL_HPP
#define NFLAB_RATIONAL_HPP

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "nflab/errors.hpp"

namespace nflab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Canonical wire form is "p/q" ("3/1", "-1/2"); bare integers are accepted
// on input for convenience.
Rational parse_rational(const std::string& text);

// Always emits the explicit "p/q" form used in JSON documents.
std::string rational_wire(const Rational& r);

// Compact human form: "3" instead of "3/1".
std::string rational_compact(const Rational& r);

double log10_bigint(const BigInt& n);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace nflab

#endif
