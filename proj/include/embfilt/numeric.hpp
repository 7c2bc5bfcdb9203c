#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace embfilt {

// Exponents, weights and valuation values are machine integers; series
// coefficients and elimination entries are exact arbitrary-precision numbers.
using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "p" or "p/q", canonical sign on the numerator.
std::string to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

// Narrowing with a range check; internal geometry runs on BigInt.
Int to_int(const BigInt& value);

} // namespace embfilt
