#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace definetti {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when an input exceeds one of the desk-scale enumeration guards.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// n! / prod(parts[i]!) with sum(parts) == n.
Int multinomial(unsigned n, const std::vector<int>& parts);

/// base^exp with the convention 0^0 == 1.
Int int_pow(const Int& base, unsigned exp);

/// Parses "p/q" or "p" (sign on the numerator). Throws std::invalid_argument.
Rat parse_rational(const std::string& text);

/// Lowest terms, "p/q" or plain "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

double rat_to_double(const Rat& value);

} // namespace definetti
