#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace invseq_lab {

using Int = boost::multiprecision::cpp_int;

// Division that must leave no remainder. Every division in this library is
// exact by a counting argument, so a remainder means a bug and aborts loudly.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("exact_div: zero divisor");
    Int q = num / den;
    if (q * den != num) throw std::domain_error("exact_div: inexact division");
    return q;
}

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace invseq_lab
