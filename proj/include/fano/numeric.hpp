#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fano {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Bad argument values (out-of-range parameters, malformed input).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or canonicalization exceeded its configured cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural invariant of an input object does not hold.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int factorial(long n);
Int binomial(long n, long k);
Int ipow(const Int& base, long exp);

}  // namespace fano
