#include "fano/numeric.hpp"

namespace fano {

Int factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    Int acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Int binomial(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return acc;
}

Int ipow(const Int& base, long exp) {
    if (exp < 0) throw DomainError("ipow: negative exponent");
    Int acc = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

}  // namespace fano
