#ifndef QCONV_NUMERIC_HPP
#define QCONV_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace qconv {

// Exact coefficient arithmetic. Everything downstream of the sieves is
// integral; rationals appear only where identities carry fractional
// scalars (1/3, 1/16, ...).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned e) {
    Int r{1};
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

}  // namespace qconv

#endif
