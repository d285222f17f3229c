#ifndef QCONV_ARITH_HPP
#define QCONV_ARITH_HPP

#include <cstdint>
#include <vector>

#include <qconv/numeric.hpp>

namespace qconv::arith {

// Divisor-sum families: sigma_s(n) = sum d^s, and Glaisher's signed
// variants wt_s (sign (-1)^(d-1)) and wh_s (sign (-1)^(n/d-1)).
enum class Family { sigma, wt, wh };

struct DivisorKind {
    Family family;
    int s;

    DivisorKind(Family f, int s_);
};

// Convention throughout: a divisor function at a non-positive or
// non-integer argument (n/2 for odd n) is 0.
Int point_eval(DivisorKind kind, std::int64_t n);

inline constexpr std::size_t kMaxSieveLimit = 4'000'000;

class DivisorTable {
public:
    DivisorTable(DivisorKind kind, std::vector<Int> values);

    DivisorKind kind() const { return kind_; }
    std::size_t limit() const { return values_.size() - 1; }

    // f(n); 0 for n <= 0, throws std::out_of_range past the limit.
    const Int& at(std::int64_t n) const;
    // f(n/2): table value for even n, 0 for odd n.
    const Int& at_half(std::int64_t n) const;

    const std::vector<Int>& raw() const { return values_; }

private:
    DivisorKind kind_;
    std::vector<Int> values_;  // values_[0] == 0, values_[n] = f(n)
    static const Int kZero;
};

// Linear sieve: values[n] = point_eval(kind, n) for 1 <= n <= limit.
DivisorTable sieve(DivisorKind kind, std::size_t limit);

// Summation shapes for divisor-function convolution sums.
enum class ConvShape {
    plain,      // sum_{m<n}       f(m)    g(n-m)
    dilated,    // sum_{m<n/2}     f(m)    g(n-2m)
    even_arg,   // sum_{m<n/2}     f(2m)   g(n-2m)
    odd_arg,    // sum_{m<(n+1)/2} f(2m-1) g(n-(2m-1))
    even_half,  // sum_{m<n/2}     f(2m)   g(n/2-m)      (0 for odd n)
    odd_half,   // sum_{m<(n+1)/2} f(2m-1) g((n+1)/2-m)  (0 for even n)
};

// Exact value of the selected sum; empty ranges give 0.  Rational so
// that comparisons against RHS combinations with coefficients like 1/3
// stay exact.
Rat convolution(const DivisorTable& f, const DivisorTable& g, ConvShape shape,
                std::int64_t n);

}  // namespace qconv::arith

#endif
