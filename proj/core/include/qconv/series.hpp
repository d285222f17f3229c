#ifndef QCONV_SERIES_HPP
#define QCONV_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <qconv/numeric.hpp>

namespace qconv {

// Truncated formal power series in q over exact integers, coefficients
// a_0..a_order.  Binary operations truncate to the smaller order; this
// is the mathematical truncation semantics, not an error.
class Series {
public:
    Series() : coeffs_(1) {}
    explicit Series(std::size_t order) : coeffs_(order + 1) {}
    Series(std::initializer_list<Int> coeffs);
    explicit Series(std::vector<Int> coeffs);

    static Series constant(Int value, std::size_t order);
    // The monomial q, truncated at `order`.
    static Series monomial_q(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Int& operator[](std::size_t n) const { return coeffs_[n]; }
    Int& at(std::size_t n) { return coeffs_[n]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Series truncated(std::size_t order) const;

    friend bool operator==(const Series& a, const Series& b);

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Int& scalar);

    std::string str() const;

private:
    std::vector<Int> coeffs_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(Series a, const Int& scalar);
Series operator*(const Int& scalar, Series a);
Series operator*(const Series& a, const Series& b);  // Cauchy product

Series power(const Series& a, unsigned e);

// Multiplicative inverse to the truncation order; requires a_0 = +-1.
Series reciprocal(const Series& a);

// The operator q d/dq: a_n -> n * a_n.
Series theta_derivative(const Series& a);

// q -> q^k; indices beyond the order are dropped.
Series dilate(const Series& a, unsigned k);

// q -> -q.
Series alternate(const Series& a);

// Keep coefficients with index == r (mod 2), zero the rest.
Series parity_part(const Series& a, int r);

// One factor of an infinite product: (1 + sign*q^(stride*n+offset))^exponent
// over n >= 1.
struct ProductFactor {
    unsigned stride;   // a >= 1
    int offset;        // b, with a+b >= 1
    int sign;          // +1 or -1
    int exponent;      // any nonzero integer
};

struct ProductSpec {
    std::vector<ProductFactor> factors;
};

Series product_expand(const ProductSpec& spec, std::size_t order);

// Lambert-type expansions: sum over d >= 1 of w(d) * q^d / (1 - q^(k*d))
// where w(d) = d^s (d_power) or (-1)^(d-1) d^s (alt_d_power) and
// k = 1 (single) or 2 (double).
struct LambertWeight {
    enum class Family { d_power, alt_d_power };
    enum class Stride { single, double_ };
    Family family;
    int s;
    Stride stride;
};

Series lambert_expand(const LambertWeight& w, std::size_t order);

}  // namespace qconv

#endif
