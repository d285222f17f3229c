#include <qconv/arith.hpp>

#include <stdexcept>

namespace qconv::arith {

const Int DivisorTable::kZero{0};

DivisorKind::DivisorKind(Family f, int s_) : family(f), s(s_) {
    if (s_ <= 0) throw std::domain_error("DivisorKind: exponent s must be >= 1");
}

namespace {

// Sign applied to the term d^s for divisor d of n.
inline int term_sign(Family family, std::int64_t d, std::int64_t codiv) {
    switch (family) {
        case Family::sigma: return 1;
        case Family::wt: return (d % 2 == 1) ? 1 : -1;        // (-1)^(d-1)
        case Family::wh: return (codiv % 2 == 1) ? 1 : -1;    // (-1)^(n/d-1)
    }
    return 1;
}

}  // namespace

Int point_eval(DivisorKind kind, std::int64_t n) {
    if (n <= 0) return Int{0};  // non-positive arguments are 0 by convention
    Int acc{0};
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const std::int64_t e = n / d;
        acc += Int{term_sign(kind.family, d, e)} * int_pow(Int{d}, unsigned(kind.s));
        if (e != d)
            acc += Int{term_sign(kind.family, e, d)} * int_pow(Int{e}, unsigned(kind.s));
    }
    return acc;
}

DivisorTable::DivisorTable(DivisorKind kind, std::vector<Int> values)
    : kind_(kind), values_(std::move(values)) {
    if (values_.empty() || values_[0] != 0)
        throw std::invalid_argument("DivisorTable: values must start with a zero slot");
}

const Int& DivisorTable::at(std::int64_t n) const {
    if (n <= 0) return kZero;
    if (std::size_t(n) >= values_.size())
        throw std::out_of_range("DivisorTable: index past sieve limit");
    return values_[std::size_t(n)];
}

const Int& DivisorTable::at_half(std::int64_t n) const {
    if (n % 2 != 0) return kZero;
    return at(n / 2);
}

DivisorTable sieve(DivisorKind kind, std::size_t limit) {
    if (limit < 1) throw std::domain_error("sieve: limit must be >= 1");
    if (limit > kMaxSieveLimit) throw std::length_error("sieve: limit exceeds capacity");
    std::vector<Int> v(limit + 1);
    for (std::size_t d = 1; d <= limit; ++d) {
        const Int ds = int_pow(Int{d}, unsigned(kind.s));
        if (kind.family == Family::wh) {
            // sign flips with the multiple index j = n/d
            int sgn = 1;
            for (std::size_t m = d; m <= limit; m += d, sgn = -sgn)
                v[m] += (sgn > 0) ? ds : -ds;
        } else {
            const Int term =
                (kind.family == Family::wt && d % 2 == 0) ? Int{-ds} : ds;
            for (std::size_t m = d; m <= limit; m += d) v[m] += term;
        }
    }
    return DivisorTable(kind, std::move(v));
}

Rat convolution(const DivisorTable& f, const DivisorTable& g, ConvShape shape,
                std::int64_t n) {
    if (n <= 0) throw std::domain_error("convolution: n must be >= 1");
    Int acc{0};
    switch (shape) {
        case ConvShape::plain:
            for (std::int64_t m = 1; m < n; ++m) acc += f.at(m) * g.at(n - m);
            break;
        case ConvShape::dilated:
            for (std::int64_t m = 1; 2 * m < n; ++m) acc += f.at(m) * g.at(n - 2 * m);
            break;
        case ConvShape::even_arg:
            for (std::int64_t m = 1; 2 * m < n; ++m) acc += f.at(2 * m) * g.at(n - 2 * m);
            break;
        case ConvShape::odd_arg:
            for (std::int64_t m = 1; 2 * m - 1 < n; ++m)
                acc += f.at(2 * m - 1) * g.at(n - (2 * m - 1));
            break;
        case ConvShape::even_half:
            if (n % 2 != 0) break;  // g argument never an integer
            for (std::int64_t m = 1; 2 * m < n; ++m) acc += f.at(2 * m) * g.at(n / 2 - m);
            break;
        case ConvShape::odd_half:
            if (n % 2 != 1) break;
            for (std::int64_t m = 1; 2 * m - 1 < n; ++m)
                acc += f.at(2 * m - 1) * g.at((n + 1) / 2 - m);
            break;
    }
    return Rat(acc);
}

}  // namespace qconv::arith
