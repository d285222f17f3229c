#include <qconv/series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qconv {

Series::Series(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {
    if (coeffs_.empty()) coeffs_.assign(1, Int{0});
}

Series::Series(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, Int{0});
}

Series Series::constant(Int value, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = std::move(value);
    return s;
}

Series Series::monomial_q(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

Series Series::truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    Series s(order);
    std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
    return s;
}

bool operator==(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Series& Series::operator+=(const Series& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Int& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }

Series operator-(Series a) {
    for (std::size_t i = 0; i <= a.order(); ++i) a.at(i) = -a[i];
    return a;
}

Series operator*(Series a, const Int& scalar) { return a *= scalar; }
Series operator*(const Int& scalar, Series a) { return a *= scalar; }

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j] == 0) continue;
            r.at(i + j) += a[i] * b[j];
        }
    }
    return r;
}

Series power(const Series& a, unsigned e) {
    Series r = Series::constant(1, a.order());
    Series base = a;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Series reciprocal(const Series& a) {
    if (a[0] != 1 && a[0] != -1)
        throw std::domain_error("reciprocal: constant term must be +-1");
    const std::size_t n = a.order();
    Series b(n);
    b.at(0) = a[0];  // 1/(+-1)
    for (std::size_t m = 1; m <= n; ++m) {
        Int acc{0};
        for (std::size_t k = 1; k <= m; ++k) {
            if (a[k] == 0) continue;
            acc += a[k] * b[m - k];
        }
        b.at(m) = -a[0] * acc;
    }
    return b;
}

Series theta_derivative(const Series& a) {
    Series r(a.order());
    for (std::size_t i = 1; i <= a.order(); ++i) r.at(i) = Int(i) * a[i];
    return r;
}

Series dilate(const Series& a, unsigned k) {
    if (k < 1) throw std::domain_error("dilate: k must be >= 1");
    Series r(a.order());
    for (std::size_t i = 0; i * k <= a.order(); ++i) r.at(i * k) = a[i];
    return r;
}

Series alternate(const Series& a) {
    Series r = a;
    for (std::size_t i = 1; i <= r.order(); i += 2) r.at(i) = -r[i];
    return r;
}

Series parity_part(const Series& a, int r) {
    if (r != 0 && r != 1) throw std::domain_error("parity_part: r must be 0 or 1");
    Series out(a.order());
    for (std::size_t i = std::size_t(r); i <= a.order(); i += 2) out.at(i) = a[i];
    return out;
}

namespace {

// Binomial coefficient C(e, i) for arbitrary integer e (generalized,
// always an integer): e(e-1)...(e-i+1)/i!.
Int gen_binomial(long long e, unsigned i) {
    Int num{1};
    for (unsigned k = 0; k < i; ++k) num *= Int(e) - Int(k);
    Int den{1};
    for (unsigned k = 2; k <= i; ++k) den *= Int(k);
    return num / den;
}

// Multiply acc by (1 + sign*q^m)^e, all truncated at acc's order.  The
// factor is sparse (support on multiples of m), so the product costs
// O(N * N/m).
void mul_binomial_factor(Series& acc, std::size_t m, int sign, long long e) {
    const std::size_t n = acc.order();
    const unsigned terms = unsigned(n / m);  // i ranges 0..terms
    std::vector<Int> c(terms + 1);
    for (unsigned i = 0; i <= terms; ++i) {
        c[i] = gen_binomial(e, i);
        if (sign < 0 && (i % 2 == 1)) c[i] = -c[i];
    }
    Series r(n);
    for (std::size_t t = 0; t <= n; ++t) {
        Int acc_t{0};
        for (unsigned i = 0; i <= terms && i * m <= t; ++i) {
            if (c[i] == 0) continue;
            acc_t += c[i] * acc[t - i * m];
        }
        r.at(t) = std::move(acc_t);
    }
    acc = std::move(r);
}

}  // namespace

Series product_expand(const ProductSpec& spec, std::size_t order) {
    Series acc = Series::constant(1, order);
    for (const auto& f : spec.factors) {
        if (f.stride < 1 || int(f.stride) + f.offset < 1)
            throw std::domain_error("product_expand: factor must have positive q-exponent");
        if (f.sign != 1 && f.sign != -1)
            throw std::domain_error("product_expand: sign must be +-1");
        if (f.exponent == 0)
            throw std::domain_error("product_expand: exponent must be nonzero");
        for (std::size_t n = 1;; ++n) {
            const long long m = (long long)f.stride * (long long)n + f.offset;
            if (m > (long long)order) break;
            mul_binomial_factor(acc, std::size_t(m), f.sign, f.exponent);
        }
    }
    return acc;
}

Series lambert_expand(const LambertWeight& w, std::size_t order) {
    if (w.s <= 0) throw std::domain_error("lambert_expand: s must be >= 1");
    const unsigned k = (w.stride == LambertWeight::Stride::single) ? 1 : 2;
    Series r(order);
    for (std::size_t d = 1; d <= order; ++d) {
        Int wd = int_pow(Int{d}, unsigned(w.s));
        if (w.family == LambertWeight::Family::alt_d_power && d % 2 == 0) wd = -wd;
        // q^d / (1 - q^(k d)) contributes at exponents d(1 + j k), j >= 0
        for (std::size_t m = d; m <= order; m += k * d) r.at(m) += wd;
    }
    return r;
}

std::string Series::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace qconv
