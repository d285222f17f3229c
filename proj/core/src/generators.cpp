#include <qconv/generators.hpp>

#include <stdexcept>
#include <unordered_map>

#include <qconv/arith.hpp>

namespace qconv::gen {

namespace {

using arith::DivisorKind;
using arith::Family;

// 1 + c * sum_{n>=1} f(n) q^n from a sieve.
Series from_sieve(Family family, int s, const Int& c, std::size_t order) {
    Series r = Series::constant(1, order);
    if (order >= 1) {
        auto table = arith::sieve(DivisorKind(family, s), order);
        for (std::size_t n = 1; n <= order; ++n) r.at(n) = c * table.at(std::int64_t(n));
    }
    return r;
}

Series theta_phi(std::size_t order) {
    Series r = Series::constant(1, order);
    for (std::size_t n = 1; n * n <= order; ++n) r.at(n * n) = 2;
    return r;
}

Series theta_psi(std::size_t order) {
    Series r(order);
    for (std::size_t n = 0;; ++n) {
        const std::size_t t = n * (n + 1) / 2;
        if (t > order) break;
        r.at(t) = 1;
    }
    return r;
}

Series theta_f_neg(std::size_t order) {
    Series r(order);
    // pentagonal exponents k(3k+1)/2 over all integers k, sign (-1)^k
    for (long long k = 0;; ++k) {
        const long long e1 = k * (3 * k + 1) / 2;
        const long long e2 = k * (3 * k - 1) / 2;
        if (e2 > (long long)order && k > 0) break;
        const Int sgn = (k % 2 == 0) ? 1 : -1;
        if (e1 <= (long long)order) r.at(std::size_t(e1)) += sgn;
        if (k > 0 && e2 <= (long long)order) r.at(std::size_t(e2)) += sgn;
        if (e1 > (long long)order && e2 > (long long)order) break;
    }
    return r;
}

// sum_{n>=1} f(n) q^n restricted to n == r (mod 2); the n=0 term is 0
// (wt_s(0) and wh_s(0) are taken as 0).
Series parity_series(Family family, int s, int parity, std::size_t order) {
    Series full(order);
    if (order >= 1) {
        auto table = arith::sieve(DivisorKind(family, s), order);
        for (std::size_t n = 1; n <= order; ++n) full.at(n) = table.at(std::int64_t(n));
    }
    return parity_part(full, parity);
}

Series mu_product(std::size_t order) {
    return product_expand({{{1, 0, -1, 8}, {2, 0, -1, 8}}}, order);
}

Series nu_product(std::size_t order) {
    return product_expand({{{2, 0, -1, 8}, {1, 0, +1, 8}}}, order);
}

Series build_defining(SeriesName name, std::size_t order) {
    switch (name) {
        case SeriesName::P: return from_sieve(Family::sigma, 1, -24, order);
        case SeriesName::Q: return from_sieve(Family::sigma, 3, 240, order);
        case SeriesName::R: return from_sieve(Family::sigma, 5, -504, order);
        case SeriesName::GP: return from_sieve(Family::wt, 1, 8, order);
        case SeriesName::GE: return from_sieve(Family::wh, 1, 24, order);
        case SeriesName::GQ: return from_sieve(Family::wt, 3, -16, order);
        case SeriesName::wt5_series: return from_sieve(Family::wt, 5, 8, order);
        case SeriesName::phi: return theta_phi(order);
        case SeriesName::psi: return theta_psi(order);
        case SeriesName::f_neg: return theta_f_neg(order);
        case SeriesName::GP02: return parity_series(Family::wt, 1, 0, order);
        case SeriesName::GP12: return parity_series(Family::wt, 1, 1, order);
        case SeriesName::GE02: return parity_series(Family::wh, 1, 0, order);
        case SeriesName::GE12: return parity_series(Family::wh, 1, 1, order);
        case SeriesName::GQ02: return parity_series(Family::wt, 3, 0, order);
        case SeriesName::GQ12: return parity_series(Family::wt, 3, 1, order);
        case SeriesName::qmono: return Series::monomial_q(order);
        case SeriesName::mu: return mu_product(order);
        case SeriesName::nu: return nu_product(order);
    }
    throw std::logic_error("build: unknown series name");
}

Series lambert_sigma(int s, std::size_t order) {
    return lambert_expand({LambertWeight::Family::d_power, s, LambertWeight::Stride::single},
                          order);
}

Series lambert_alt(int s, std::size_t order) {
    return lambert_expand(
        {LambertWeight::Family::alt_d_power, s, LambertWeight::Stride::single}, order);
}

// Independent reconstruction used by BuildMode::checked.
Series build_cross(SeriesName name, std::size_t order) {
    const Series one = Series::constant(1, order);
    switch (name) {
        case SeriesName::P: return one - Int{24} * lambert_sigma(1, order);
        case SeriesName::Q: return one + Int{240} * lambert_sigma(3, order);
        case SeriesName::R: return one - Int{504} * lambert_sigma(5, order);
        case SeriesName::GP: return one + Int{8} * lambert_alt(1, order);
        case SeriesName::GQ: return one - Int{16} * lambert_alt(3, order);
        case SeriesName::wt5_series: return one + Int{8} * lambert_alt(5, order);
        case SeriesName::GE: {
            // wh(n) = sigma(n) - 2 sigma(n/2)
            Series s1 = lambert_sigma(1, order);
            return one + Int{24} * (s1 - Int{2} * dilate(s1, 2));
        }
        // Jacobi triple product forms
        case SeriesName::phi:
            return product_expand(
                {{{2, -1, +1, 1}, {2, 0, -1, 1}, {2, -1, -1, -1}, {2, 0, +1, -1}}}, order);
        case SeriesName::psi:
            return product_expand({{{2, 0, -1, 1}, {2, -1, -1, -1}}}, order);
        case SeriesName::f_neg:
            return product_expand({{{1, 0, -1, 1}}}, order);
        default: break;
    }
    throw std::logic_error("build_cross: no cross path");
}

bool has_cross_path(SeriesName name) {
    switch (name) {
        case SeriesName::P:
        case SeriesName::Q:
        case SeriesName::R:
        case SeriesName::GP:
        case SeriesName::GE:
        case SeriesName::GQ:
        case SeriesName::wt5_series:
        case SeriesName::phi:
        case SeriesName::psi:
        case SeriesName::f_neg:
            return true;
        default:
            return false;
    }
}

}  // namespace

Series build(SeriesName name, std::size_t order, BuildMode mode) {
    Series s = build_defining(name, order);
    if (mode == BuildMode::checked && has_cross_path(name)) {
        if (!(s == build_cross(name, order)))
            throw std::logic_error(std::string("build: cross-check mismatch for ") +
                                   name_str(name));
    }
    return s;
}

Series rep_series(RepKind kind, unsigned s, std::size_t order) {
    if (s < 1) throw std::domain_error("rep_series: s must be >= 1");
    return power(build(kind == RepKind::squares ? SeriesName::phi : SeriesName::psi, order),
                 s);
}

const char* name_str(SeriesName name) {
    switch (name) {
        case SeriesName::P: return "P";
        case SeriesName::Q: return "Q";
        case SeriesName::R: return "R";
        case SeriesName::GP: return "GP";
        case SeriesName::GE: return "GE";
        case SeriesName::GQ: return "GQ";
        case SeriesName::phi: return "phi";
        case SeriesName::psi: return "psi";
        case SeriesName::f_neg: return "f";
        case SeriesName::GP02: return "GP02";
        case SeriesName::GP12: return "GP12";
        case SeriesName::GE02: return "GE02";
        case SeriesName::GE12: return "GE12";
        case SeriesName::GQ02: return "GQ02";
        case SeriesName::GQ12: return "GQ12";
        case SeriesName::wt5_series: return "wt5";
        case SeriesName::qmono: return "q";
        case SeriesName::mu: return "mu";
        case SeriesName::nu: return "nu";
    }
    return "?";
}

bool lookup_name(const std::string& text, SeriesName& out) {
    static const std::unordered_map<std::string, SeriesName> table = {
        {"P", SeriesName::P},       {"Q", SeriesName::Q},       {"R", SeriesName::R},
        {"GP", SeriesName::GP},     {"GE", SeriesName::GE},     {"GQ", SeriesName::GQ},
        {"phi", SeriesName::phi},   {"psi", SeriesName::psi},   {"f", SeriesName::f_neg},
        {"GP02", SeriesName::GP02}, {"GP12", SeriesName::GP12}, {"GE02", SeriesName::GE02},
        {"GE12", SeriesName::GE12}, {"GQ02", SeriesName::GQ02}, {"GQ12", SeriesName::GQ12},
        {"wt5", SeriesName::wt5_series}, {"q", SeriesName::qmono},
        {"mu", SeriesName::mu},     {"nu", SeriesName::nu},
    };
    auto it = table.find(text);
    if (it == table.end()) return false;
    out = it->second;
    return true;
}

}  // namespace qconv::gen
