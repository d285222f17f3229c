#include <qconv/partitions.hpp>

#include <stdexcept>

#include <qconv/arith.hpp>
#include <qconv/generators.hpp>

namespace qconv::parts {

Series p_r_series(int r, std::size_t order) {
    if (r == 0) throw std::domain_error("p_r_series: r must be nonzero");
    return product_expand({{{1, 0, -1, r}}}, order);
}

Series mu_series(std::size_t order) { return gen::build(gen::SeriesName::mu, order); }

Series nu_series(std::size_t order) { return gen::build(gen::SeriesName::nu, order); }

namespace {

std::int64_t residue(const Int& v, std::int64_t m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r.convert_to<std::int64_t>();
}

}  // namespace

std::vector<Violation> congruence_scan(const CongruenceClaim& claim) {
    if (claim.modulus < 2) throw std::domain_error("congruence_scan: modulus must be >= 2");
    std::vector<Violation> out;
    for (std::int64_t n = 1; n <= claim.limit; ++n) {
        if (claim.filter_b > 1 &&
            ((n % claim.filter_b) + claim.filter_b) % claim.filter_b != claim.filter_a)
            continue;
        const std::int64_t li = n + claim.lhs_offset;
        if (li < 0 || std::size_t(li) >= claim.lhs.size())
            throw std::out_of_range("congruence_scan: lhs sequence shorter than limit");
        const std::int64_t lr = residue(claim.lhs[std::size_t(li)], claim.modulus);
        std::int64_t rr = 0;
        if (!claim.rhs.empty()) {
            const std::int64_t ri = n + claim.rhs_offset;
            if (ri < 0 || std::size_t(ri) >= claim.rhs.size())
                throw std::out_of_range("congruence_scan: rhs sequence shorter than limit");
            rr = residue(claim.rhs[std::size_t(ri)], claim.modulus);
        }
        if (lr != rr) out.push_back({n, lr, rr});
    }
    return out;
}

CongruenceClaim mu_claim(std::int64_t limit) {
    CongruenceClaim c;
    c.name = "mu(3n-1) == 0 (mod 3)";
    c.lhs = mu_series(std::size_t(limit)).coeffs();
    c.modulus = 3;
    c.filter_a = 2;  // indices of the form 3k - 1
    c.filter_b = 3;
    c.limit = limit;
    return c;
}

CongruenceClaim nu_claim(std::int64_t limit) {
    CongruenceClaim c;
    c.name = "nu(n-1) == wt_3(n) (mod 3)";
    c.lhs = nu_series(std::size_t(limit)).coeffs();
    c.lhs_offset = -1;
    auto wt3 = arith::sieve(arith::DivisorKind(arith::Family::wt, 3), std::size_t(limit));
    c.rhs = wt3.raw();
    c.modulus = 3;
    c.limit = limit;
    return c;
}

namespace {

// Items are (value, color) pairs ordered by value then color; subsets of
// items with pairwise-distinct pairs and value sum n are exactly the
// r-colored partitions into distinct parts.
void enumerate(unsigned idx, unsigned remaining, unsigned parts, unsigned r,
               const std::vector<unsigned>& values, Int& even_count, Int& odd_count) {
    if (remaining == 0) {
        (parts % 2 == 0 ? even_count : odd_count) += 1;
        return;
    }
    for (unsigned i = idx; i < values.size(); ++i) {
        if (values[i] > remaining) break;  // values sorted ascending
        enumerate(i + 1, remaining - values[i], parts + 1, r, values, even_count,
                  odd_count);
    }
}

}  // namespace

std::pair<Int, Int> parity_count_oracle(unsigned r, unsigned n) {
    if (n > 20 || r < 1 || r > 3)
        throw std::domain_error("parity_count_oracle: bounds are n <= 20, 1 <= r <= 3");
    // flatten (value, color) items, sorted by value
    std::vector<unsigned> values;
    for (unsigned v = 1; v <= n; ++v)
        for (unsigned c = 0; c < r; ++c) values.push_back(v);
    Int even_count{0}, odd_count{0};
    enumerate(0, n, 0, r, values, even_count, odd_count);
    return {even_count, odd_count};
}

ident::VerificationOutcome check_nu_convolution(std::int64_t max_n) {
    const Series nu = nu_series(std::size_t(max_n));
    const arith::DivisorKind wh1(arith::Family::wh, 1), wt3k(arith::Family::wt, 3);
    const auto wh = arith::sieve(wh1, std::size_t(max_n));
    const auto wt3 = arith::sieve(wt3k, std::size_t(max_n));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const Rat conv = arith::convolution(wh, wh, arith::ConvShape::plain, n);
        const Rat lhs = Rat(4) * Rat(nu[std::size_t(n - 1)]);
        const Rat rhs = Rat(3 * wh.at(n) + wt3.at(n)) + Rat(36) * conv;
        if (lhs != rhs)
            return {false, std::size_t(max_n), ident::FirstFailure{n, lhs, rhs}};
    }
    return {true, std::size_t(max_n), std::nullopt};
}

}  // namespace qconv::parts
