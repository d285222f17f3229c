#ifndef QCONV_PARTITIONS_HPP
#define QCONV_PARTITIONS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <qconv/identity.hpp>
#include <qconv/series.hpp>

namespace qconv::parts {

// prod (1-q^n)^r; reciprocal route for negative r.  p_{-1}(n) = p(n).
Series p_r_series(int r, std::size_t order);

// prod (1-q^n)^8 (1-q^2n)^8
Series mu_series(std::size_t order);

// prod (1-q^2n)^8 (1+q^n)^8
Series nu_series(std::size_t order);

struct CongruenceClaim {
    std::string name;
    std::vector<Int> lhs;    // indexed from 0; value used is lhs[n + lhs_offset]
    std::int64_t lhs_offset = 0;
    std::vector<Int> rhs;    // empty means the zero sequence
    std::int64_t rhs_offset = 0;
    std::int64_t modulus;
    std::int64_t filter_a = 0, filter_b = 1;  // keep n with n == a (mod b)
    std::int64_t limit;                       // n ranges over 1..limit
};

struct Violation {
    std::int64_t n;
    std::int64_t lhs_residue, rhs_residue;  // normalized to [0, m)
};

// All filtered indices with residue mismatch; empty means the claim
// holds up to the limit.
std::vector<Violation> congruence_scan(const CongruenceClaim& claim);

// Built-in claims: mu(3n-1) == 0 (mod 3) and nu(n-1) == wt_3(n) (mod 3).
CongruenceClaim mu_claim(std::int64_t limit);
CongruenceClaim nu_claim(std::int64_t limit);

// Exhaustive enumeration of r-colored partitions of n into distinct
// (value, color) parts, split by parity of the number of parts.
// Bounds: n <= 20, r <= 3.
std::pair<Int, Int> parity_count_oracle(unsigned r, unsigned n);

// 4 nu(n-1) = 3 wh(n) + wt_3(n) + 36 sum_{m<n} wh(m) wh(n-m) for all
// n <= max_n.
ident::VerificationOutcome check_nu_convolution(std::int64_t max_n);

}  // namespace qconv::parts

#endif
