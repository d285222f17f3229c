#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <qconv/arith.hpp>
#include <qconv/generators.hpp>
#include <qconv/series.hpp>

using namespace qconv;

namespace {

constexpr std::size_t kOrder = 200;

std::mt19937 rng(0x5eed1234);

Series random_series(bool unit_lead = false) {
    std::uniform_int_distribution<long long> dist(-50, 50);
    std::vector<Int> c(kOrder + 1);
    for (auto& x : c) x = dist(rng);
    if (unit_lead) c[0] = (dist(rng) % 2 == 0) ? 1 : -1;
    return Series(std::move(c));
}

}  // namespace

TEST_CASE("ring axioms on randomized series") {
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = random_series(), b = random_series(), c = random_series();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Series::constant(0, kOrder) == a);
        CHECK(a * Series::constant(1, kOrder) == a);
        CHECK(a - a == Series::constant(0, kOrder));
    }
}

TEST_CASE("theta derivative satisfies the Leibniz rule") {
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = random_series(), b = random_series();
        CHECK(theta_derivative(a * b) ==
              theta_derivative(a) * b + a * theta_derivative(b));
    }
}

TEST_CASE("involutions and projections") {
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = random_series();
        CHECK(alternate(alternate(a)) == a);
        CHECK(parity_part(a, 0) + parity_part(a, 1) == a);
        CHECK(parity_part(alternate(a), 0) == parity_part(a, 0));
        CHECK(parity_part(alternate(a), 1) == -parity_part(a, 1));
        CHECK(dilate(a, 1) == a);
    }
}

TEST_CASE("reciprocal is a two-sided inverse") {
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = random_series(true);
        const Series inv = reciprocal(a);
        CHECK(a * inv == Series::constant(1, kOrder));
        CHECK(inv * a == Series::constant(1, kOrder));
        CHECK(reciprocal(inv) == a);
    }
}

TEST_CASE("derivative commutes with dilation up to the factor k") {
    for (unsigned k : {2u, 3u, 5u}) {
        const Series a = random_series();
        CHECK(theta_derivative(dilate(a, k)) ==
              Int(k) * dilate(theta_derivative(a), k));
    }
}

TEST_CASE("lambert expansion agrees with the sieve") {
    using LW = LambertWeight;
    for (int s : {1, 3, 5}) {
        const auto sig = arith::sieve({arith::Family::sigma, s}, kOrder);
        const auto wt = arith::sieve({arith::Family::wt, s}, kOrder);
        const Series single =
            lambert_expand({LW::Family::d_power, s, LW::Stride::single}, kOrder);
        const Series alt_single =
            lambert_expand({LW::Family::alt_d_power, s, LW::Stride::single}, kOrder);
        for (std::size_t n = 1; n <= kOrder; ++n) {
            CHECK(single[n] == sig.at((long long)n));
            // every divisor contributes, so the alternating weight sums to wt
            CHECK(alt_single[n] == wt.at((long long)n));
        }
        // double stride keeps only divisors with odd codivisor; on odd n
        // that is the full wt sum
        const Series alt_double =
            lambert_expand({LW::Family::alt_d_power, s, LW::Stride::double_}, kOrder);
        for (std::size_t n = 1; n <= kOrder; n += 2)
            CHECK(alt_double[n] == wt.at((long long)n));
        // wh = sigma(n) - 2 sigma(n/2) as a series identity
        const auto wh = arith::sieve({arith::Family::wh, s}, kOrder);
        const Series wh_series = single - Int(2) * dilate(single, 2);
        for (std::size_t n = 1; n <= kOrder; ++n)
            CHECK(wh_series[n] == wh.at((long long)n));
    }
}

TEST_CASE("theta sums match their triple-product forms") {
    // sum-over-exponents construction vs infinite-product construction
    for (auto name : {gen::SeriesName::phi, gen::SeriesName::psi, gen::SeriesName::f_neg})
        CHECK_NOTHROW(gen::build(name, kOrder, gen::BuildMode::checked));
}

TEST_CASE("dilate drops coefficients beyond the order") {
    const Series a = random_series();
    const Series d = dilate(a, 3);
    for (std::size_t n = 0; n <= kOrder; ++n) {
        if (n % 3 == 0)
            CHECK(d[n] == a[n / 3]);
        else
            CHECK(d[n] == 0);
    }
}
