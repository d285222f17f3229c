#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <qconv/analytic.hpp>
#include <qconv/generators.hpp>

using namespace qconv;
using namespace qconv::analytic;

TEST_CASE("hypergeometric spot values") {
    CHECK(hyp2f1_half(0.0L) == 1.0L);
    // sqrt(pi) / Gamma(3/4)^2, frozen from a tighter-eps summation
    CHECK(std::abs(hyp2f1_half(0.5L) - 1.18034059901609623L) < 1e-9L);
    // first two terms bound from below; positivity bounds from above
    const Real z = hyp2f1_half(0.25L);
    CHECK(z > 1.0625L);
    CHECK(z < 1.1L);
    CHECK_THROWS_AS(hyp2f1_half(0.99L), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_half(-0.2L), std::domain_error);
}

TEST_CASE("derivative series") {
    CHECK(std::abs(z_prime(0.0L) - 0.25L) < 1e-15L);
    // central difference oracle
    const Real h = 1e-6L;
    const Real fd = (hyp2f1_half(0.5L + h) - hyp2f1_half(0.5L - h)) / (2.0L * h);
    CHECK(std::abs(z_prime(0.5L) - fd) / fd < 1e-6L);
}

TEST_CASE("nome construction") {
    const auto p = make_point(0.5L);
    CHECK(std::abs(p.y - std::numbers::pi_v<Real>) < 1e-12L);
    CHECK(std::abs(p.q - std::exp(-std::numbers::pi_v<Real>)) < 1e-12L);
    CHECK(make_point(0.1L).y > std::numbers::pi_v<Real>);
    CHECK(p.q > 0.0L);
    CHECK(p.q < 1.0L);
    CHECK(p.z >= 1.0L);
}

TEST_CASE("series evaluation at a numeric nome") {
    const Series one = Series::constant(1, 10);
    CHECK(series_value(one, 0.3L) == 1.0L);
    // phi(e^-pi) = pi^(1/4)/Gamma(3/4), frozen independently
    const Series phi = gen::build(gen::SeriesName::phi, 192);
    const auto p = make_point(0.5L);
    CHECK(std::abs(series_value(phi, p.q) - 1.08643481121330801L) < 1e-9L);
    CHECK_THROWS_AS(series_value(one, 1.0L), std::domain_error);
}

TEST_CASE("duplication map") {
    const auto p = make_point(0.5L);
    const auto d = duplicate_point(p);
    CHECK(std::abs(d.x - 0.0294372515228594L) < 1e-12L);
    CHECK(d.q == p.q * p.q);
    CHECK(std::abs(d.y - 2.0L * p.y) < 1e-12L);
    // z' must be the hypergeometric value at x'
    CHECK(std::abs(hyp2f1_half(d.x) - d.z) / d.z < 1e-12L);
}

TEST_CASE("sign change map") {
    const auto p = make_point(0.5L);
    const auto s = sign_change_point(p);
    CHECK(std::abs(s.x + 1.0L) < 1e-12L);
    CHECK(s.q == -p.q);
    CHECK(std::abs(s.z - p.z / std::sqrt(2.0L)) < 1e-12L);
    // the alternating weight-4 series evaluates to z^4 at -q
    const Series GQ = gen::build(gen::SeriesName::GQ, 192);
    const Real z4 = p.z * p.z * p.z * p.z;
    CHECK(std::abs(series_value(GQ, s.q) - z4) / z4 < 1e-10L);
}

TEST_CASE("differential equation and nome derivative residuals") {
    for (int i = 1; i <= 9; ++i) {
        const Real x = Real(i) / 10.0L;
        CHECK(ode_residual(x) < 1e-7L);
        CHECK(nome_derivative_residual(x) < 1e-6L);
    }
}

TEST_CASE("full formula grid") {
    const auto residuals = grid_check(1e-8L);
    CHECK(residuals.size() == 35 * 9);
    for (const auto& r : residuals) {
        CAPTURE(r.id);
        CAPTURE((double)r.x);
        CAPTURE((double)r.rel);
        CHECK(r.pass);
    }
}

TEST_CASE("single formula check reports a residual") {
    const auto& reg = formula_registry();
    REQUIRE_FALSE(reg.empty());
    const auto res = check_evaluation(reg.front(), 0.3L, 1e-8L);
    CHECK(res.pass);
    CHECK(res.rel >= 0.0L);
    CHECK(res.id == reg.front().id);
}
