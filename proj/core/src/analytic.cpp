#include <qconv/analytic.hpp>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include <qconv/generators.hpp>

namespace qconv::analytic {

namespace {

constexpr unsigned kTermCap = 100'000;

void require_domain(Real x) {
    // [0, 0.95]: the series itself is fine near 0 (duplication can land
    // there); only the log singularity as x -> 1 is excluded.
    if (!(x >= 0.0L && x <= kDomainHi))
        throw std::domain_error("analytic: x outside working domain [0, 0.95]");
}

// Sum of c_k(k) * x^k where c_0 = 1 and c_{k+1}/c_k is given by `ratio`;
// `weight` scales term k before accumulation (used for derivatives).
Real pochhammer_sum(Real x, Real eps, unsigned deriv_order) {
    Real coeff = 1.0L;  // ((1/2)_k / k!)^2
    Real xk = 1.0L;
    Real sum = 0.0L;
    for (unsigned k = 0; k < kTermCap; ++k) {
        Real w = 1.0L;
        for (unsigned j = 0; j < deriv_order; ++j) w *= Real(k - j);
        const Real term = (k >= deriv_order) ? coeff * w * xk : 0.0L;
        sum += term;
        if (k > deriv_order && term < eps * sum) return sum;
        const Real r = (Real(k) + 0.5L) / (Real(k) + 1.0L);
        coeff *= r * r;
        if (k >= deriv_order) xk *= x;
        if (x == 0.0L && k >= deriv_order) return sum;
    }
    throw std::runtime_error("analytic: hypergeometric sum failed to converge");
}

}  // namespace

Real hyp2f1_half(Real x, Real eps) {
    require_domain(x);
    return pochhammer_sum(x, eps, 0);
}

Real z_prime(Real x, Real eps) {
    require_domain(x);
    return pochhammer_sum(x, eps, 1);
}

Real z_second(Real x, Real eps) {
    require_domain(x);
    return pochhammer_sum(x, eps, 2);
}

EllipticPoint make_point(Real x, Real eps) {
    require_domain(x);
    const Real z = hyp2f1_half(x, eps);
    const Real y = std::numbers::pi_v<Real> * hyp2f1_half(1.0L - x, eps) / z;
    return {x, z, y, std::exp(-y), eps};
}

EllipticPoint duplicate_point(const EllipticPoint& p) {
    const Real r = std::sqrt(1.0L - p.x);
    const Real xd = ((1.0L - r) / (1.0L + r)) * ((1.0L - r) / (1.0L + r));
    return {xd, p.z * (1.0L + r) / 2.0L, 2.0L * p.y, p.q * p.q, p.eps};
}

SignChangeTriple sign_change_point(const EllipticPoint& p) {
    return {p.x / (p.x - 1.0L), -p.q, p.z * std::sqrt(1.0L - p.x)};
}

Real series_value(const Series& s, Real q) {
    if (!(std::abs(q) < 1.0L)) throw std::domain_error("series_value: need |q| < 1");
    std::size_t n = s.order();
    if (q != 0.0L) {
        const std::size_t want =
            std::size_t(std::ceil(std::log(1e-14L) / std::log(std::abs(q)))) + 1;
        if (want < n) n = want;
    }
    Real acc = 0.0L;
    for (std::size_t k = n + 1; k-- > 0;)
        acc = acc * q + s[k].convert_to<Real>();
    return acc;
}

namespace {

using gen::SeriesName;

// Term-by-term sums in n^s q^{kn} with a relative stopping rule.
// kind 0: n^s q^{kn}/(1 - q^{kn})         (Lambert)
// kind 1: 2 n^s q^{kn}/(1 - q^{2kn})      (1/sinh(nky))
// kind 2: n^s q^{kn}/(1 + q^{kn}) over odd n only (k ignored, uses n odd)
Real tail_sum(int s, unsigned k, int kind, int sign_start, const EllipticPoint& p) {
    Real sum = 0.0L;
    Real sign = Real(sign_start);
    for (unsigned n = 1; n < kTermCap; ++n) {
        unsigned m = (kind == 2) ? 2 * n - 1 : n;
        const Real qk = std::pow(p.q, Real(m * k));
        Real term;
        Real ns = std::pow(Real(m), Real(s));
        switch (kind) {
            case 0: term = ns * qk / (1.0L - qk); break;
            case 1: term = 2.0L * ns * qk / (1.0L - qk * qk); break;
            default: term = ns * qk / (1.0L + qk); break;
        }
        term *= (kind == 2) ? 1.0L : sign;
        sum += term;
        sign = -sign;
        if (n > 4 && std::abs(term) < p.eps * std::abs(sum)) return sum;
    }
    throw std::runtime_error("analytic: tail sum failed to converge");
}

struct NamedSeries {
    std::shared_ptr<const Series> s;
    Real at(Real q) const { return series_value(*s, q); }
};

NamedSeries named(SeriesName n) {
    // Order 192 keeps the Horner tail below 1e-14 for every grid q
    // (q <= e^{-y(0.9)} < 0.21).
    return {std::make_shared<Series>(gen::build(n, 192))};
}

std::vector<EvaluationFormula> make_registry() {
    const NamedSeries GP = named(SeriesName::GP), GE = named(SeriesName::GE),
                      GQ = named(SeriesName::GQ), phi = named(SeriesName::phi),
                      psi = named(SeriesName::psi), fng = named(SeriesName::f_neg),
                      GP02 = named(SeriesName::GP02), GP12 = named(SeriesName::GP12),
                      GE02 = named(SeriesName::GE02), GE12 = named(SeriesName::GE12),
                      GQ02 = named(SeriesName::GQ02), GQ12 = named(SeriesName::GQ12);
    const NamedSeries dGP{std::make_shared<Series>(theta_derivative(*GP.s))};
    const NamedSeries dGE{std::make_shared<Series>(theta_derivative(*GE.s))};
    const NamedSeries dGP2{
        std::make_shared<Series>(theta_derivative(dilate(*GP.s, 2)))};
    const NamedSeries dGE2{
        std::make_shared<Series>(theta_derivative(dilate(*GE.s, 2)))};

    std::vector<EvaluationFormula> r;
    auto add = [&r](std::string id, std::function<Real(const EllipticPoint&)> lhs,
                    std::function<Real(Real, Real, Real)> rhs) {
        r.push_back({std::move(id), std::move(lhs), std::move(rhs)});
    };

    // theta evaluations
    add("phi", [phi](const EllipticPoint& p) { return phi.at(p.q); },
        [](Real, Real z, Real) { return std::sqrt(z); });
    add("phi_neg", [phi](const EllipticPoint& p) { return phi.at(-p.q); },
        [](Real x, Real z, Real) { return std::pow(1.0L - x, 0.25L) * std::sqrt(z); });
    add("psi",
        [psi](const EllipticPoint& p) { return std::pow(p.q, 0.125L) * psi.at(p.q); },
        [](Real x, Real z, Real) {
            return std::pow(x, 0.125L) * std::sqrt(z / 2.0L);
        });
    add("psi_q2",
        [psi](const EllipticPoint& p) {
            return std::pow(p.q, 0.25L) * psi.at(p.q * p.q);
        },
        [](Real x, Real z, Real) { return 0.5L * std::pow(x, 0.25L) * std::sqrt(z); });
    add("f_neg",
        [fng](const EllipticPoint& p) {
            return std::pow(p.q, 1.0L / 24.0L) * fng.at(p.q);
        },
        [](Real x, Real z, Real) {
            return std::pow(2.0L, -1.0L / 6.0L) * std::pow(1.0L - x, 1.0L / 6.0L) *
                   std::pow(x, 1.0L / 24.0L) * std::sqrt(z);
        });

    // the three weight-2/4 generating functions at q, q^2, -q
    add("GP", [GP](const EllipticPoint& p) { return GP.at(p.q); },
        [](Real x, Real z, Real zp) {
            return z * z * (1.0L - x) + 4.0L * x * (1.0L - x) * z * zp;
        });
    add("GE", [GE](const EllipticPoint& p) { return GE.at(p.q); },
        [](Real x, Real z, Real) { return z * z * (1.0L + x); });
    add("GQ", [GQ](const EllipticPoint& p) { return GQ.at(p.q); },
        [](Real x, Real z, Real) {
            return z * z * z * z * (1.0L - x) * (1.0L - x);
        });
    add("GP_q2", [GP](const EllipticPoint& p) { return GP.at(p.q * p.q); },
        [](Real x, Real z, Real zp) {
            return z * z * (1.0L - x) + 2.0L * x * (1.0L - x) * z * zp;
        });
    add("GE_q2", [GE](const EllipticPoint& p) { return GE.at(p.q * p.q); },
        [](Real x, Real z, Real) { return z * z * (1.0L - 0.5L * x); });
    add("GQ_q2", [GQ](const EllipticPoint& p) { return GQ.at(p.q * p.q); },
        [](Real x, Real z, Real) { return z * z * z * z * (1.0L - x); });
    add("GP_neg", [GP](const EllipticPoint& p) { return GP.at(-p.q); },
        [](Real x, Real z, Real zp) {
            return z * z * (1.0L - 2.0L * x) + 4.0L * x * (1.0L - x) * z * zp;
        });
    add("GE_neg", [GE](const EllipticPoint& p) { return GE.at(-p.q); },
        [](Real x, Real z, Real) { return z * z * (1.0L - 2.0L * x); });
    add("GQ_neg", [GQ](const EllipticPoint& p) { return GQ.at(-p.q); },
        [](Real, Real z, Real) { return z * z * z * z; });

    // parity restrictions
    add("GP02", [GP02](const EllipticPoint& p) { return GP02.at(p.q); },
        [](Real x, Real z, Real zp) {
            return (-2.0L + (2.0L - 3.0L * x) * z * z +
                    8.0L * x * (1.0L - x) * z * zp) /
                   16.0L;
        });
    add("GP12", [GP12](const EllipticPoint& p) { return GP12.at(p.q); },
        [](Real x, Real z, Real) { return x * z * z / 16.0L; });
    add("GE02", [GE02](const EllipticPoint& p) { return GE02.at(p.q); },
        [](Real x, Real z, Real) {
            return (-2.0L + (2.0L - x) * z * z) / 48.0L;
        });
    add("GE12", [GE12](const EllipticPoint& p) { return GE12.at(p.q); },
        [](Real x, Real z, Real) { return x * z * z / 16.0L; });
    add("GQ02", [GQ02](const EllipticPoint& p) { return GQ02.at(p.q); },
        [](Real x, Real z, Real) {
            const Real z4 = z * z * z * z;
            return (2.0L - (2.0L - 2.0L * x + x * x) * z4) / 32.0L;
        });
    add("GQ12", [GQ12](const EllipticPoint& p) { return GQ12.at(p.q); },
        [](Real x, Real z, Real) {
            return x * (2.0L - x) * z * z * z * z / 32.0L;
        });

    // q d/dq of GP and GE at q and q^2
    add("dGP", [dGP](const EllipticPoint& p) { return dGP.at(p.q); },
        [](Real x, Real z, Real zp) {
            const Real u = 1.0L - x;
            return 2.0L * x * u * u * z * z * z * zp +
                   4.0L * x * x * u * u * z * z * zp * zp;
        });
    add("dGP_q2", [dGP2](const EllipticPoint& p) { return dGP2.at(p.q); },
        [](Real x, Real z, Real zp) {
            const Real u = 1.0L - x;
            return -0.5L * x * u * z * z * z * z +
                   2.0L * x * u * u * z * z * z * zp +
                   2.0L * x * x * u * u * z * z * zp * zp;
        });
    add("dGE", [dGE](const EllipticPoint& p) { return dGE.at(p.q); },
        [](Real x, Real z, Real zp) {
            const Real u = 1.0L - x;
            return x * u * z * z * z * z +
                   2.0L * x * u * (1.0L + x) * z * z * z * zp;
        });
    add("dGE_q2", [dGE2](const EllipticPoint& p) { return dGE2.at(p.q); },
        [](Real x, Real z, Real zp) {
            const Real u = 1.0L - x;
            return -0.5L * x * u * z * z * z * z +
                   x * u * (2.0L - x) * z * z * z * zp;
        });

    // infinite-sum representations
    add("exp_odd_1",
        [](const EllipticPoint& p) { return 1.0L - 24.0L * tail_sum(1, 1, 2, 1, p); },
        [](Real x, Real z, Real) { return (1.0L - 2.0L * x) * z * z; });
    add("sinh3", [](const EllipticPoint& p) { return tail_sum(3, 1, 1, 1, p); },
        [](Real x, Real z, Real) {
            return x * (1.0L - x) * z * z * z * z / 8.0L;
        });
    add("sinh5", [](const EllipticPoint& p) { return tail_sum(5, 1, 1, 1, p); },
        [](Real x, Real z, Real) {
            return x * (1.0L - x) * (1.0L - 2.0L * x) * std::pow(z, 6.0L) / 8.0L;
        });
    add("sinh7", [](const EllipticPoint& p) { return tail_sum(7, 1, 1, 1, p); },
        [](Real x, Real z, Real) {
            return x * (1.0L - x) * (2.0L - 17.0L * x + 17.0L * x * x) *
                   std::pow(z, 8.0L) / 16.0L;
        });
    add("sinh3_2y", [](const EllipticPoint& p) { return tail_sum(3, 2, 1, 1, p); },
        [](Real x, Real z, Real) {
            const Real r = std::sqrt(1.0L - x);
            return r * (1.0L - r) * (1.0L - r) * z * z * z * z / 32.0L;
        });
    // coefficient 1/128 (not 1/64) follows from the duplication map
    add("sinh5_2y", [](const EllipticPoint& p) { return tail_sum(5, 2, 1, 1, p); },
        [](Real x, Real z, Real) {
            const Real r = std::sqrt(1.0L - x);
            return r * (1.0L - r) * (1.0L - r) * (x - 2.0L + 6.0L * r) *
                   std::pow(z, 6.0L) / 128.0L;
        });
    // polynomial in sqrt(1-x) from duplicating the single-y formula
    add("sinh7_2y", [](const EllipticPoint& p) { return tail_sum(7, 2, 1, 1, p); },
        [](Real x, Real z, Real) {
            const Real r = std::sqrt(1.0L - x);
            const Real poly =
                1.0L - 30.0L * r + 74.0L * r * r - 30.0L * r * r * r +
                r * r * r * r;
            return r * (1.0L - r) * (1.0L - r) * poly * std::pow(z, 8.0L) / 512.0L;
        });
    add("exp5_alt",
        [](const EllipticPoint& p) { return 1.0L + 8.0L * tail_sum(5, 1, 0, 1, p); },
        [](Real x, Real z, Real) {
            return (1.0L - x) * (1.0L - x * x) * std::pow(z, 6.0L);
        });
    add("exp7_alt",
        [](const EllipticPoint& p) { return 17.0L - 32.0L * tail_sum(7, 1, 0, 1, p); },
        [](Real x, Real z, Real) {
            const Real u = 1.0L - x;
            return u * u * (17.0L - 2.0L * x + 17.0L * x * x) * std::pow(z, 8.0L);
        });
    add("exp5_alt_2y",
        [](const EllipticPoint& p) { return 1.0L + 8.0L * tail_sum(5, 2, 0, 1, p); },
        [](Real x, Real z, Real) {
            return (1.0L - x) * (1.0L - 0.5L * x) * std::pow(z, 6.0L);
        });
    add("exp7_alt_2y",
        [](const EllipticPoint& p) { return 17.0L - 32.0L * tail_sum(7, 2, 0, 1, p); },
        [](Real x, Real z, Real) {
            return (1.0L - x) * (17.0L - 17.0L * x + 2.0L * x * x) *
                   std::pow(z, 8.0L);
        });

    return r;
}

}  // namespace

const std::vector<EvaluationFormula>& formula_registry() {
    static const std::vector<EvaluationFormula> reg = make_registry();
    return reg;
}

Residual check_evaluation(const EvaluationFormula& f, Real x, Real tol, Real eps) {
    const EllipticPoint p = make_point(x, eps);
    const Real zp = z_prime(x, eps);
    const Real a = f.lhs(p);
    const Real b = f.rhs(p.x, p.z, zp);
    const Real scale = std::max({std::abs(a), std::abs(b), Real(1.0L)});
    const Real rel = std::abs(a - b) / scale;
    return {f.id, x, a, b, rel, rel <= tol};
}

std::vector<Residual> grid_check(Real tol, Real eps) {
    std::vector<Residual> out;
    for (const auto& f : formula_registry())
        for (int i = 1; i <= 9; ++i)
            out.push_back(check_evaluation(f, Real(i) / 10.0L, tol, eps));
    return out;
}

Real ode_residual(Real x, Real eps) {
    const Real z = hyp2f1_half(x, eps);
    const Real zp = z_prime(x, eps);
    const Real zpp = z_second(x, eps);
    const Real r = 4.0L * x * (1.0L - x) * zpp - z + 4.0L * (1.0L - 2.0L * x) * zp;
    return std::abs(r) / std::max(std::abs(z), Real(1.0L));
}

Real nome_derivative_residual(Real x, Real step, Real eps) {
    const Real yp = (make_point(x + step, eps).y - make_point(x - step, eps).y) /
                    (2.0L * step);
    const Real z = hyp2f1_half(x, eps);
    const Real closed = -1.0L / (x * (1.0L - x) * z * z);
    return std::abs(yp - closed) / std::abs(closed);
}

}  // namespace qconv::analytic
