#ifndef QCONV_ANALYTIC_HPP
#define QCONV_ANALYTIC_HPP

#include <functional>
#include <string>
#include <vector>

#include <qconv/series.hpp>

namespace qconv::analytic {

// long double on x86 carries a 64-bit significand, comfortably above the
// 60-bit working-precision floor.
using Real = long double;

inline constexpr Real kDomainLo = 0.05L;
inline constexpr Real kDomainHi = 0.95L;
inline constexpr Real kDefaultEps = 1e-15L;

// z = 2F1(1/2, 1/2; 1; x), summed until the term drops below eps times
// the partial sum.  Positive terms, eventually geometric tail, so the
// stopping rule bounds the relative error.  x = 0 is allowed as a limit.
Real hyp2f1_half(Real x, Real eps = kDefaultEps);

// dz/dx by term-wise differentiation, same tail policy.
Real z_prime(Real x, Real eps = kDefaultEps);

// d^2z/dx^2, used only for the differential-equation residual.
Real z_second(Real x, Real eps = kDefaultEps);

struct EllipticPoint {
    Real x;
    Real z;   // 2F1(1/2,1/2;1;x)
    Real y;   // pi * 2F1(...;1-x) / z
    Real q;   // e^{-y}
    Real eps;
};

EllipticPoint make_point(Real x, Real eps = kDefaultEps);

// x' = ((1-sqrt(1-x))/(1+sqrt(1-x)))^2, y' = 2y, z' = z(1+sqrt(1-x))/2.
EllipticPoint duplicate_point(const EllipticPoint& p);

// Jacobi change of sign: x' = x/(x-1) < 0, q' = -q, z' = z sqrt(1-x).
// Not a valid EllipticPoint (negative x), so returned as a bare triple.
struct SignChangeTriple {
    Real x, q, z;
};
SignChangeTriple sign_change_point(const EllipticPoint& p);

// Exact series evaluated at numeric q by Horner over coefficients 0..N,
// N chosen so q^N < 1e-14 (clamped to the stored order).
Real series_value(const Series& s, Real q);

// One verified evaluation: a q-side quantity against its closed form in
// (x, z, dz/dx).
struct EvaluationFormula {
    std::string id;
    std::function<Real(const EllipticPoint&)> lhs;
    std::function<Real(Real x, Real z, Real zp)> rhs;
};

const std::vector<EvaluationFormula>& formula_registry();

struct Residual {
    std::string id;
    Real x;
    Real lhs, rhs;
    Real rel;
    bool pass;
};

Residual check_evaluation(const EvaluationFormula& f, Real x, Real tol,
                          Real eps = kDefaultEps);

// Every registered formula at x in {0.1, 0.2, ..., 0.9}.
std::vector<Residual> grid_check(Real tol = 1e-8L, Real eps = kDefaultEps);

// 4x(1-x) z'' - z + 4(1-2x) z', identically zero for the hypergeometric z.
Real ode_residual(Real x, Real eps = kDefaultEps);

// Central difference of y against the closed form -1/(x(1-x)z^2);
// returns the relative mismatch.
Real nome_derivative_residual(Real x, Real step = 1e-6L, Real eps = kDefaultEps);

}  // namespace qconv::analytic

#endif
