#include <qconv/identity.hpp>

namespace qconv::ident {

namespace {

using gen::SeriesName;

ExprPtr A(SeriesName n) { return atom(n); }
ExprPtr L(long long v) { return lit(v); }
ExprPtr frac(long long n, long long d) { return lit(Rat(n, d)); }
ExprPtr times(long long c, ExprPtr e) { return mul(L(c), std::move(e)); }
ExprPtr D2(ExprPtr e) { return deriv(dilate(std::move(e), 2)); }  // q d/dq of X(q^2)

IdentityRecord rec(std::string name, Expect expect, ExprPtr lhs, ExprPtr rhs,
                   std::string anchor, std::string note = {}) {
    return {std::move(name), std::move(lhs), std::move(rhs), expect, std::move(anchor),
            std::move(note)};
}

}  // namespace

std::vector<IdentityRecord> builtin_series_registry() {
    const ExprPtr P = A(SeriesName::P), Q = A(SeriesName::Q), R = A(SeriesName::R);
    const ExprPtr GP = A(SeriesName::GP), GE = A(SeriesName::GE), GQ = A(SeriesName::GQ);
    const ExprPtr phi = A(SeriesName::phi), psi = A(SeriesName::psi);
    const ExprPtr q = A(SeriesName::qmono);
    const ExprPtr psi2 = dilate(psi, 2);  // psi(q^2)
    const ExprPtr GE2 = dilate(GE, 2), GQ2 = dilate(GQ, 2), GP2 = dilate(GP, 2);

    std::vector<IdentityRecord> out;

    // differential equations
    out.push_back(rec("dP", Expect::pass, times(12, deriv(P)), sub(pow(P, 2), Q),
                      "Eisenstein P'"));
    out.push_back(rec("dQ", Expect::pass, times(3, deriv(Q)), sub(mul(P, Q), R),
                      "Eisenstein Q'"));
    out.push_back(rec("dR", Expect::pass, times(2, deriv(R)), sub(mul(P, R), pow(Q, 2)),
                      "Eisenstein R'"));
    out.push_back(rec("dmp", Expect::pass, times(4, deriv(GP)), sub(pow(GP, 2), GQ),
                      "signed analogue P'"));
    out.push_back(rec("dme", Expect::pass, times(2, deriv(GE)), sub(mul(GE, GP), GQ),
                      "signed analogue E'"));
    out.push_back(rec("dmq", Expect::pass, deriv(GQ), sub(mul(GP, GQ), mul(GE, GQ)),
                      "signed analogue Q'"));

    // wt_5 generating identity and its derivative form
    out.push_back(rec("e-t5", Expect::pass, A(SeriesName::wt5_series), mul(GE, GQ),
                      "wt_5 generating function"));
    out.push_back(rec("e-t5-deriv", Expect::pass, mul(GE, GQ),
                      sub(mul(GP, GQ), deriv(GQ)), "E*Q via Q'"));

    // the linear combination behind the wh*wh convolution
    out.push_back(rec("whwh-proof", Expect::pass, pow(GE, 2),
                      add(sub(times(5, GQ), times(4, GQ2)),
                          times(128, A(SeriesName::GQ12))),
                      "E^2 as Q combination"));

    // theta identities
    out.push_back(rec("mq-v", Expect::pass, GQ, alt(pow(phi, 8)), "Q = phi^8(-q)"));
    out.push_back(rec("2ee-3v", Expect::pass, add(times(2, GE2), GE), times(3, pow(phi, 4)),
                      "2E(q^2)+E(q)"));
    out.push_back(rec("vemq-2v", Expect::pass, add(mul(pow(phi, 4), GE), GQ2),
                      times(2, pow(phi, 8)), "phi^4 E + Q(q^2)"));
    out.push_back(rec("ee-p", Expect::pass, sub(GE, GE2),
                      times(24, mul(q, pow(psi2, 4))), "E(q)-E(q^2)"));
    out.push_back(rec("mpmp-p", Expect::pass, sub(GP, alt(GP)),
                      times(16, mul(q, pow(psi2, 4))), "P(q)-P(-q)"));
    out.push_back(rec("emq-p", Expect::pass, sub(pow(GE, 2), GQ),
                      times(64, mul(q, pow(psi, 8))), "E^2-Q"));
    out.push_back(rec("pv-e-printed", Expect::audit,
                      add(times(16, pow(psi2, 4)), pow(phi, 4)), GE,
                      "printed theta identity for E (q factor suspect)"));
    out.push_back(rec("pv-e-corrected", Expect::pass,
                      add(times(16, mul(q, pow(psi2, 4))), pow(phi, 4)), GE,
                      "corrected theta identity for E",
                      "q factor restored; cross-checked against mpmp-p plus 2ee-3v"));
    out.push_back(rec("mqmq-p-printed", Expect::audit, add(GQ, alt(GQ)),
                      times(32, mul(q, sub(times(8, pow(psi2, 8)), pow(psi, 8)))),
                      "printed Q(q)+Q(-q) (parity mismatch between sides)"));

    // parity decompositions
    out.push_back(rec("sp0", Expect::pass, times(16, A(SeriesName::GP02)),
                      add(add(L(-2), GP), alt(GP)), "even part of P"));
    out.push_back(rec("sp1", Expect::pass, times(16, A(SeriesName::GP12)),
                      sub(GP, alt(GP)), "odd part of P"));
    out.push_back(rec("se0", Expect::pass, times(48, A(SeriesName::GE02)),
                      add(add(L(-2), GE), alt(GE)), "even part of E"));
    out.push_back(rec("se1", Expect::pass, times(48, A(SeriesName::GE12)),
                      sub(GE, alt(GE)), "odd part of E"));
    out.push_back(rec("sq0-printed", Expect::audit, times(32, A(SeriesName::GQ02)),
                      sub(sub(L(-2), GQ), alt(GQ)), "printed even part of Q (sign suspect)"));
    out.push_back(rec("sq1", Expect::pass, times(32, A(SeriesName::GQ12)),
                      sub(alt(GQ), GQ), "odd part of Q"));

    // products P(q^r) P(q^s), P(q^r) E(q^s)
    out.push_back(rec("mpmp2", Expect::pass, mul(GP, GP2),
                      add(add(GQ2, deriv(GP)), times(2, D2(GP))), "P(q)P(q^2)"));
    out.push_back(rec("mp2me-printed", Expect::audit, mul(GP2, GE),
                      add(add(GQ2, mul(frac(1, 3), add(deriv(GE), times(2, D2(GE))))),
                          sub(deriv(GP), times(2, D2(GP)))),
                      "printed P(q^2)E(q)"));
    out.push_back(rec("mp2me-corrected", Expect::pass, mul(GP2, GE), add(GQ2, deriv(GE)),
                      "corrected P(q^2)E(q)",
                      "derived from the x-z evaluations; printed combination differs by a "
                      "z dz/dx term"));
    out.push_back(rec("mpme", Expect::pass, mul(GP, GE2),
                      add(mul(frac(1, 2), sub(times(3, GQ2), GQ)), times(2, D2(GE))),
                      "P(q)E(q^2)"));

    // representation-count generating identities
    out.push_back(rec("r4-series", Expect::pass, times(3, pow(phi, 4)),
                      add(times(2, GE2), GE), "r_4 via E"));
    out.push_back(rec("d4-series", Expect::pass, times(8, mul(q, pow(psi2, 4))), odd(GP),
                      "delta_4 via odd part of P"));
    out.push_back(rec("r8-series", Expect::pass, pow(phi, 8), alt(GQ), "r_8 via Q(-q)"));
    out.push_back(rec("d8-series", Expect::pass,
                      times(128, mul(q, mul(q, pow(psi2, 8)))),
                      sub(sub(L(1), GQ2), even(sub(L(1), GQ))), "delta_8 via Q parity"));

    // colored-partition products
    out.push_back(rec("mu-64", Expect::pass, times(64, mul(q, A(SeriesName::mu))),
                      mul(sub(pow(GE, 2), GQ), GQ), "mu product"));
    out.push_back(rec("nu-64", Expect::pass, times(64, mul(q, A(SeriesName::nu))),
                      sub(pow(GE, 2), GQ), "nu product"));

    // the six printed parity-product combinations
    out.push_back(rec(
        "sp0mp-printed", Expect::audit, mul(A(SeriesName::GP02), add(L(-1), GP)),
        add(sub(add(frac(1, 8), mul(frac(1, 16), add(GQ, GQ2))),
                add(mul(frac(1, 24), sub(GE, times(7, GE2))), mul(frac(1, 2), GP2))),
            sub(mul(frac(1, 2), deriv(GP)),
                mul(frac(1, 12), add(deriv(GE), D2(GE))))),
        "printed P02*(P-1)"));
    out.push_back(rec(
        "sp0mp2-printed", Expect::audit, mul(A(SeriesName::GP02), add(L(-1), GP2)),
        add(add(frac(1, 8),
                mul(frac(1, 8), add(sub(GQ2, times(3, GP2)), GE2))),
            sub(mul(frac(1, 16), add(deriv(GP), times(6, D2(GP)))),
                mul(frac(1, 48), add(deriv(GE), times(2, D2(GE)))))),
        "printed P02*(P(q^2)-1)"));
    out.push_back(rec("sp1mp-printed", Expect::audit,
                      mul(A(SeriesName::GP12), add(L(-1), GP)),
                      add(sub(mul(frac(1, 16), sub(GQ, GQ2)),
                              mul(frac(1, 24), sub(GE, GE2))),
                          mul(frac(1, 12), sub(deriv(GE), D2(GE)))),
                      "printed P12*(P-1)"));
    out.push_back(rec("sp1mp2-printed", Expect::audit,
                      mul(A(SeriesName::GP12), add(L(-1), GP2)),
                      add(mul(frac(1, 24), sub(GE2, GE)),
                          mul(frac(1, 24), sub(deriv(GE), D2(GE)))),
                      "printed P12*(P(q^2)-1)"));
    out.push_back(rec("se0mp-printed", Expect::audit,
                      mul(A(SeriesName::GE02), add(L(-1), GP)),
                      sub(sub(add(frac(1, 24),
                                  mul(frac(1, 16), sub(GQ2, times(3, GQ)))),
                              add(mul(frac(1, 24), GP), mul(frac(1, 24), GE2))),
                          mul(frac(1, 12), D2(GE))),
                      "printed E02*(P-1)"));
    out.push_back(rec("se0mp2-printed", Expect::audit,
                      mul(A(SeriesName::GE02), add(L(-1), GP2)),
                      add(add(frac(1, 24),
                              mul(frac(1, 24), sub(sub(GQ2, GP2), GE2))),
                          mul(frac(1, 24), D2(GE))),
                      "printed E02*(P(q^2)-1)"));

    return out;
}

namespace {

using arith::ConvShape;
using arith::DivisorKind;
using arith::Family;

const DivisorKind kSigma1{Family::sigma, 1};
const DivisorKind kSigma3{Family::sigma, 3};
const DivisorKind kSigma5{Family::sigma, 5};
const DivisorKind kWt1{Family::wt, 1};
const DivisorKind kWt3{Family::wt, 3};
const DivisorKind kWt5{Family::wt, 5};
const DivisorKind kWh1{Family::wh, 1};

RhsTerm term(Rat c0, Rat c1, DivisorKind kind, bool half = false) {
    return {std::move(c0), std::move(c1), kind, half};
}

}  // namespace

std::vector<ConvIdentity> builtin_convolution_registry() {
    std::vector<ConvIdentity> out;

    out.push_back({"sigma1", Expect::pass, "Ramanujan sigma*sigma", 12, ConvShape::plain,
                   {{1, kSigma1}}, {{1, kSigma1}},
                   {term(5, 0, kSigma3), term(1, -6, kSigma1)}, {}});
    out.push_back({"sigma2", Expect::pass, "Ramanujan sigma*sigma_3", 240, ConvShape::plain,
                   {{1, kSigma1}}, {{1, kSigma3}},
                   {term(21, 0, kSigma5), term(10, -30, kSigma3), term(-1, 0, kSigma1)}, {}});

    out.push_back({"t3", Expect::pass, "wt*wt", 4, ConvShape::plain,
                   {{1, kWt1}}, {{1, kWt1}},
                   {term(-1, 0, kWt3), term(-1, 2, kWt1)}, {}});
    out.push_back({"ht", Expect::pass, "wh*wt", 24, ConvShape::plain,
                   {{1, kWh1}}, {{1, kWt1}},
                   {term(-2, 0, kWt3), term(-3, 6, kWh1), term(-1, 0, kWt1)}, {}});
    out.push_back({"tt3-ht3-printed", Expect::audit, "printed (wt-3wh)*wt_3", 16,
                   ConvShape::plain, {{1, kWt1}, {-3, kWh1}}, {{1, kWt3}},
                   {term(0, 2, kWt3), term(-2, 0, kWt1)}, {}});
    out.push_back({"tt3-ht3-corrected", Expect::pass, "corrected (wt-3wh)*wt_3", 16,
                   ConvShape::plain, {{1, kWt1}, {-3, kWh1}}, {{1, kWt3}},
                   {term(0, 2, kWt3), term(1, 0, kWt1), term(-3, 0, kWh1)}, {}});

    out.push_back({"whwh", Expect::pass, "wh*wh (parity split)", 36, ConvShape::plain,
                   {{1, kWh1}}, {{1, kWh1}},
                   {term(-3, 0, kWh1), term(-5, 0, kWt3), term(4, 0, kWt3, true)},
                   {term(-3, 0, kWh1), term(3, 0, kWt3)}});

    out.push_back({"t5", Expect::pass, "wt*wt_3", 16, ConvShape::plain,
                   {{1, kWt1}}, {{1, kWt3}},
                   {term(-1, 0, kWt5), term(-2, 2, kWt3), term(1, 0, kWt1)}, {}});

    out.push_back({"tt2-printed", Expect::audit, "printed dilated wt*wt", 8,
                   ConvShape::dilated, {{1, kWt1}}, {{1, kWt1}},
                   {term(-1, 0, kWt3, true), term(-1, 1, kWt1), term(-1, 2, kWt1, true)},
                   {}});
    out.push_back({"tt2-corrected", Expect::pass, "corrected dilated wt*wt", 8,
                   ConvShape::dilated, {{1, kWt1}}, {{1, kWt1}},
                   {term(-2, 0, kWt3, true), term(-1, 1, kWt1), term(-1, 2, kWt1, true)},
                   {}, });
    out.push_back({"th2-printed", Expect::audit, "printed dilated wt*wh", 24,
                   ConvShape::dilated, {{1, kWt1}}, {{1, kWh1}},
                   {term(-2, 0, kWt3, true), term(-3, 2, kWh1), term(0, 4, kWh1, true),
                    term(0, 1, kWt1), term(-1, -2, kWt1, true)},
                   {}});
    out.push_back({"ht2-printed", Expect::audit, "printed dilated wh*wt", 24,
                   ConvShape::dilated, {{1, kWh1}}, {{1, kWt1}},
                   {term(1, 0, kWt3), term(-3, 0, kWt3, true), term(-3, 6, kWh1, true),
                    term(-1, 0, kWt1)},
                   {}});

    out.push_back({"t2t2-printed", Expect::audit, "printed wt(2m)wt(n-2m)", 8,
                   ConvShape::even_arg, {{1, kWt1}}, {{1, kWt1}},
                   {term(-1, 0, kWt3), term(-1, 0, kWt3, true), term(0, 4, kWt1),
                    term(-4, 0, kWt1, true), term(-1, -2, kWh1), term(7, 2, kWh1, true)},
                   {}});
    out.push_back({"t2t-printed", Expect::audit, "printed wt(2m)wt(n/2-m)", 8,
                   ConvShape::even_half, {{1, kWt1}}, {{1, kWt1}},
                   {term(-2, 0, kWt3, true), term(0, Rat(1, 2), kWt1),
                    term(-3, 3, kWt1, true), term(0, Rat(-1, 2), kWh1),
                    term(3, -1, kWh1, true)},
                   {}});
    out.push_back({"t1t1-printed", Expect::audit, "printed wt(2m-1)wt(n-(2m-1))", 8,
                   ConvShape::odd_arg, {{1, kWt1}}, {{1, kWt1}},
                   {term(-1, 0, kWt3), term(1, 0, kWt3, true), term(-1, 2, kWh1),
                    term(1, -2, kWh1, true)},
                   {}});
    out.push_back({"t1t-printed", Expect::audit, "printed wt(2m-1)wt((n+1)/2-m)", 8,
                   ConvShape::odd_half, {{1, kWt1}}, {{1, kWt1}},
                   {term(-1, 1, kWh1), term(1, -1, kWh1, true)}, {}});
    out.push_back({"h2h2-printed", Expect::audit, "printed wh(2m)wt(n-2m)", 8,
                   ConvShape::even_arg, {{1, kWh1}}, {{1, kWt1}},
                   {term(Rat(1, 3), 0, kWt3), term(-1, 0, kWt3, true),
                    term(-1, 2, kWh1, true)},
                   {}});
    out.push_back({"h2h-printed", Expect::audit, "printed wh(2m)wt(n/2-m)", 8,
                   ConvShape::even_half, {{1, kWh1}}, {{1, kWt1}},
                   {term(Rat(-2, 3), 0, kWt3, true), term(Rat(-1, 3), 0, kWt1, true),
                    term(-1, 1, kWh1, true)},
                   {}});

    return out;
}

}  // namespace qconv::ident
