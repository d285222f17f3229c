#ifndef QCONV_GENERATORS_HPP
#define QCONV_GENERATORS_HPP

#include <string>

#include <qconv/series.hpp>

namespace qconv::gen {

// Every named q-expansion the engine knows how to construct.
//  P, Q, R          : 1 - 24*sum sigma(n) q^n, 1 + 240*sum sigma_3, 1 - 504*sum sigma_5
//  GP, GE, GQ       : 1 + 8*sum wt(n) q^n, 1 + 24*sum wh(n) q^n, 1 - 16*sum wt_3(n) q^n
//  phi, psi, f_neg  : theta series over squares, triangular and pentagonal numbers
//  *_02 / *_12      : even / odd parity restrictions of sum wt(n) q^n etc. (no
//                     leading constant; the n=0 term is taken as 0)
//  wt5_series       : 1 + 8*sum wt_5(n) q^n
//  qmono            : the monomial q
//  mu, nu           : colored-partition products prod (1-q^n)^8 (1-q^2n)^8 and
//                     prod (1-q^2n)^8 (1+q^n)^8
enum class SeriesName {
    P, Q, R,
    GP, GE, GQ,
    phi, psi, f_neg,
    GP02, GP12, GE02, GE12, GQ02, GQ12,
    wt5_series,
    qmono,
    mu, nu,
};

enum class BuildMode {
    fast,     // defining path only
    checked,  // also rebuild through the independent path and compare
};

Series build(SeriesName name, std::size_t order, BuildMode mode = BuildMode::fast);

enum class RepKind { squares, triangular };

// phi^s or psi^s: coefficient n is r_s(n) or delta_s(n).
Series rep_series(RepKind kind, unsigned s, std::size_t order);

const char* name_str(SeriesName name);
bool lookup_name(const std::string& text, SeriesName& out);

}  // namespace qconv::gen

#endif
