#ifndef QCONV_REPRESENTATIONS_HPP
#define QCONV_REPRESENTATIONS_HPP

#include <cstdint>
#include <vector>

#include <qconv/generators.hpp>
#include <qconv/numeric.hpp>

namespace qconv::reps {

using gen::RepKind;

struct RepTable {
    RepKind kind;
    unsigned s;
    std::vector<Int> counts;  // indexed 0..limit
};

// DP s-fold convolution of the base indicator sequence (2 at positive
// squares / 1 at triangular numbers).  Deliberately independent of the
// power-series code path.
RepTable rep_bruteforce(RepKind kind, unsigned s, std::size_t limit);

// Closed forms for s in {4, 8}: r_4 = 16 wh(n/2) + 8 wh(n),
// delta_4 = wt(2n+1), r_8 = 16 (-1)^(n-1) wt_3(n),
// delta_8 = (wt_3(n+1) - wt_3(2n+2)) / 8 (division must be exact).
Int rep_formula(RepKind kind, unsigned s, std::int64_t n);

// Jacobi: r_4(n) = 8 (sigma(n) - 4 sigma(n/4)).
Int jacobi_r4(std::int64_t n);

}  // namespace qconv::reps

#endif
