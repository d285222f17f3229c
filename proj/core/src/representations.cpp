#include <qconv/representations.hpp>

#include <stdexcept>

#include <qconv/arith.hpp>

namespace qconv::reps {

namespace {

using arith::DivisorKind;
using arith::Family;

std::vector<Int> base_counts(RepKind kind, std::size_t limit) {
    std::vector<Int> c(limit + 1);
    if (kind == RepKind::squares) {
        c[0] = 1;
        for (std::size_t k = 1; k * k <= limit; ++k) c[k * k] = 2;
    } else {
        for (std::size_t k = 0;; ++k) {
            const std::size_t t = k * (k + 1) / 2;
            if (t > limit) break;
            c[t] = 1;
        }
    }
    return c;
}

}  // namespace

RepTable rep_bruteforce(RepKind kind, unsigned s, std::size_t limit) {
    if (s < 1) throw std::domain_error("rep_bruteforce: s must be >= 1");
    const std::vector<Int> base = base_counts(kind, limit);
    std::vector<Int> acc(limit + 1);
    acc[0] = 1;
    for (unsigned step = 0; step < s; ++step) {
        std::vector<Int> next(limit + 1);
        for (std::size_t i = 0; i <= limit; ++i) {
            if (acc[i] == 0) continue;
            for (std::size_t j = 0; i + j <= limit; ++j) {
                if (base[j] == 0) continue;
                next[i + j] += acc[i] * base[j];
            }
        }
        acc = std::move(next);
    }
    return {kind, s, std::move(acc)};
}

Int rep_formula(RepKind kind, unsigned s, std::int64_t n) {
    if (s != 4 && s != 8) throw std::domain_error("rep_formula: s must be 4 or 8");
    const DivisorKind wt1(Family::wt, 1), wt3(Family::wt, 3), wh1(Family::wh, 1);
    auto at = [](DivisorKind k, std::int64_t m) -> Int {
        return m >= 1 ? arith::point_eval(k, m) : Int{0};
    };
    if (kind == RepKind::squares) {
        if (n < 1) throw std::domain_error("rep_formula: n must be >= 1 for squares");
        if (s == 4) {
            const Int half = (n % 2 == 0) ? at(wh1, n / 2) : Int{0};
            return 16 * half + 8 * at(wh1, n);
        }
        const Int v = 16 * at(wt3, n);
        return (n % 2 == 1) ? v : -v;
    }
    if (n < 0) throw std::domain_error("rep_formula: n must be >= 0 for triangular");
    if (s == 4) return at(wt1, 2 * n + 1);
    const Int num = at(wt3, n + 1) - at(wt3, 2 * (n + 1));
    if (num % 8 != 0)
        throw std::logic_error("rep_formula: delta_8 division by 8 not exact");
    return num / 8;
}

Int jacobi_r4(std::int64_t n) {
    if (n < 1) throw std::domain_error("jacobi_r4: n must be >= 1");
    const DivisorKind sigma(Family::sigma, 1);
    const Int quarter = (n % 4 == 0) ? arith::point_eval(sigma, n / 4) : Int{0};
    return 8 * (arith::point_eval(sigma, n) - 4 * quarter);
}

}  // namespace qconv::reps
