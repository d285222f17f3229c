#ifndef QCONV_IDENTITY_HPP
#define QCONV_IDENTITY_HPP

#include <optional>
#include <string>
#include <vector>

#include <qconv/arith.hpp>
#include <qconv/expr.hpp>

namespace qconv::ident {

enum class Expect { pass, audit };

// A named lhs == rhs pair.  expect=pass entries gate the suite;
// expect=audit entries are verified and reported without failing it.
struct IdentityRecord {
    std::string name;
    ExprPtr lhs, rhs;
    Expect expect = Expect::pass;
    std::string anchor;  // citation string
    std::string note;    // e.g. derivation oracle for corrected variants
};

struct FirstFailure {
    long long n;
    Rat lhs, rhs;
};

struct VerificationOutcome {
    bool pass;
    std::size_t checked_order;
    std::optional<FirstFailure> first_failure;
};

// Cross-multiplies denominators and compares coefficients 0..order.
VerificationOutcome verify(const IdentityRecord& record, std::size_t order);

struct SuiteEntry {
    std::string name;
    Expect expect;
    VerificationOutcome outcome;
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    // failure iff any expected-pass record fails
    bool ok() const;
    std::string to_json() const;
    std::string to_tsv() const;
};

SuiteReport run_suite(const std::vector<IdentityRecord>& records, std::size_t order);

enum class BasisStatus { solved, no_solution, degenerate };

struct BasisResult {
    BasisStatus status;
    std::vector<Rat> coeffs;  // valid when status == solved
};

// Exact rationals c_i with target = sum c_i * basis_i to the given
// order, or a distinct report of linear dependence / no solution.
BasisResult express_in_basis(const ExprPtr& target, const std::vector<ExprPtr>& basis,
                             std::size_t order);

// ---- arithmetic-side convolution identities ------------------------------

// A linear combination of divisor functions, e.g. wt - 3*wh.
struct SeqTerm {
    Int coeff;
    arith::DivisorKind kind;
};

// One RHS term (c0 + c1*n) * F(n) or (c0 + c1*n) * F(n/2).
struct RhsTerm {
    Rat c0, c1;
    arith::DivisorKind kind;
    bool half = false;
};

// multiplier * sum_shape f(.) g(.) == sum of RHS terms, for every n.
struct ConvIdentity {
    std::string name;
    Expect expect = Expect::pass;
    std::string anchor;
    Int multiplier;
    arith::ConvShape shape;
    std::vector<SeqTerm> f, g;
    std::vector<RhsTerm> rhs;      // all n, unless rhs_odd is nonempty
    std::vector<RhsTerm> rhs_odd;  // parity-split RHS (odd n) when nonempty
};

VerificationOutcome check_convolution(const ConvIdentity& id, long long max_n);

struct ConvSuiteEntry {
    std::string name;
    Expect expect;
    VerificationOutcome outcome;
};

SuiteReport run_convolution_suite(const std::vector<ConvIdentity>& ids, long long max_n);

// ---- built-in registries -------------------------------------------------

std::vector<IdentityRecord> builtin_series_registry();
std::vector<ConvIdentity> builtin_convolution_registry();

}  // namespace qconv::ident

#endif
