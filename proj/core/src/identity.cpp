#include <qconv/identity.hpp>

#include <map>
#include <sstream>

#include <json.hpp>

namespace qconv::ident {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

}  // namespace

VerificationOutcome verify(const IdentityRecord& record, std::size_t order) {
    RatSeries lhs = evaluate(record.lhs, order);
    RatSeries rhs = evaluate(record.rhs, order);
    for (std::size_t n = 0; n <= order; ++n) {
        // cross-multiplied exact comparison
        if (lhs.num[n] * rhs.den != rhs.num[n] * lhs.den) {
            return {false, order,
                    FirstFailure{(long long)n, lhs.coeff(n), rhs.coeff(n)}};
        }
    }
    return {true, order, std::nullopt};
}

bool SuiteReport::ok() const {
    for (const auto& e : entries)
        if (e.expect == Expect::pass && !e.outcome.pass) return false;
    return true;
}

std::string SuiteReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json item;
        item["name"] = e.name;
        item["status"] = e.outcome.pass ? "pass" : "fail";
        item["order"] = e.outcome.checked_order;
        if (e.outcome.first_failure) {
            const auto& f = *e.outcome.first_failure;
            item["first_failure"] = {
                {"n", f.n}, {"lhs", rat_str(f.lhs)}, {"rhs", rat_str(f.rhs)}};
        } else {
            item["first_failure"] = nullptr;
        }
        arr.push_back(std::move(item));
    }
    return arr.dump(2);
}

std::string SuiteReport::to_tsv() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.name << "\t" << (e.expect == Expect::pass ? "pass" : "audit") << "\t"
           << (e.outcome.pass ? "pass" : "fail");
        if (e.outcome.first_failure) {
            const auto& f = *e.outcome.first_failure;
            os << "\tn=" << f.n << "\tlhs=" << rat_str(f.lhs) << "\trhs=" << rat_str(f.rhs);
        }
        os << "\n";
    }
    return os.str();
}

SuiteReport run_suite(const std::vector<IdentityRecord>& records, std::size_t order) {
    SuiteReport report;
    report.entries.reserve(records.size());
    for (const auto& r : records)
        report.entries.push_back({r.name, r.expect, verify(r, order)});
    return report;
}

BasisResult express_in_basis(const ExprPtr& target, const std::vector<ExprPtr>& basis,
                             std::size_t order) {
    const std::size_t k = basis.size();
    RatSeries t = evaluate(target, order);
    std::vector<RatSeries> b;
    b.reserve(k);
    for (const auto& e : basis) b.push_back(evaluate(e, order));

    // rows[n] = (basis_0[n], ..., basis_{k-1}[n] | target[n])
    std::vector<std::vector<Rat>> rows(order + 1, std::vector<Rat>(k + 1));
    for (std::size_t n = 0; n <= order; ++n) {
        for (std::size_t j = 0; j < k; ++j) rows[n][j] = b[j].coeff(n);
        rows[n][k] = t.coeff(n);
    }

    // exact Gauss-Jordan; pivot on the smallest row index first
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank <= order; ++col) {
        std::size_t pr = rank;
        while (pr <= order && rows[pr][col] == 0) ++pr;
        if (pr > order) continue;
        std::swap(rows[rank], rows[pr]);
        const Rat inv = rows[rank][col];
        for (auto& v : rows[rank]) v /= inv;
        for (std::size_t r = 0; r <= order; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat factor = rows[r][col];
            for (std::size_t j = col; j <= k; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    if (rank < k) return {BasisStatus::degenerate, {}};
    for (std::size_t r = rank; r <= order; ++r)
        if (rows[r][k] != 0) return {BasisStatus::no_solution, {}};

    std::vector<Rat> coeffs(k);
    for (std::size_t i = 0; i < rank; ++i) coeffs[pivot_col[i]] = rows[i][k];
    return {BasisStatus::solved, std::move(coeffs)};
}

namespace {

using arith::DivisorKind;
using arith::DivisorTable;

struct TableKey {
    arith::Family family;
    int s;
    bool operator<(const TableKey& o) const {
        return family != o.family ? family < o.family : s < o.s;
    }
};

class TableSet {
public:
    explicit TableSet(std::size_t limit) : limit_(limit) {}

    const DivisorTable& get(DivisorKind kind) {
        const TableKey key{kind.family, kind.s};
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, arith::sieve(kind, limit_)).first;
        return it->second;
    }

    // Linear combination of divisor tables as one sequence.
    DivisorTable combine(const std::vector<SeqTerm>& terms) {
        std::vector<Int> v(limit_ + 1);
        for (const auto& t : terms) {
            const DivisorTable& tab = get(t.kind);
            for (std::size_t n = 1; n <= limit_; ++n)
                v[n] += t.coeff * tab.at(std::int64_t(n));
        }
        return DivisorTable(terms.front().kind, std::move(v));
    }

private:
    std::size_t limit_;
    std::map<TableKey, DivisorTable> cache_;
};

Rat rhs_value(const std::vector<RhsTerm>& terms, TableSet& tables, long long n) {
    Rat acc{0};
    for (const auto& t : terms) {
        const DivisorTable& tab = tables.get(t.kind);
        const Int& val = t.half ? tab.at_half(n) : tab.at(n);
        if (val == 0) continue;
        acc += (t.c0 + t.c1 * Rat(n)) * Rat(val);
    }
    return acc;
}

}  // namespace

VerificationOutcome check_convolution(const ConvIdentity& id, long long max_n) {
    TableSet tables{std::size_t(max_n)};
    const DivisorTable f = tables.combine(id.f);
    const DivisorTable g = tables.combine(id.g);
    for (long long n = 1; n <= max_n; ++n) {
        const Rat lhs = Rat(id.multiplier) * arith::convolution(f, g, id.shape, n);
        const auto& terms =
            (!id.rhs_odd.empty() && n % 2 == 1) ? id.rhs_odd : id.rhs;
        const Rat rhs = rhs_value(terms, tables, n);
        if (lhs != rhs)
            return {false, std::size_t(max_n), FirstFailure{n, lhs, rhs}};
    }
    return {true, std::size_t(max_n), std::nullopt};
}

SuiteReport run_convolution_suite(const std::vector<ConvIdentity>& ids, long long max_n) {
    SuiteReport report;
    report.entries.reserve(ids.size());
    for (const auto& id : ids)
        report.entries.push_back({id.name, id.expect, check_convolution(id, max_n)});
    return report;
}

}  // namespace qconv::ident
