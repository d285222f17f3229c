// Batch command-line surface for the convolution-sum engine: sieves,
// series expansion, identity verification and audit, representation
// tables, congruence scans, the numeric x-z grid, and basis solving.

#include <cstdint>
#include <iostream>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qconv/analytic.hpp>
#include <qconv/arith.hpp>
#include <qconv/generators.hpp>
#include <qconv/identity.hpp>
#include <qconv/parser.hpp>
#include <qconv/partitions.hpp>
#include <qconv/representations.hpp>

using json = nlohmann::json;
using namespace qconv;

namespace {

constexpr std::int64_t kSieveCeiling = 100'000;
constexpr std::size_t kSeriesCeiling = 5'000;

enum Exit { kOk = 0, kMathFailure = 1, kUsage = 2 };

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

json int_vector_json(const std::vector<Int>& v, std::size_t from) {
    json a = json::array();
    for (std::size_t i = from; i < v.size(); ++i) a.push_back(v[i].str());
    return a;
}

int emit_table(const std::vector<Int>& v, std::size_t from, const std::string& format,
               const char* key) {
    if (format == "json") {
        json out;
        out[key] = int_vector_json(v, from);
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = from; i < v.size(); ++i)
            std::cout << i << "\t" << v[i] << "\n";
    }
    return kOk;
}

arith::Family parse_family(const std::string& name) {
    if (name == "sigma") return arith::Family::sigma;
    if (name == "wt") return arith::Family::wt;
    if (name == "wh") return arith::Family::wh;
    throw CLI::ValidationError("--family", "expected sigma, wt or wh");
}

// Split on top-level commas only, so basis entries may contain calls
// like dilate(Q, 2).
std::vector<std::string> split_exprs(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int run_suites(std::size_t order, long long conv_max, const std::string& file,
               const std::string& format, bool gate) {
    ident::SuiteReport series_report;
    ident::SuiteReport conv_report;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "cannot open " << file << "\n";
            return kUsage;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        series_report = ident::run_suite(ident::parse(buf.str()), order);
    } else {
        series_report = ident::run_suite(ident::builtin_series_registry(), order);
        conv_report =
            ident::run_convolution_suite(ident::builtin_convolution_registry(), conv_max);
    }
    const bool ok = series_report.ok() && conv_report.ok();
    if (format == "json") {
        json out;
        out["series"] = json::parse(series_report.to_json());
        if (file.empty()) out["convolution"] = json::parse(conv_report.to_json());
        out["ok"] = ok;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << series_report.to_tsv();
        if (file.empty()) std::cout << conv_report.to_tsv();
        std::cout << "ok\t" << (ok ? "true" : "false") << "\n";
    }
    return (gate && !ok) ? kMathFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and divisor-sum convolution toolkit"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));

    // sieve
    auto* sieve = app.add_subcommand("sieve", "tabulate a divisor-sum family");
    std::string family = "sigma";
    int power = 1;
    std::int64_t sieve_max = 100;
    sieve->add_option("--family", family, "sigma | wt | wh")->required();
    sieve->add_option("--s", power, "odd power")->required();
    sieve->add_option("--max", sieve_max, "table limit")->required();

    // series
    auto* series = app.add_subcommand("series", "expand a named q-series");
    std::string series_name;
    std::size_t order = 32;
    series->add_option("--name", series_name, "series name")->required();
    series->add_option("--order", order, "truncation order");

    // verify / audit
    auto* verify = app.add_subcommand("verify", "run the identity suites (gating)");
    std::size_t verify_order = 200;
    long long conv_max = 200;
    std::string dsl_file;
    verify->add_option("--order", verify_order, "series truncation order");
    verify->add_option("--conv-max", conv_max, "convolution check limit");
    verify->add_option("--file", dsl_file, "identity DSL file instead of the registry");

    auto* audit = app.add_subcommand("audit", "run the identity suites (informational)");
    std::size_t audit_order = 200;
    long long audit_conv_max = 200;
    audit->add_option("--order", audit_order, "series truncation order");
    audit->add_option("--conv-max", audit_conv_max, "convolution check limit");

    // reps
    auto* reps_cmd = app.add_subcommand("reps", "representation counts");
    std::string kind = "squares", method = "formula";
    unsigned rep_s = 4;
    std::int64_t rep_max = 100;
    reps_cmd->add_option("--kind", kind, "squares | triangular")
        ->check(CLI::IsMember({"squares", "triangular"}));
    reps_cmd->add_option("--s", rep_s, "4 or 8")->check(CLI::IsMember({4, 8}));
    reps_cmd->add_option("--max", rep_max, "table limit")->required();
    reps_cmd->add_option("--method", method, "formula | bruteforce | series")
        ->check(CLI::IsMember({"formula", "bruteforce", "series"}));

    // congruences
    auto* cong = app.add_subcommand("congruences", "colored-partition congruence scans");
    std::string which = "both";
    std::int64_t cong_max = 500;
    cong->add_option("--which", which, "mu | nu | both")
        ->check(CLI::IsMember({"mu", "nu", "both"}));
    cong->add_option("--max", cong_max, "scan limit")->required();

    // elliptic
    auto* ell = app.add_subcommand("elliptic", "numeric x-z evaluations");
    double ell_x = 0.5;
    double tol = 1e-8;
    bool grid = false;
    ell->add_option("--x", ell_x, "evaluation point");
    ell->add_flag("--grid", grid, "check every formula on the x grid");
    ell->add_option("--tol", tol, "relative residual tolerance");

    // express
    auto* express = app.add_subcommand("express", "solve target = sum c_i basis_i");
    std::string target_text, basis_text;
    std::size_t express_order = 40;
    express->add_option("--target", target_text, "target expression")->required();
    express->add_option("--basis", basis_text, "comma-separated basis expressions")
        ->required();
    express->add_option("--order", express_order, "matching order");

    // subcommands see the top-level --format flag
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sieve) {
            if (sieve_max < 1 || sieve_max > kSieveCeiling) {
                std::cerr << "--max out of range [1, " << kSieveCeiling << "]\n";
                return kUsage;
            }
            arith::DivisorKind dk(parse_family(family), power);
            const auto table = arith::sieve(dk, std::size_t(sieve_max));
            return emit_table(table.raw(), 1, format, "values");
        }
        if (*series) {
            if (order > kSeriesCeiling) {
                std::cerr << "--order out of range [0, " << kSeriesCeiling << "]\n";
                return kUsage;
            }
            gen::SeriesName name;
            if (!gen::lookup_name(series_name, name)) {
                std::cerr << "unknown series name: " << series_name << "\n";
                return kUsage;
            }
            const Series s = gen::build(name, order);
            return emit_table(s.coeffs(), 0, format, "coefficients");
        }
        if (*verify)
            return run_suites(verify_order, conv_max, dsl_file, format, true);
        if (*audit)
            return run_suites(audit_order, audit_conv_max, "", format, false);
        if (*reps_cmd) {
            if (rep_max < 0 || rep_max > kSieveCeiling) {
                std::cerr << "--max out of range\n";
                return kUsage;
            }
            const auto rk = (kind == "squares") ? gen::RepKind::squares
                                                : gen::RepKind::triangular;
            std::vector<Int> counts;
            if (method == "bruteforce") {
                counts = reps::rep_bruteforce(rk, rep_s, std::size_t(rep_max)).counts;
            } else if (method == "series") {
                counts = gen::rep_series(rk, rep_s, std::size_t(rep_max)).coeffs();
            } else {
                counts.resize(std::size_t(rep_max) + 1);
                counts[0] = (rk == gen::RepKind::squares) ? Int{1}
                                                          : reps::rep_formula(rk, rep_s, 0);
                for (std::int64_t n = (rk == gen::RepKind::squares) ? 1 : 0;
                     n <= rep_max; ++n)
                    counts[std::size_t(n)] = reps::rep_formula(rk, rep_s, n);
            }
            return emit_table(counts, 0, format, "counts");
        }
        if (*cong) {
            if (cong_max < 1 || cong_max > kSieveCeiling) {
                std::cerr << "--max out of range\n";
                return kUsage;
            }
            std::vector<parts::CongruenceClaim> claims;
            if (which != "nu") claims.push_back(parts::mu_claim(cong_max));
            if (which != "mu") claims.push_back(parts::nu_claim(cong_max));
            bool ok = true;
            json jclaims = json::array();
            for (const auto& c : claims) {
                const auto viol = parts::congruence_scan(c);
                ok = ok && viol.empty();
                if (format == "json") {
                    json jc;
                    jc["name"] = c.name;
                    jc["limit"] = c.limit;
                    jc["violations"] = json::array();
                    for (const auto& v : viol)
                        jc["violations"].push_back(
                            {{"n", v.n}, {"lhs", v.lhs_residue}, {"rhs", v.rhs_residue}});
                    jclaims.push_back(jc);
                } else {
                    std::cout << c.name << "\tviolations\t" << viol.size() << "\n";
                    for (const auto& v : viol)
                        std::cout << "\tn=" << v.n << "\t" << v.lhs_residue << "\t"
                                  << v.rhs_residue << "\n";
                }
            }
            if (format == "json")
                std::cout << json{{"claims", jclaims}, {"ok", ok}}.dump() << "\n";
            return ok ? kOk : kMathFailure;
        }
        if (*ell) {
            if (grid) {
                const auto residuals = analytic::grid_check((long double)tol);
                bool ok = true;
                if (format == "json") {
                    json rows = json::array();
                    for (const auto& r : residuals) {
                        ok = ok && r.pass;
                        rows.push_back({{"id", r.id},
                                        {"x", (double)r.x},
                                        {"residual", (double)r.rel},
                                        {"pass", r.pass}});
                    }
                    std::cout << json{{"grid", rows}, {"ok", ok}}.dump() << "\n";
                } else {
                    for (const auto& r : residuals) {
                        ok = ok && r.pass;
                        std::cout << r.id << "\t" << (double)r.x << "\t"
                                  << (double)r.rel << "\t" << (r.pass ? "pass" : "fail")
                                  << "\n";
                    }
                }
                return ok ? kOk : kMathFailure;
            }
            const auto p = analytic::make_point((long double)ell_x);
            const double ode = (double)analytic::ode_residual(p.x);
            if (format == "json") {
                std::cout << json{{"x", (double)p.x},
                                  {"z", (double)p.z},
                                  {"y", (double)p.y},
                                  {"q", (double)p.q},
                                  {"ode_residual", ode}}
                                 .dump()
                          << "\n";
            } else {
                std::cout.precision(17);
                std::cout << "x\t" << (double)p.x << "\nz\t" << (double)p.z << "\ny\t"
                          << (double)p.y << "\nq\t" << (double)p.q
                          << "\node_residual\t" << ode << "\n";
            }
            return kOk;
        }
        if (*express) {
            if (express_order > kSeriesCeiling) {
                std::cerr << "--order out of range\n";
                return kUsage;
            }
            const ident::ExprPtr target = ident::parse_expr(target_text);
            std::vector<ident::ExprPtr> basis;
            for (const auto& part : split_exprs(basis_text))
                basis.push_back(ident::parse_expr(part));
            const auto result = ident::express_in_basis(target, basis, express_order);
            const char* status =
                result.status == ident::BasisStatus::solved       ? "solved"
                : result.status == ident::BasisStatus::no_solution ? "no_solution"
                                                                   : "degenerate";
            if (format == "json") {
                json coeffs = json::array();
                for (const auto& c : result.coeffs) coeffs.push_back(rat_str(c));
                std::cout << json{{"status", status}, {"coefficients", coeffs}}.dump()
                          << "\n";
            } else {
                std::cout << "status\t" << status << "\n";
                for (std::size_t i = 0; i < result.coeffs.size(); ++i)
                    std::cout << "c" << i << "\t" << result.coeffs[i] << "\n";
            }
            return result.status == ident::BasisStatus::solved ? kOk : kMathFailure;
        }
    } catch (const ident::ParseError& e) {
        std::cerr << "parse error at " << e.line() << ":" << e.column() << ": "
                  << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    }
    return kUsage;
}
