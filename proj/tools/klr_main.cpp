#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "klr/closed_form.hpp"
#include "klr/deodhar.hpp"
#include "klr/errors.hpp"
#include "klr/permutation.hpp"
#include "klr/polynomial.hpp"
#include "klr/quotient.hpp"
#include "klr/statistics.hpp"
#include "klr/verify.hpp"

namespace {

using klr::GeneratorSubset;
using klr::IntPolynomial;
using klr::ParabolicInterval;
using klr::Permutation;

// "k..i" -> interval
ParabolicInterval parse_excluded(int n, const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) {
        throw klr::ParseError("--excluded expects the form k..i, got '" + text + "'");
    }
    try {
        const int k = std::stoi(text.substr(0, sep));
        const int i = std::stoi(text.substr(sep + 2));
        return ParabolicInterval(n, k, i);
    } catch (const klr::Error&) {
        throw;
    } catch (const std::exception&) {
        throw klr::ParseError("--excluded expects integers in k..i, got '" + text + "'");
    }
}

// "1,2,4" or "none" -> subset
GeneratorSubset parse_subset(int n, const std::string& text) {
    if (text == "none" || text.empty()) return GeneratorSubset::empty(n);
    std::vector<int> indices;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        try {
            indices.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw klr::ParseError("cannot parse generator index '" + piece + "'");
        }
    }
    return GeneratorSubset::of(n, std::move(indices));
}

Permutation parse_perm_checked(int n, const std::string& text, const char* flag) {
    Permutation u = Permutation::parse(text);
    if (u.degree() != n) {
        throw klr::ParseError(std::string(flag) + " has degree " + std::to_string(u.degree()) +
                              " but --n is " + std::to_string(n));
    }
    return u;
}

nlohmann::json poly_to_json(const IntPolynomial& p) {
    nlohmann::json j;
    j["coeffs"] = p.coeffs_int64();
    j["text"] = p.to_string();
    return j;
}

struct ComputeArgs {
    int n = 0;
    std::string u_text;
    std::string v_text;
    std::string excluded;
    std::string subset;
    std::string x = "q";
    std::string method = "both";
    std::string format = "text";
};

int run_compute(const ComputeArgs& args) {
    const Permutation u = parse_perm_checked(args.n, args.u_text, "--u");
    const Permutation v = parse_perm_checked(args.n, args.v_text, "--v");
    if (!args.excluded.empty() && !args.subset.empty()) {
        throw klr::ParseError("--excluded and --J cannot be combined");
    }
    if (args.excluded.empty() && args.subset.empty()) {
        throw klr::ParseError("one of --excluded or --J is required");
    }
    const klr::XMode x = (args.x == "q") ? klr::XMode::Q : klr::XMode::MinusOne;

    std::optional<ParabolicInterval> interval;
    GeneratorSubset J = GeneratorSubset::empty(args.n);
    if (!args.excluded.empty()) {
        interval = parse_excluded(args.n, args.excluded);
        J = interval->to_subset();
    } else {
        J = parse_subset(args.n, args.subset);
    }

    const bool want_recursion = args.method == "recursion" || args.method == "both";
    const bool want_closed = args.method == "closed" || args.method == "both";
    if (want_closed && !interval) {
        throw klr::ParseError("--method closed/both needs an interval (--excluded k..i); "
                              "the product formulas do not cover arbitrary --J");
    }

    std::optional<IntPolynomial> recursion_result;
    if (want_recursion) {
        klr::RContext ctx(args.n, J, x);
        recursion_result = ctx.r_poly(u, v);
    }

    std::optional<IntPolynomial> closed_result;
    if (want_closed) {
        IntPolynomial closed_q = klr::r_closed(u, v, *interval);
        if (x == klr::XMode::Q) {
            closed_result = std::move(closed_q);
        } else {
            // x = -1 via the reversal identity applied to the q-form
            const int L = v.length() - u.length();
            if (closed_q.is_zero()) {
                closed_result = IntPolynomial::zero();
            } else {
                IntPolynomial rev = closed_q.reversed(L);
                closed_result = (L % 2 != 0) ? -rev : rev;
            }
        }
    }

    const bool both = want_recursion && want_closed;
    const bool agree = !both || *recursion_result == *closed_result;

    if (args.format == "json") {
        nlohmann::json out;
        out["n"] = args.n;
        out["u"] = u.to_string();
        out["v"] = v.to_string();
        if (interval) {
            out["excluded"] = interval->to_string();
        } else {
            out["J"] = J.indices();
        }
        out["x"] = args.x;
        out["method"] = args.method;
        if (recursion_result) out["recursion"] = poly_to_json(*recursion_result);
        if (closed_result) out["closed"] = poly_to_json(*closed_result);
        if (both) out["agree"] = agree;
        std::cout << out.dump(2) << "\n";
    } else {
        if (both) {
            std::cout << "recursion: " << recursion_result->to_string() << "\n";
            std::cout << "closed:    " << closed_result->to_string() << "\n";
            std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
        } else if (recursion_result) {
            std::cout << recursion_result->to_string() << "\n";
        } else {
            std::cout << closed_result->to_string() << "\n";
        }
    }
    return agree ? 0 : 2;
}

struct StatsArgs {
    int n = 0;
    std::string u_text;
    std::string v_text;
    std::string excluded;
    std::string format = "json";
};

int run_stats(const StatsArgs& args) {
    const Permutation u = parse_perm_checked(args.n, args.u_text, "--u");
    const Permutation v = parse_perm_checked(args.n, args.v_text, "--v");
    if (args.excluded.empty()) throw klr::ParseError("stats requires --excluded k..i");
    const ParabolicInterval interval = parse_excluded(args.n, args.excluded);
    const klr::PairContext ctx = klr::PairContext::make(u, v, interval);

    std::vector<int> a_plain(ctx.a.begin() + 1, ctx.a.end());  // a_1..a_n
    if (args.format == "json") {
        nlohmann::json out;
        out["n"] = args.n;
        out["u"] = u.to_string();
        out["v"] = v.to_string();
        out["excluded"] = interval.to_string();
        out["A"] = ctx.A;
        out["B"] = ctx.B;
        out["a"] = a_plain;
        out["D"] = ctx.D;
        std::cout << out.dump(2) << "\n";
    } else {
        auto render = [](const std::vector<int>& xs) {
            std::string s = "{";
            for (std::size_t idx = 0; idx < xs.size(); ++idx) {
                if (idx > 0) s += ",";
                s += std::to_string(xs[idx]);
            }
            return s + "}";
        };
        std::cout << "A = " << render(ctx.A) << "\n";
        std::cout << "B = " << render(ctx.B) << "\n";
        std::cout << "a = " << render(a_plain) << "\n";
        std::cout << "D = " << render(ctx.D) << "\n";
    }
    return 0;
}

struct EnumerateArgs {
    int n = 0;
    std::string excluded;
    std::string subset;
    std::string format = "lines";
};

int run_enumerate(const EnumerateArgs& args) {
    if (!args.excluded.empty() && !args.subset.empty()) {
        throw klr::ParseError("--excluded and --J cannot be combined");
    }
    GeneratorSubset J = GeneratorSubset::empty(args.n);
    if (!args.excluded.empty()) {
        J = parse_excluded(args.n, args.excluded).to_subset();
    } else if (!args.subset.empty()) {
        J = parse_subset(args.n, args.subset);
    } else {
        throw klr::ParseError("one of --excluded or --J is required");
    }
    const std::vector<Permutation> quotient = klr::enumerate_quotient(args.n, J);
    if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const Permutation& w : quotient) {
            arr.push_back({{"perm", w.to_string()}, {"length", w.length()}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const Permutation& w : quotient) {
            std::cout << w.to_string() << "\t" << w.length() << "\n";
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    int n = 0;
    std::string family;
    int i = -1;
    int k = -1;
    std::string subset;
    std::string excluded;
    std::string sample;
    std::string out_path;
    int jobs = 1;
};

klr::Family parse_family(const std::string& name) {
    if (name == "single") return klr::Family::Single;
    if (name == "double") return klr::Family::Double;
    if (name == "triple") return klr::Family::Triple;
    if (name == "conjecture") return klr::Family::Conjecture;
    throw klr::ParseError("unknown family '" + name + "'");
}

int run_verify(const VerifyArgs& args) {
    std::optional<int> i;
    if (args.i >= 0) i = args.i;
    std::optional<int> k;
    if (args.k >= 0) k = args.k;

    GeneratorSubset J = GeneratorSubset::empty(args.n);
    if (!args.excluded.empty() && !args.subset.empty()) {
        throw klr::ParseError("--excluded and --J cannot be combined");
    }
    if (!args.excluded.empty()) {
        J = parse_excluded(args.n, args.excluded).to_subset();
    } else if (!args.subset.empty()) {
        J = parse_subset(args.n, args.subset);
    }

    std::optional<klr::SampleSpec> sample;
    if (!args.sample.empty()) {
        const auto sep = args.sample.find(':');
        if (sep == std::string::npos) {
            throw klr::ParseError("--sample expects seed:count, got '" + args.sample + "'");
        }
        try {
            sample = klr::SampleSpec{std::stoull(args.sample.substr(0, sep)),
                                     std::stoull(args.sample.substr(sep + 1))};
        } catch (const std::exception&) {
            throw klr::ParseError("--sample expects integers seed:count");
        }
        if (sample->count == 0) throw klr::ParseError("--sample count must be positive");
    }

    klr::VerificationReport report;
    if (args.suite == "family") {
        if (args.family.empty()) throw klr::ParseError("--suite family requires --family");
        report = klr::verify_family(args.n, parse_family(args.family), i, k, args.jobs);
    } else if (args.suite == "duality") {
        if (args.excluded.empty() && args.subset.empty()) {
            throw klr::ParseError("--suite duality requires --J or --excluded");
        }
        report = klr::verify_duality(args.n, J, args.jobs);
    } else if (args.suite == "descent") {
        if (args.excluded.empty() && args.subset.empty()) {
            throw klr::ParseError("--suite descent requires --J or --excluded");
        }
        report = klr::verify_descent_independence(args.n, J, args.jobs);
    } else if (args.suite == "overlap") {
        report = klr::verify_branch_overlap(args.n, i, args.jobs);
    } else if (args.suite == "conjecture") {
        report = klr::conjecture_scan(args.n, sample, args.jobs);
    } else {
        throw klr::ParseError("unknown suite '" + args.suite + "'");
    }

    const std::string json = report.to_json();
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) throw klr::Error("cannot open --out path " + args.out_path);
        out << json << "\n";
    } else {
        std::cout << json << "\n";
    }
    std::cerr << report.summary_line() << "\n";
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic Kazhdan-Lusztig R-polynomials for the symmetric group:\n"
                 "exact recursion, closed product formulas, and verification suites."};
    app.require_subcommand(1);

    ComputeArgs cargs;
    CLI::App* compute = app.add_subcommand(
        "compute", "Compute R(u, v) by the recursion and/or the closed product formula");
    compute->add_option("--n", cargs.n, "Group degree")->required();
    compute->add_option("--u", cargs.u_text, "Lower permutation (one-line)")->required();
    compute->add_option("--v", cargs.v_text, "Upper permutation (one-line)")->required();
    compute->add_option("--excluded", cargs.excluded, "Excluded generator run k..i");
    compute->add_option("--J", cargs.subset, "Generator subset J, e.g. 1,2,4 or 'none'");
    compute->add_option("--x", cargs.x, "Parameter x: q or -1")
        ->check(CLI::IsMember({"q", "-1"}));
    compute->add_option("--method", cargs.method, "recursion | closed | both")
        ->check(CLI::IsMember({"recursion", "closed", "both"}));
    compute->add_option("--format", cargs.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    StatsArgs sargs;
    CLI::App* stats = app.add_subcommand(
        "stats", "Print the pair statistics A, B, a-vector, D for (u, v)");
    stats->add_option("--n", sargs.n, "Group degree")->required();
    stats->add_option("--u", sargs.u_text, "Lower permutation")->required();
    stats->add_option("--v", sargs.v_text, "Upper permutation")->required();
    stats->add_option("--excluded", sargs.excluded, "Excluded generator run k..i")->required();
    stats->add_option("--format", sargs.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    EnumerateArgs eargs;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List the minimal coset representatives for J");
    enumerate->add_option("--n", eargs.n, "Group degree")->required();
    enumerate->add_option("--excluded", eargs.excluded, "Excluded generator run k..i");
    enumerate->add_option("--J", eargs.subset, "Generator subset J, e.g. 1,2,4 or 'none'");
    enumerate->add_option("--format", eargs.format, "lines | json")
        ->check(CLI::IsMember({"lines", "json"}));

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run a verification suite and emit a JSON report");
    verify->add_option("--suite", vargs.suite, "family | duality | descent | overlap | conjecture")
        ->required()
        ->check(CLI::IsMember({"family", "duality", "descent", "overlap", "conjecture"}));
    verify->add_option("--n", vargs.n, "Group degree")->required();
    verify->add_option("--family", vargs.family, "single | double | triple | conjecture");
    verify->add_option("--i", vargs.i, "Generator index i (omit to run all admissible)");
    verify->add_option("--k", vargs.k, "Interval start k (conjecture family only)");
    verify->add_option("--J", vargs.subset, "Generator subset J for duality/descent");
    verify->add_option("--excluded", vargs.excluded, "Excluded run k..i for duality/descent");
    verify->add_option("--sample", vargs.sample, "Sampled conjecture mode, seed:count");
    verify->add_option("--out", vargs.out_path, "Write the JSON report to this path");
    verify->add_option("--jobs", vargs.jobs, "Worker threads")->check(CLI::Range(1, 16));

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(cargs);
        if (stats->parsed()) return run_stats(sargs);
        if (enumerate->parsed()) return run_enumerate(eargs);
        if (verify->parsed()) return run_verify(vargs);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const klr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
