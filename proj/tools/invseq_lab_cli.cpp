// Command-line frontend for the workbench: enumeration, path tools, series,
// closed forms, verification, and OEIS lookups.
//
// Exit codes: 0 on success (and on an all-pass verify), 1 when a verify run
// has failing checks, 2 on usage errors.  All output is deterministic for a
// given argv; verification timings are opt-in via --elapsed.

#include <CLI11.hpp>

#include <invseq_lab/formulas.hpp>
#include <invseq_lab/invseq.hpp>
#include <invseq_lab/json_io.hpp>
#include <invseq_lab/lattice.hpp>
#include <invseq_lab/oeis.hpp>
#include <invseq_lab/series.hpp>
#include <invseq_lab/verify.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace invseq_lab;

constexpr int kMaxSequenceLength = 14;
constexpr int kMaxSemilength = 12;
constexpr int kMaxSeriesXBound = 24;

void enforce_cap(const std::string& what, int value, int cap, bool force) {
    if (value > cap && !force) {
        throw CLI::ValidationError(what + " " + std::to_string(value) +
                                   " exceeds the safety cap " + std::to_string(cap) +
                                   "; pass --force to override");
    }
}

std::vector<PatternWord> parse_patterns(const std::string& spec) {
    std::vector<PatternWord> patterns;
    std::stringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (!token.empty()) patterns.push_back(PatternWord::from_digits(token));
    }
    if (patterns.empty()) throw CLI::ValidationError("--patterns needs at least one word");
    return patterns;
}

std::string rank_label(int t) { return t < 0 ? "undefined" : std::to_string(t); }

struct CountOptions {
    std::string patterns = "102,000";
    int n = 0;
    std::vector<std::string> group_by;
    std::string format = "table";
    bool force = false;
};

int run_count(const CountOptions& opt) {
    enforce_cap("--n", opt.n, kMaxSequenceLength, opt.force);
    const auto patterns = parse_patterns(opt.patterns);
    bool by_dist = false, by_rank = false;
    for (const auto& key : opt.group_by) {
        if (key == "dist") by_dist = true;
        else if (key == "rank") by_rank = true;
        else throw CLI::ValidationError("--group-by accepts dist and rank, not '" + key + "'");
    }

    CountTable table;
    enumerate_avoiding(opt.n, patterns, EnumFilter{}, [&](const InversionSequence& e) {
        const auto t = try_rank(e);
        table.add(opt.n, dist(e), t ? *t : -1);
    });

    if (opt.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& [key, c] : table.cells()) {
            const auto& [n, m, t] = key;
            nlohmann::ordered_json row;
            row["n"] = n;
            row["m"] = m;
            row["t"] = t;
            row["count"] = to_decimal(c);
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
        return 0;
    }
    if (opt.format != "table") throw CLI::ValidationError("--format must be table or json");

    if (by_dist && by_rank) {
        for (const auto& [key, c] : table.cells()) {
            const auto& [n, m, t] = key;
            (void)n;
            std::cout << "m=" << m << " t=" << rank_label(t) << ": " << to_decimal(c) << "\n";
        }
    } else if (by_dist) {
        std::map<int, Int> rows;
        for (const auto& [key, c] : table.cells()) rows[std::get<1>(key)] += c;
        for (const auto& [m, c] : rows) std::cout << "m=" << m << ": " << to_decimal(c) << "\n";
    } else if (by_rank) {
        std::map<int, Int> rows;
        for (const auto& [key, c] : table.cells()) rows[std::get<2>(key)] += c;
        for (const auto& [t, c] : rows) {
            std::cout << "t=" << rank_label(t) << ": " << to_decimal(c) << "\n";
        }
    } else {
        std::cout << to_decimal(table.total()) << "\n";
    }
    return 0;
}

struct EnumerateOptions {
    std::string patterns = "102,000";
    int n = 0;
    std::optional<int> dist;
    std::optional<int> rank;
    std::optional<long long> limit;
    bool force = false;
};

int run_enumerate(const EnumerateOptions& opt) {
    enforce_cap("--n", opt.n, kMaxSequenceLength, opt.force);
    const auto patterns = parse_patterns(opt.patterns);
    EnumFilter filter;
    filter.dist = opt.dist;
    filter.rank = opt.rank;

    struct Done {};
    long long emitted = 0;
    try {
        enumerate_avoiding(opt.n, patterns, filter, [&](const InversionSequence& e) {
            std::cout << nlohmann::json(e).dump() << "\n";
            if (opt.limit && ++emitted >= *opt.limit) throw Done{};
        });
    } catch (const Done&) {
    }
    return 0;
}

struct PathsOptions {
    std::string kind;
    int semilength = 0;
    std::optional<int> height;
    std::optional<int> ud;
    std::optional<std::string> cls;
    bool force = false;
};

int run_paths(const PathsOptions& opt) {
    enforce_cap("--semilength", opt.semilength, kMaxSemilength, opt.force);
    PathFilter filter;
    filter.height = opt.height;
    filter.ud = opt.ud;
    if (opt.cls) {
        if (*opt.cls == "A") filter.cls = PathClass::A;
        else if (*opt.cls == "D") filter.cls = PathClass::D;
        else if (*opt.cls == "B") filter.cls = PathClass::B;
        else throw CLI::ValidationError("--class must be A, D, or B");
    }

    PathKind kind;
    if (opt.kind == "labeled-f") kind = PathKind::labeled_f;
    else if (opt.kind == "weighted-h") kind = PathKind::weighted_h;
    else if (opt.kind == "simple-h") kind = PathKind::simple_h;
    else throw CLI::ValidationError("--kind must be labeled-f, weighted-h, or simple-h");

    PathVisitor visitor;
    visitor.on_fpath = [](const LabeledFPath& q) { std::cout << nlohmann::json(q).dump() << "\n"; };
    visitor.on_walk = [](const WeightedHWalk& r) { std::cout << nlohmann::json(r).dump() << "\n"; };
    visitor.on_simple = [](const SimpleHPath& p) { std::cout << nlohmann::json(p).dump() << "\n"; };
    enumerate_paths(kind, opt.semilength, filter, visitor);
    return 0;
}

int run_eta(const std::string& direction) {
    nlohmann::json input;
    try {
        input = nlohmann::json::parse(std::cin);
    } catch (const nlohmann::json::exception& ex) {
        throw CLI::ValidationError(std::string("stdin is not a JSON path: ") + ex.what());
    }
    if (direction == "forward") {
        std::cout << nlohmann::json(eta(input.get<LabeledFPath>())).dump() << "\n";
    } else if (direction == "inverse") {
        std::cout << nlohmann::json(eta_inv(input.get<WeightedHWalk>())).dump() << "\n";
    } else {
        throw CLI::ValidationError("--direction must be forward or inverse");
    }
    return 0;
}

struct SeriesOptions {
    std::string emit;
    int max_x = kDefaultSeriesBounds.nx;
    int max_y = kDefaultSeriesBounds.ny;
    int max_z = kDefaultSeriesBounds.nz;
    std::vector<int> coeff;
    bool force = false;
};

int run_series(const SeriesOptions& opt) {
    enforce_cap("--max-x", opt.max_x, kMaxSeriesXBound, opt.force);
    if (opt.max_x < 0 || opt.max_y < 0 || opt.max_z < 0) {
        throw CLI::ValidationError("series bounds must be nonnegative");
    }

    TruncatedSeries series = [&] {
        if (opt.emit == "B") return solve_B(opt.max_x, opt.max_y);
        const auto chain = derive_chain(solve_B(opt.max_x + 1, opt.max_y));
        if (opt.emit == "A") return chain.A;
        if (opt.emit == "D0") return chain.D0;
        if (opt.emit == "E") return chain.E;
        if (opt.emit == "g") return specialized_e(chain.E, AlgebraicSeries::e_1y1);
        if (opt.emit == "G0") return specialized_e(chain.E, AlgebraicSeries::e_1y0);
        if (opt.emit == "F") return specialized_e(chain.E, AlgebraicSeries::e_x11);
        throw CLI::ValidationError("--emit must be one of B, A, D0, E, g, G0, F");
    }();
    if (opt.max_z < series.bounds().nz) {
        series = series.truncated_to(
            SeriesBounds{series.bounds().nx, series.bounds().ny, opt.max_z});
    }

    if (!opt.coeff.empty()) {
        if (opt.coeff.size() != 3) throw CLI::ValidationError("--coeff needs n,m,t");
        std::cout << to_decimal(series.coeff(opt.coeff[0], opt.coeff[1], opt.coeff[2])) << "\n";
        return 0;
    }
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, c] : series.coeffs()) {
        nlohmann::ordered_json term;
        term["x"] = key[0];
        term["y"] = key[1];
        term["z"] = key[2];
        term["c"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    std::cout << terms.dump() << "\n";
    return 0;
}

struct FormulaOptions {
    std::string which;
    std::vector<int> args;
};

int run_formula(const FormulaOptions& opt) {
    const auto need = [&](std::size_t count, const char* usage) {
        if (opt.args.size() != count) {
            throw CLI::ValidationError(std::string("--which ") + opt.which + " needs --args " +
                                       usage);
        }
    };
    Int value;
    if (opt.which == "b") {
        need(2, "n,m");
        value = b_closed(opt.args[0], opt.args[1]);
    } else if (opt.which == "dist") {
        need(2, "n,m");
        value = count_dist_closed(opt.args[0], opt.args[1]);
    } else if (opt.which == "fuss3") {
        need(1, "m");
        value = fuss3(opt.args[0]);
    } else if (opt.which == "dist-rank") {
        need(2, "m,t");
        value = dist_rank_count(opt.args[0], opt.args[1]);
    } else if (opt.which == "dist-total") {
        need(1, "m");
        value = dist_total(opt.args[0]);
    } else {
        throw CLI::ValidationError("--which must be b, dist, fuss3, dist-rank, or dist-total");
    }
    std::cout << to_decimal(value) << "\n";
    return 0;
}

struct VerifyCliOptions {
    std::string what;
    bool offline = false;
    std::optional<int> max_n;
    std::string out;
    bool elapsed = false;
    int threads = 0;
};

int run_verify(const VerifyCliOptions& opt) {
    const VerifyOptions options{opt.threads};
    VerificationReport report;
    if (opt.what == "table1") {
        report = verify_table1(opt.max_n.value_or(16), options);
    } else if (opt.what == "bijections") {
        report = verify_bijections(opt.max_n.value_or(9), options);
    } else if (opt.what == "minpoly") {
        report = verify_minpolys(SeriesBounds{14, 8, 8}, options);
    } else if (opt.what == "oeis") {
        report = verify_oeis(opt.offline, options);
    } else if (opt.what == "all") {
        report = verify_all(opt.offline, options);
    } else {
        throw CLI::ValidationError("verify target must be table1, bijections, minpoly, oeis, or all");
    }

    const std::string dump = report_json(report, opt.elapsed).dump(2);
    if (opt.out.empty()) {
        std::cout << dump << "\n";
    } else {
        std::ofstream out(opt.out, std::ios::trunc);
        out << dump << "\n";
        if (!out) throw std::runtime_error("cannot write report to " + opt.out);
    }
    return report.all_pass() ? 0 : 1;
}

struct OeisCliOptions {
    std::string id;
    int terms = 10;
    bool offline = false;
};

int run_oeis(const OeisCliOptions& opt) {
    OeisClient client;
    const BSequence seq = client.fetch(opt.id, opt.offline);
    int shown = 0;
    for (const auto& entry : seq.entries) {
        if (shown++ >= opt.terms) break;
        std::cout << entry.index << " " << to_decimal(entry.value) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for pattern-avoiding inversion sequences, their lattice-path "
                 "companions, and the generating functions tying them together"};
    app.require_subcommand(1);
    app.fallthrough();
    int exit_code = 0;

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for verification (default: all hardware threads)");

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "count avoiders of the given patterns at length n");
    count->add_option("--patterns", count_opt.patterns, "comma-separated pattern words");
    count->add_option("--n", count_opt.n, "sequence length")->required();
    count->add_option("--group-by", count_opt.group_by, "group counts by dist and/or rank")
        ->delimiter(',');
    count->add_option("--format", count_opt.format, "table or json");
    count->add_flag("--force", count_opt.force, "override the length safety cap");
    count->callback([&] { exit_code = run_count(count_opt); });

    EnumerateOptions enum_opt;
    auto* enumerate =
        app.add_subcommand("enumerate", "list avoiders of the given patterns, one JSON array per line");
    enumerate->add_option("--patterns", enum_opt.patterns, "comma-separated pattern words");
    enumerate->add_option("--n", enum_opt.n, "sequence length")->required();
    enumerate->add_option("--dist", enum_opt.dist, "keep sequences with this many distinct values");
    enumerate->add_option("--rank", enum_opt.rank, "keep sequences with this rank");
    enumerate->add_option("--limit", enum_opt.limit, "stop after this many sequences");
    enumerate->add_flag("--force", enum_opt.force, "override the length safety cap");
    enumerate->callback([&] { exit_code = run_enumerate(enum_opt); });

    PathsOptions paths_opt;
    auto* paths = app.add_subcommand("paths", "list paths of a given semilength, one JSON object per line");
    paths->add_option("--kind", paths_opt.kind, "labeled-f, weighted-h, or simple-h")->required();
    paths->add_option("--semilength", paths_opt.semilength, "path semilength")->required();
    paths->add_option("--height", paths_opt.height, "keep paths with this final height");
    paths->add_option("--ud", paths_opt.ud, "keep simple paths with this many up and down steps");
    paths->add_option("--class", paths_opt.cls, "keep paths of this class: A, D, or B");
    paths->add_flag("--force", paths_opt.force, "override the semilength safety cap");
    paths->callback([&] { exit_code = run_paths(paths_opt); });

    std::string eta_direction;
    auto* eta_cmd = app.add_subcommand("eta", "apply the path substitution to a JSON path on stdin");
    eta_cmd->add_option("--direction", eta_direction, "forward or inverse")->required();
    eta_cmd->callback([&] { exit_code = run_eta(eta_direction); });

    SeriesOptions series_opt;
    auto* series = app.add_subcommand("series", "emit a generating function as a JSON term list");
    series->add_option("--emit", series_opt.emit, "B, A, D0, E, g, G0, or F")->required();
    series->add_option("--max-x", series_opt.max_x, "x truncation bound");
    series->add_option("--max-y", series_opt.max_y, "y truncation bound");
    series->add_option("--max-z", series_opt.max_z, "z truncation bound");
    series->add_option("--coeff", series_opt.coeff, "print one coefficient n,m,t instead")
        ->delimiter(',');
    series->add_flag("--force", series_opt.force, "override the x bound safety cap");
    series->callback([&] { exit_code = run_series(series_opt); });

    FormulaOptions formula_opt;
    auto* formula = app.add_subcommand("formula", "evaluate a closed form");
    formula->add_option("--which", formula_opt.which, "b, dist, fuss3, dist-rank, or dist-total")
        ->required();
    formula->add_option("--args", formula_opt.args, "integer arguments")->delimiter(',');
    formula->callback([&] { exit_code = run_formula(formula_opt); });

    VerifyCliOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run cross-route checks and print a JSON report");
    verify->add_option("what", verify_opt.what, "table1, bijections, minpoly, oeis, or all")
        ->required();
    verify->add_flag("--offline", verify_opt.offline, "use bundled OEIS fixtures, no network");
    verify->add_option("--max-n", verify_opt.max_n, "override the route size cap");
    verify->add_option("--out", verify_opt.out, "write the report to a file instead of stdout");
    verify->add_flag("--elapsed", verify_opt.elapsed, "include per-check timings in the report");
    verify->callback([&] {
        verify_opt.threads = threads;
        exit_code = run_verify(verify_opt);
    });

    OeisCliOptions oeis_opt;
    auto* oeis = app.add_subcommand("oeis", "print leading b-file terms for a sequence id");
    oeis->add_option("--id", oeis_opt.id, "sequence id, 'A' plus six digits")->required();
    oeis->add_option("--terms", oeis_opt.terms, "how many terms to print");
    oeis->add_flag("--offline", oeis_opt.offline, "use cache and bundled fixtures only");
    oeis->callback([&] { exit_code = run_oeis(oeis_opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return exit_code;
}
