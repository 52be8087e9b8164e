#pragma once

// Cross-route reconciliation harness.  Every check recomputes one quantity
// along two or more independent routes (closed form, series coefficient,
// exhaustive generation, published b-file) and passes only on exact
// agreement.  Checks are independent and may run on a thread pool; the
// report always lists them in registry order, so equal inputs give equal
// reports byte for byte (elapsed times excluded).

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "invseq_lab/bigint.hpp"
#include "invseq_lab/formulas.hpp"
#include "invseq_lab/invseq.hpp"
#include "invseq_lab/lattice.hpp"
#include "invseq_lab/oeis.hpp"
#include "invseq_lab/reference_counts.hpp"
#include "invseq_lab/series.hpp"

namespace invseq_lab {

struct CheckResult {
    std::string name;
    std::string ref;  // the identity the check enforces, in words or formula
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double elapsed_s = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
};

struct VerifyOptions {
    int threads = 0;  // <= 0: one per hardware thread
};

namespace detail {

struct CheckBody {
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct CheckSpec {
    std::string name;
    std::string ref;
    std::function<CheckBody()> run;
};

// Exact comparison of two keyed integer families.  On agreement both
// summaries carry the cell count and total; on the first mismatch they carry
// the offending key and the two values.
template <typename Key>
CheckBody compare_cells(const std::map<Key, Int>& got, const std::map<Key, Int>& want,
                        const std::function<std::string(const Key&)>& show_key) {
    CheckBody body;
    for (const auto& [key, value] : want) {
        auto it = got.find(key);
        const Int& lhs = it == got.end() ? Int(0) : it->second;
        if (lhs != value) {
            body.pass = false;
            body.lhs = show_key(key) + " = " + to_decimal(lhs);
            body.rhs = show_key(key) + " = " + to_decimal(value);
            return body;
        }
    }
    for (const auto& [key, value] : got) {
        if (value != 0 && want.find(key) == want.end()) {
            body.pass = false;
            body.lhs = show_key(key) + " = " + to_decimal(value);
            body.rhs = show_key(key) + " absent";
            return body;
        }
    }
    Int total = 0;
    for (const auto& [key, value] : want) total += value;
    body.pass = true;
    body.lhs = std::to_string(want.size()) + " cells, total " + to_decimal(total);
    body.rhs = body.lhs;
    return body;
}

inline VerificationReport run_checks(std::vector<CheckSpec> specs, const VerifyOptions& options) {
    VerificationReport report;
    report.checks.resize(specs.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            const auto start = std::chrono::steady_clock::now();
            CheckBody body;
            try {
                body = specs[i].run();
            } catch (const std::exception& ex) {
                body = CheckBody{false, std::string("exception: ") + ex.what(), ""};
            }
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            report.checks[i] = CheckResult{specs[i].name, specs[i].ref, body.pass,
                                           body.lhs,      body.rhs,     elapsed.count()};
        }
    };

    int threads = options.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(specs.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return report;
}

inline std::vector<PatternWord> avoided_patterns() {
    return {PatternWord::from_digits("102"), PatternWord::from_digits("000")};
}

inline std::map<std::pair<int, int>, Int> grid_cells(int n_max) {
    std::map<std::pair<int, int>, Int> want;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= kDistGridMaxM; ++m)
            want[{n, m}] = Int(kDistCountGrid[static_cast<std::size_t>(n - 1)]
                                             [static_cast<std::size_t>(m - 1)]);
    return want;
}

inline std::string show_nm(const std::pair<int, int>& key) {
    return "(n=" + std::to_string(key.first) + ", m=" + std::to_string(key.second) + ")";
}

inline std::vector<CheckSpec> table1_checks(int n_max) {
    n_max = std::clamp(n_max, 1, kDistGridMaxN);
    std::vector<CheckSpec> specs;

    specs.push_back(CheckSpec{
        "closed form reproduces the dist count grid",
        "count(n,m) = b(n+1,m) + sum over k,l of b(k,l)*b(n-k,m-l)",
        [n_max] {
            std::map<std::pair<int, int>, Int> got;
            for (int n = 1; n <= n_max; ++n)
                for (int m = 1; m <= kDistGridMaxM; ++m) got[{n, m}] = count_dist_closed(n, m);
            return compare_cells<std::pair<int, int>>(got, grid_cells(n_max), show_nm);
        }});

    specs.push_back(CheckSpec{
        "series coefficients reproduce the dist count grid",
        "sum over t of [x^n y^m z^t] E(x,y,z) = count(n,m)",
        [n_max] {
            const auto E = derive_chain(solve_B(n_max + 1, kDistGridMaxM + 1)).E;
            std::map<std::pair<int, int>, Int> got;
            for (int n = 1; n <= n_max; ++n)
                for (int m = 1; m <= kDistGridMaxM; ++m) {
                    Int sum = 0;
                    for (int t = 0; t <= E.bounds().nz; ++t) sum += E.coeff(n, m, t);
                    got[{n, m}] = sum;
                }
            return compare_cells<std::pair<int, int>>(got, grid_cells(n_max), show_nm);
        }});

    specs.push_back(CheckSpec{
        "exhaustive enumeration reproduces the dist count grid",
        "direct generation of avoiders of 102 and 000, grouped by dist",
        [n_max] {
            const int cap = std::min(n_max, 11);
            const auto table = count_table(cap, avoided_patterns());
            std::map<std::pair<int, int>, Int> got;
            for (int n = 1; n <= cap; ++n)
                for (int m = 1; m <= kDistGridMaxM; ++m) got[{n, m}] = table.marginal(n, m, -1);
            return compare_cells<std::pair<int, int>>(got, grid_cells(cap), show_nm);
        }});

    specs.push_back(CheckSpec{
        "grid column totals match the closed form and the specialized series",
        "sum over n of count(n,m) = C(4m+2,m)/(2m+1) = [y^m] E(1,y,1)",
        [] {
            const auto E = derive_chain(solve_B(2 * kDistGridMaxM + 1, kDistGridMaxM + 1)).E;
            const auto g = specialized_e(E, AlgebraicSeries::e_1y1);
            for (int m = 1; m <= kDistGridMaxM; ++m) {
                const Int want(kDistColumnTotals[static_cast<std::size_t>(m - 1)]);
                const Int closed = dist_total(m);
                const Int coeff = m <= g.bounds().ny ? g.coeff(0, m, 0) : Int(-1);
                if (closed != want || coeff != want) {
                    return CheckBody{false,
                                     "m=" + std::to_string(m) + ": closed " + to_decimal(closed) +
                                         ", series " + to_decimal(coeff),
                                     "m=" + std::to_string(m) + ": " + to_decimal(want)};
                }
            }
            const std::string digest = "totals for m=1..8 on both routes";
            return CheckBody{true, digest, digest};
        }});

    return specs;
}

inline std::vector<CheckSpec> bijection_checks(int n_max) {
    n_max = std::max(n_max, 0);
    std::vector<CheckSpec> specs;

    const int eta_cap = std::min(n_max, 5);
    specs.push_back(CheckSpec{
        "eta inverts to the identity on labeled paths",
        "eta_inv(eta(q)) = q for every labeled path of semilength <= " + std::to_string(eta_cap),
        [eta_cap] {
            long long paths = 0;
            for (int n = 0; n <= eta_cap; ++n) {
                for (const auto& q : all_labeled_paths(n)) {
                    ++paths;
                    if (!(eta_inv(eta(q)) == q)) {
                        return CheckBody{false, "round trip moved a path of semilength " +
                                                    std::to_string(n),
                                         "identity"};
                    }
                }
            }
            const std::string digest = std::to_string(paths) + " paths return to themselves";
            return CheckBody{true, digest, digest};
        }});

    specs.push_back(CheckSpec{
        "eta lands in valid walks and preserves semilength and height",
        "eta maps labeled paths into weighted walks, fixing semilength and height",
        [eta_cap] {
            long long paths = 0;
            for (int n = 0; n <= eta_cap; ++n) {
                for (const auto& q : all_labeled_paths(n)) {
                    ++paths;
                    const auto r = eta(q);
                    validate(r);
                    if (semilength(r) != n || height(r) != height(q)) {
                        return CheckBody{false,
                                         "image stats (" + std::to_string(semilength(r)) + ", " +
                                             std::to_string(height(r)) + ")",
                                         "source stats (" + std::to_string(n) + ", " +
                                             std::to_string(height(q)) + ")"};
                    }
                }
            }
            const std::string digest = std::to_string(paths) + " images valid, stats preserved";
            return CheckBody{true, digest, digest};
        }});

    const int walk_cap = std::min(n_max, 7);
    specs.push_back(CheckSpec{
        "weighted walks match 102-avoiders by height and rank",
        "walks of semilength n and height t are equinumerous with 102-avoiders of length n+1 "
        "and rank t, for n <= " + std::to_string(walk_cap),
        [walk_cap] {
            std::map<std::pair<int, int>, Int> walks, avoiders;
            const auto p102 = PatternWord::from_digits("102");
            for (int n = 0; n <= walk_cap; ++n) {
                enumerate_weighted_walks(n, PathFilter{}, [&](const WeightedHWalk& r) {
                    walks[{n, height(r)}] += 1;
                });
                enumerate_avoiding(n + 1, {p102}, EnumFilter{}, [&](const InversionSequence& e) {
                    avoiders[{n, rank(e)}] += 1;
                });
            }
            return compare_cells<std::pair<int, int>>(
                walks, avoiders, [](const std::pair<int, int>& key) {
                    return "(n=" + std::to_string(key.first) +
                           ", t=" + std::to_string(key.second) + ")";
                });
        }});

    const int simple_cap = std::min(n_max, 9);
    specs.push_back(CheckSpec{
        "simple paths match avoiders of 102 and 000 by all three statistics",
        "simple paths by (semilength n, height t, ud m) are equinumerous with avoiders by "
        "(length n+1, rank t, dist m+1), for n <= " + std::to_string(simple_cap),
        [simple_cap] {
            std::map<std::array<int, 3>, Int> paths, avoiders;
            const auto table = count_table(simple_cap + 1, avoided_patterns());
            for (const auto& [key, c] : table.cells()) {
                const auto& [n, m, t] = key;
                if (n >= 1 && t >= 0) avoiders[{n - 1, t, m - 1}] = c;
            }
            for (int n = 0; n <= simple_cap; ++n) {
                enumerate_simple_paths(n, PathFilter{}, [&](const SimpleHPath& p) {
                    const auto stats = path_stats(p);
                    paths[{n, stats.height, stats.ud}] += 1;
                });
            }
            return compare_cells<std::array<int, 3>>(
                paths, avoiders, [](const std::array<int, 3>& key) {
                    return "(n=" + std::to_string(key[0]) + ", t=" + std::to_string(key[1]) +
                           ", m=" + std::to_string(key[2]) + ")";
                });
        }});

    const int cls_cap = std::min(n_max, 8);
    specs.push_back(CheckSpec{
        "final-north path counts match their closed form",
        "simple paths of semilength n and ud m that end north and do not start north are "
        "counted by b(n,m), for n <= " + std::to_string(cls_cap),
        [cls_cap] {
            std::map<std::pair<int, int>, Int> got, want;
            for (int n = 0; n <= cls_cap; ++n) {
                PathFilter filter;
                filter.cls = PathClass::B;
                enumerate_simple_paths(n, filter, [&](const SimpleHPath& p) {
                    got[{n, path_stats(p).ud}] += 1;
                });
                for (int m = 0; m <= n; ++m) {
                    const Int b = b_closed(n, m);
                    if (b != 0) want[{n, m}] = b;
                }
            }
            return compare_cells<std::pair<int, int>>(got, want, show_nm);
        }});

    const int dedup_cap = std::min(n_max, 6);
    specs.push_back(CheckSpec{
        "duplicate-maximum removal is a bijection onto unique-maximum avoiders",
        "rank-0 avoiders with dist m map one-to-one onto avoiders with dist m and a unique "
        "maximum, both of size C(4m,m)/(3m+1), for m <= " + std::to_string(dedup_cap),
        [dedup_cap] {
            for (int m = 0; m <= dedup_cap; ++m) {
                std::vector<InversionSequence> rank0;
                std::set<InversionSequence> unique_max;
                EnumFilter filter;
                if (m > 0) filter.dist = m;
                for (int n = (m == 0 ? 0 : m); n <= 2 * m; ++n) {
                    enumerate_avoiding(n, avoided_patterns(), filter,
                                       [&](const InversionSequence& e) {
                                           if (dist(e) != m) return;
                                           if (rank(e) == 0) rank0.push_back(e);
                                           if (e.empty()) {
                                               unique_max.insert(e);
                                               return;
                                           }
                                           const int mx = max_value(e);
                                           int occurrences = 0;
                                           for (int v : e.entries()) occurrences += v == mx;
                                           if (occurrences == 1) unique_max.insert(e);
                                       });
                }
                std::set<InversionSequence> images;
                for (const auto& e : rank0) images.insert(remark_dedup(e));
                if (images.size() != rank0.size() || images != unique_max ||
                    Int(static_cast<long long>(rank0.size())) != fuss3(m)) {
                    return CheckBody{false,
                                     "m=" + std::to_string(m) + ": " +
                                         std::to_string(rank0.size()) + " sources, " +
                                         std::to_string(images.size()) + " images",
                                     "m=" + std::to_string(m) + ": " +
                                         std::to_string(unique_max.size()) +
                                         " targets, fuss3 = " + to_decimal(fuss3(m))};
                }
            }
            const std::string digest = "bijective for m <= " + std::to_string(dedup_cap);
            return CheckBody{true, digest, digest};
        }});

    return specs;
}

inline std::vector<CheckSpec> minpoly_checks(const SeriesBounds& bounds) {
    std::vector<CheckSpec> specs;
    const SeriesBounds chain_bounds{bounds.nx, bounds.ny, std::min(bounds.nz, bounds.ny)};

    specs.push_back(CheckSpec{
        "derivation chain is internally consistent",
        "the rank-refined series agrees with the walk series it was decomposed from",
        [chain_bounds] {
            const auto chain = derive_chain(solve_B(chain_bounds.nx + 1, chain_bounds.ny));
            if (!(chain.E == chain.D)) {
                return CheckBody{false, "E and D differ within bounds", "E = D"};
            }
            std::ostringstream digest;
            digest << "E = D at bounds (" << chain_bounds.nx << "," << chain_bounds.ny << ","
                   << chain_bounds.nz << ")";
            return CheckBody{true, digest.str(), digest.str()};
        }});

    struct Entry {
        AlgebraicSeries which;
        const char* ref;
    };
    const std::vector<Entry> entries{
        {AlgebraicSeries::e_xyz, "quartic in E with coefficients in Z[x,y,z]"},
        {AlgebraicSeries::e_x1z, "the E(x,y,z) quartic at y = 1"},
        {AlgebraicSeries::e_xy1, "quartic in E(x,y,1) with coefficients in Z[x,y]"},
        {AlgebraicSeries::e_x11,
         "1 - (1-2x+2x^2)F + x(-1+4x-2x^2+x^3)F^2 + 2x^3(1-x)F^3 + x^4F^4 = 0"},
        {AlgebraicSeries::e_xy0, "quartic in E(x,y,0) with coefficients in Z[x,y]"},
        {AlgebraicSeries::e_x10,
         "1 - (2-2x+x^2)W + (1-x)(1+x+2x^2-x^3)W^2 - 2x(1-x)W^3 + x^2W^4 = 0"},
        {AlgebraicSeries::e_1yz,
         "1 - G + 2yz^2 G^2 + yz(1-z)(4-z) G^3 + y(yz^4 + (1-z)^3) G^4 = 0"},
        {AlgebraicSeries::e_1y0, "1 - G0 + y G0^4 = 0"},
        {AlgebraicSeries::e_1y1, "1 - g + 2y g^2 + y^2 g^4 = 0, i.e. g = (1 + y g^2)^2"},
    };

    for (const auto& entry : entries) {
        const AlgebraicSeries which = entry.which;
        specs.push_back(CheckSpec{
            std::string("minimal polynomial annihilates ") + series_name(which),
            entry.ref,
            [which, chain_bounds] {
                const auto E = derive_chain(solve_B(chain_bounds.nx + 1, chain_bounds.ny)).E;
                const auto s = specialized_e(E, which);
                const auto residual = minpoly_residual(minpoly_for(which, s.bounds()), s);
                std::ostringstream at;
                at << "(" << s.bounds().nx << "," << s.bounds().ny << "," << s.bounds().nz << ")";
                if (!residual.is_zero()) {
                    std::ostringstream lhs;
                    lhs << "nonzero residual at " << at.str() << ": " << residual;
                    return CheckBody{false, lhs.str(), "zero series"};
                }
                const std::string digest = "residual zero at bounds " + at.str();
                return CheckBody{true, digest, digest};
            }});
    }
    return specs;
}

inline std::vector<CheckSpec> oeis_checks(bool offline) {
    std::vector<CheckSpec> specs;

    struct Entry {
        const char* id;
        const char* name;
        const char* ref;
        std::function<std::vector<Int>()> produce;
        const char* alignment;
    };
    const std::vector<Entry> entries{
        {"A002293", "Fuss-Catalan numbers match A002293", "C(4m,m)/(3m+1) for m = 0..20",
         [] {
             std::vector<Int> out;
             for (int m = 0; m <= 20; ++m) out.push_back(fuss3(m));
             return out;
         },
         "terms aligned at b-file index 0 = m 0"},
        {"A069271", "dist totals match A069271", "C(4m+2,m)/(2m+1) for m = 0..20",
         [] {
             std::vector<Int> out;
             for (int m = 0; m <= 20; ++m) out.push_back(dist_total(m));
             return out;
         },
         "terms aligned at b-file index 0 = m 0"},
        {"A355174", "dist/rank triangle matches A355174",
         "(3t+1)/(3m+1) * C(4m-t,m-t), rows m = 0..8 with t = 0..m",
         [] {
             std::vector<Int> out;
             for (int m = 0; m <= 8; ++m)
                 for (int t = 0; t <= m; ++t) out.push_back(dist_rank_count(m, t));
             return out;
         },
         "triangle read row by row (m ascending, t ascending), b-file index 0 = first term"},
    };

    for (const auto& entry : entries) {
        const std::string id = entry.id;
        const std::string alignment = entry.alignment;
        const auto produce = entry.produce;
        specs.push_back(CheckSpec{
            entry.name, entry.ref, [id, alignment, produce, offline] {
                OeisClient client;
                const BSequence b = client.fetch(id, offline);
                const std::vector<Int> produced = produce();
                const CompareResult r = compare(b, produced, b.entries.front().index);
                std::ostringstream lhs, rhs;
                lhs << produced.size() << " computed terms; " << alignment;
                rhs << id << ": " << r.match_length << "/" << r.compared
                    << " overlapping terms match";
                return CheckBody{r.pass && r.compared == produced.size(), lhs.str(), rhs.str()};
            }});
    }
    return specs;
}

}  // namespace detail

inline VerificationReport verify_table1(int n_max = 16, const VerifyOptions& options = {}) {
    return detail::run_checks(detail::table1_checks(n_max), options);
}

inline VerificationReport verify_bijections(int n_max = 9, const VerifyOptions& options = {}) {
    return detail::run_checks(detail::bijection_checks(n_max), options);
}

inline VerificationReport verify_minpolys(const SeriesBounds& bounds = SeriesBounds{14, 8, 8},
                                          const VerifyOptions& options = {}) {
    return detail::run_checks(detail::minpoly_checks(bounds), options);
}

inline VerificationReport verify_oeis(bool offline, const VerifyOptions& options = {}) {
    return detail::run_checks(detail::oeis_checks(offline), options);
}

inline VerificationReport verify_all(bool offline, const VerifyOptions& options = {}) {
    std::vector<detail::CheckSpec> specs;
    for (auto& group :
         {detail::table1_checks(16), detail::bijection_checks(9),
          detail::minpoly_checks(SeriesBounds{14, 8, 8}), detail::oeis_checks(offline)}) {
        for (const auto& spec : group) specs.push_back(spec);
    }
    return detail::run_checks(std::move(specs), options);
}

// Equal inputs yield byte-identical dumps; elapsed times are opt-in because
// they vary run to run.
inline nlohmann::ordered_json report_json(const VerificationReport& report,
                                          bool with_elapsed = false) {
    nlohmann::ordered_json j;
    j["status"] = report.all_pass() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["ref"] = c.ref;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        if (with_elapsed) jc["elapsed"] = c.elapsed_s;
        j["checks"].push_back(std::move(jc));
    }
    return j;
}

}  // namespace invseq_lab
