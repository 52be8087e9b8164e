#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invseq_lab {

// Step alphabet F = {(0,1)} union {(a,b) : a >= 1, b <= 1}.  A step with
// dy = 1 carries the label (1); a step with dy <= 0 carries a label
// (b_1,...,b_k) of nonpositive entries summing to dy, and contributes k to the
// semilength.
struct FStep {
    int dx;
    int dy;
    std::vector<int> label;

    friend bool operator==(const FStep&, const FStep&) = default;
};

struct LabeledFPath {
    std::vector<FStep> steps;

    friend bool operator==(const LabeledFPath&, const LabeledFPath&) = default;
};

// Walk step: either a member of F with weight 1, or a south step (0, b <= -1)
// with weight >= 1.  The weight counts toward the semilength; the displacement
// is applied once.
struct WStep {
    int dx;
    int dy;
    int weight;

    friend bool operator==(const WStep&, const WStep&) = default;
};

struct WeightedHWalk {
    std::vector<WStep> steps;

    friend bool operator==(const WeightedHWalk&, const WeightedHWalk&) = default;
};

// A walk whose south steps all have weight 1 and in which no north or south
// step is immediately followed by a north or south step.
struct SimpleHPath {
    WeightedHWalk underlying;

    friend bool operator==(const SimpleHPath&, const SimpleHPath&) = default;
};

enum class StepClass { north, up, down, south };

inline StepClass classify(int dx, int dy) {
    if (dx == 0 && dy == 1) return StepClass::north;
    if (dx == 0 && dy <= -1) return StepClass::south;
    if (dx >= 1 && dy == 1) return StepClass::up;
    if (dx >= 1 && dy <= 0) return StepClass::down;
    throw std::invalid_argument("classify: (" + std::to_string(dx) + "," + std::to_string(dy) +
                                ") is not a walk step");
}

inline StepClass classify(const WStep& s) { return classify(s.dx, s.dy); }
inline StepClass classify(const FStep& s) { return classify(s.dx, s.dy); }

inline bool is_vertical(StepClass c) { return c == StepClass::north || c == StepClass::south; }

inline int semilength(const FStep& s) { return static_cast<int>(s.label.size()); }

inline int semilength(const LabeledFPath& q) {
    int total = 0;
    for (const auto& s : q.steps) total += semilength(s);
    return total;
}

inline int semilength(const WeightedHWalk& r) {
    int total = 0;
    for (const auto& s : r.steps) total += s.weight;
    return total;
}

inline int semilength(const SimpleHPath& p) { return semilength(p.underlying); }

template <typename Path>
int height(const Path& p) {
    int x = 0, y = 0;
    for (const auto& s : p.steps) {
        x += s.dx;
        y += s.dy;
    }
    return y - x;
}

inline int height(const SimpleHPath& p) { return height(p.underlying); }

inline int ud_count(const WeightedHWalk& r) {
    int total = 0;
    for (const auto& s : r.steps) total += s.dx >= 1 ? 1 : 0;
    return total;
}

struct PathStats {
    int semilength;
    int height;
    int ud;  // up steps plus down steps; -1 where the statistic is not defined

    friend bool operator==(const PathStats&, const PathStats&) = default;
};

inline PathStats path_stats(const LabeledFPath& q) { return {semilength(q), height(q), -1}; }
inline PathStats path_stats(const WeightedHWalk& r) { return {semilength(r), height(r), -1}; }
inline PathStats path_stats(const SimpleHPath& p) {
    return {semilength(p), height(p), ud_count(p.underlying)};
}

// Step-local and adjacency invariants.  Geometry (staying weakly above the
// diagonal) is checked separately: the bijection below is defined step-wise
// and its natural domain is shape-valid paths regardless of start point.
inline void validate_step_shapes(const LabeledFPath& q) {
    for (size_t i = 0; i < q.steps.size(); ++i) {
        const auto& s = q.steps[i];
        const std::string at = "labeled path, step " + std::to_string(i + 1) + ": ";
        if (!((s.dx == 0 && s.dy == 1) || (s.dx >= 1 && s.dy <= 1)))
            throw std::invalid_argument(at + "displacement not in the step alphabet");
        if (s.label.empty()) throw std::invalid_argument(at + "empty label");
        if (s.dy == 1) {
            if (s.label != std::vector<int>{1})
                throw std::invalid_argument(at + "a rise step must carry the label (1)");
        } else {
            int sum = 0;
            for (int b : s.label) {
                if (b > 0) throw std::invalid_argument(at + "label entries must be nonpositive");
                sum += b;
            }
            if (sum != s.dy)
                throw std::invalid_argument(at + "label entries must sum to the step's dy");
        }
    }
}

inline void validate_step_shapes(const WeightedHWalk& r) {
    for (size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        const std::string at = "walk, step " + std::to_string(i + 1) + ": ";
        StepClass c;
        try {
            c = classify(s.dx, s.dy);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(at + "displacement is neither a walk step nor a south step");
        }
        if (c == StepClass::south) {
            if (s.weight < 1) throw std::invalid_argument(at + "south weight must be >= 1");
            if (i == 0) throw std::invalid_argument(at + "a walk cannot start with a south step");
            if (classify(r.steps[i - 1]) == StepClass::north)
                throw std::invalid_argument(at + "a south step cannot follow a north step");
        } else if (s.weight != 1) {
            throw std::invalid_argument(at + "non-south steps have weight 1");
        }
    }
}

template <typename Path>
void validate_geometry(const Path& p) {
    int x = 0, y = 0;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        x += p.steps[i].dx;
        y += p.steps[i].dy;
        if (y < x)
            throw std::invalid_argument("path dips below the diagonal after step " +
                                        std::to_string(i + 1));
    }
}

inline void validate(const LabeledFPath& q) {
    validate_step_shapes(q);
    validate_geometry(q);
}

inline void validate(const WeightedHWalk& r) {
    validate_step_shapes(r);
    validate_geometry(r);
}

inline void validate_simple_shape(const WeightedHWalk& r) {
    validate_step_shapes(r);
    for (size_t i = 0; i < r.steps.size(); ++i) {
        const std::string at = "simple path, step " + std::to_string(i + 1) + ": ";
        StepClass c = classify(r.steps[i]);
        if (c == StepClass::south && r.steps[i].weight != 1)
            throw std::invalid_argument(at + "south steps must have weight 1");
        if (i > 0 && is_vertical(classify(r.steps[i - 1])) && is_vertical(c))
            throw std::invalid_argument(at + "two vertical steps in a row");
    }
}

inline void validate(const SimpleHPath& p) {
    validate_simple_shape(p.underlying);
    validate_geometry(p.underlying);
}

// Rewrites every long step (k >= 2) into a short step followed by a run of
// weighted south steps.  For a label (b_1,...,b_k), the nonzero interior
// positions I = {i_1 < ... < i_p} (2 <= i <= k-1) determine the run: first the
// step (a, b_k + 1), then souths (0, b_{i_p}) of weight k - i_p,
// (0, b_{i_{p-1}}) of weight i_p - i_{p-1}, ..., (0, b_{i_1}) of weight
// i_2 - i_1, and finally (0, b_1 - 1) of weight i_1 - 1; with no nonzero
// interior the run is the single south (0, b_1 - 1) of weight k - 1.
// Semilength and height carry over.
inline WeightedHWalk eta(const LabeledFPath& q) {
    validate_step_shapes(q);
    WeightedHWalk out;
    for (const auto& s : q.steps) {
        const int k = semilength(s);
        if (s.dy == 1 || k == 1) {
            out.steps.push_back(WStep{s.dx, s.dy, 1});
            continue;
        }
        const auto& lab = s.label;
        out.steps.push_back(WStep{s.dx, lab[static_cast<size_t>(k) - 1] + 1, 1});
        std::vector<int> nonzero_interior;
        for (int i = 2; i <= k - 1; ++i)
            if (lab[static_cast<size_t>(i) - 1] != 0) nonzero_interior.push_back(i);
        if (nonzero_interior.empty()) {
            out.steps.push_back(WStep{0, lab[0] - 1, k - 1});
        } else {
            int prev_hi = k;
            for (auto it = nonzero_interior.rbegin(); it != nonzero_interior.rend(); ++it) {
                out.steps.push_back(WStep{0, lab[static_cast<size_t>(*it) - 1], prev_hi - *it});
                prev_hi = *it;
            }
            out.steps.push_back(WStep{0, lab[0] - 1, nonzero_interior.front() - 1});
        }
    }
    return out;
}

// Absorbs each maximal south run into the step before it (an up or down step:
// the shape validator guarantees no walk starts with a south and none follows
// a north).  Cumulative weights recover the label positions and the south
// displacements recover the entries; unlisted interior entries are 0.
inline LabeledFPath eta_inv(const WeightedHWalk& r) {
    validate_step_shapes(r);
    LabeledFPath out;
    size_t i = 0;
    while (i < r.steps.size()) {
        const WStep& s = r.steps[i];
        if (classify(s) == StepClass::north) {
            out.steps.push_back(FStep{0, 1, {1}});
            ++i;
            continue;
        }
        size_t j = i + 1;
        std::vector<WStep> run;
        while (j < r.steps.size() && classify(r.steps[j]) == StepClass::south) {
            run.push_back(r.steps[j]);
            ++j;
        }
        const int a = s.dx;
        const int c = s.dy;
        if (run.empty()) {
            if (c == 1)
                out.steps.push_back(FStep{a, 1, {1}});
            else
                out.steps.push_back(FStep{a, c, {c}});
            i = j;
            continue;
        }
        const int q = static_cast<int>(run.size());
        int k = 1;
        for (const auto& w : run) k += w.weight;
        std::vector<int> lab(static_cast<size_t>(k), 0);
        lab[static_cast<size_t>(k) - 1] = c - 1;
        lab[0] = run[static_cast<size_t>(q) - 1].dy + 1;
        const int p = q - 1;
        int idx = run[static_cast<size_t>(q) - 1].weight + 1;
        for (int jj = 1; jj <= p; ++jj) {
            if (jj > 1) idx += run[static_cast<size_t>(q - jj)].weight;
            lab[static_cast<size_t>(idx) - 1] = run[static_cast<size_t>(p - jj)].dy;
        }
        const int b = std::accumulate(lab.begin(), lab.end(), 0);
        out.steps.push_back(FStep{a, b, std::move(lab)});
        i = j;
    }
    return out;
}

// Structural classes the CLI exposes: A starts with an up step and ends with
// an up or down step; D excludes walks that start with a north step (the
// empty walk qualifies); B is the empty walk or one that ends with a north
// step without starting with one.
enum class PathClass { A, D, B };

inline bool matches_class(const WeightedHWalk& r, PathClass cls) {
    const bool empty = r.steps.empty();
    switch (cls) {
        case PathClass::A:
            return !empty && classify(r.steps.front()) == StepClass::up &&
                   classify(r.steps.back()) != StepClass::north &&
                   classify(r.steps.back()) != StepClass::south;
        case PathClass::D:
            return empty || classify(r.steps.front()) != StepClass::north;
        case PathClass::B:
            return empty || (classify(r.steps.back()) == StepClass::north &&
                             classify(r.steps.front()) != StepClass::north);
    }
    throw std::logic_error("matches_class: bad class");
}

inline bool matches_class(const LabeledFPath& q, PathClass cls) {
    const bool empty = q.steps.empty();
    switch (cls) {
        case PathClass::A:
            return !empty && classify(q.steps.front()) == StepClass::up &&
                   classify(q.steps.back()) != StepClass::north;
        case PathClass::D:
            return empty || classify(q.steps.front()) != StepClass::north;
        case PathClass::B:
            return empty || (classify(q.steps.back()) == StepClass::north &&
                             classify(q.steps.front()) != StepClass::north);
    }
    throw std::logic_error("matches_class: bad class");
}

enum class PathKind { labeled_f, weighted_h, simple_h };

struct PathFilter {
    std::optional<int> height;
    std::optional<int> ud;
    std::optional<PathClass> cls;
};

namespace detail {

// Shared final-height prune: no step gains more than one unit of height per
// unit of semilength, so a target above h + budget is unreachable.
inline bool height_reachable(const PathFilter& f, int h, int budget) {
    return !f.height || *f.height <= h + budget;
}

template <typename Path>
bool leaf_matches(const PathFilter& f, const Path& p, int h, int ud) {
    if (f.height && *f.height != h) return false;
    if (f.ud && *f.ud != ud) return false;
    if (f.cls && !matches_class(p, *f.cls)) return false;
    return true;
}

inline bool leaf_matches(const PathFilter& f, const SimpleHPath& p, int h, int ud) {
    return leaf_matches(f, p.underlying, h, ud);
}

}  // namespace detail

// Exhaustive generators, one per family, each yielding in a fixed order:
// children sorted by (dx, dy, weight), and long-step labels by length then
// lexicographically.  Height bounds keep the branching finite: an up step
// (a,1) needs a <= h+1, a down step (a,b) needs a <= h+b, a south (0,b) needs
// -b <= h.

inline void enumerate_labeled_paths(int n, const PathFilter& filter,
                                    const std::function<void(const LabeledFPath&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate: need semilength >= 0");
    if (filter.ud) throw std::invalid_argument("ud filter applies to simple paths only");
    LabeledFPath path;

    std::function<void(int, int, const std::function<void()>&)> with_labels =
        [&](int remaining, int entries, const std::function<void()>& k) {
            if (entries == 1) {
                path.steps.back().label.push_back(remaining);
                k();
                path.steps.back().label.pop_back();
                return;
            }
            for (int b1 = remaining; b1 <= 0; ++b1) {
                path.steps.back().label.push_back(b1);
                with_labels(remaining - b1, entries - 1, k);
                path.steps.back().label.pop_back();
            }
        };

    std::function<void(int, int)> rec = [&](int h, int budget) {
        if (budget == 0) {
            if (detail::leaf_matches(filter, path, h, 0)) visit(path);
            return;
        }
        if (!detail::height_reachable(filter, h, budget)) return;
        path.steps.push_back(FStep{0, 1, {1}});
        rec(h + 1, budget - 1);
        path.steps.pop_back();
        for (int a = 1; a <= h + 1; ++a) {
            for (int b = a - h; b <= 0; ++b) {
                for (int k = 1; k <= budget; ++k) {
                    path.steps.push_back(FStep{a, b, {}});
                    const std::function<void()> done = [&]() { rec(h + b - a, budget - k); };
                    with_labels(b, k, done);
                    path.steps.pop_back();
                }
            }
            path.steps.push_back(FStep{a, 1, {1}});
            rec(h + 1 - a, budget - 1);
            path.steps.pop_back();
        }
    };
    rec(0, n);
}

inline void enumerate_weighted_walks(int n, const PathFilter& filter,
                                     const std::function<void(const WeightedHWalk&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate: need semilength >= 0");
    if (filter.ud) throw std::invalid_argument("ud filter applies to simple paths only");
    WeightedHWalk walk;

    std::function<void(int, int)> rec = [&](int h, int budget) {
        if (budget == 0) {
            if (detail::leaf_matches(filter, walk, h, 0)) visit(walk);
            return;
        }
        if (!detail::height_reachable(filter, h, budget)) return;
        const bool after_north =
            !walk.steps.empty() && classify(walk.steps.back()) == StepClass::north;
        if (!walk.steps.empty() && !after_north) {
            for (int b = -h; b <= -1; ++b)
                for (int w = 1; w <= budget; ++w) {
                    walk.steps.push_back(WStep{0, b, w});
                    rec(h + b, budget - w);
                    walk.steps.pop_back();
                }
        }
        walk.steps.push_back(WStep{0, 1, 1});
        rec(h + 1, budget - 1);
        walk.steps.pop_back();
        for (int a = 1; a <= h + 1; ++a) {
            for (int b = a - h; b <= 0; ++b) {
                walk.steps.push_back(WStep{a, b, 1});
                rec(h + b - a, budget - 1);
                walk.steps.pop_back();
            }
            walk.steps.push_back(WStep{a, 1, 1});
            rec(h + 1 - a, budget - 1);
            walk.steps.pop_back();
        }
    };
    rec(0, n);
}

inline void enumerate_simple_paths(int n, const PathFilter& filter,
                                   const std::function<void(const SimpleHPath&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate: need semilength >= 0");
    SimpleHPath path;
    auto& steps = path.underlying.steps;

    std::function<void(int, int, int)> rec = [&](int h, int budget, int ud) {
        if (budget == 0) {
            if (detail::leaf_matches(filter, path, h, ud)) visit(path);
            return;
        }
        if (!detail::height_reachable(filter, h, budget)) return;
        if (filter.ud && ud > *filter.ud) return;
        const bool after_vertical = !steps.empty() && is_vertical(classify(steps.back()));
        if (!after_vertical) {
            if (!steps.empty()) {
                for (int b = -h; b <= -1; ++b) {
                    steps.push_back(WStep{0, b, 1});
                    rec(h + b, budget - 1, ud);
                    steps.pop_back();
                }
            }
            steps.push_back(WStep{0, 1, 1});
            rec(h + 1, budget - 1, ud);
            steps.pop_back();
        }
        for (int a = 1; a <= h + 1; ++a) {
            for (int b = a - h; b <= 0; ++b) {
                steps.push_back(WStep{a, b, 1});
                rec(h + b - a, budget - 1, ud + 1);
                steps.pop_back();
            }
            steps.push_back(WStep{a, 1, 1});
            rec(h + 1 - a, budget - 1, ud + 1);
            steps.pop_back();
        }
    };
    rec(0, n, 0);
}

struct PathVisitor {
    std::function<void(const LabeledFPath&)> on_fpath;
    std::function<void(const WeightedHWalk&)> on_walk;
    std::function<void(const SimpleHPath&)> on_simple;
};

inline void enumerate_paths(PathKind kind, int n, const PathFilter& filter,
                            const PathVisitor& visitor) {
    switch (kind) {
        case PathKind::labeled_f:
            if (!visitor.on_fpath) throw std::invalid_argument("enumerate_paths: no fpath visitor");
            enumerate_labeled_paths(n, filter, visitor.on_fpath);
            return;
        case PathKind::weighted_h:
            if (!visitor.on_walk) throw std::invalid_argument("enumerate_paths: no walk visitor");
            enumerate_weighted_walks(n, filter, visitor.on_walk);
            return;
        case PathKind::simple_h:
            if (!visitor.on_simple)
                throw std::invalid_argument("enumerate_paths: no simple visitor");
            enumerate_simple_paths(n, filter, visitor.on_simple);
            return;
    }
    throw std::logic_error("enumerate_paths: bad kind");
}

inline std::vector<LabeledFPath> all_labeled_paths(int n, const PathFilter& filter = {}) {
    std::vector<LabeledFPath> out;
    enumerate_labeled_paths(n, filter, [&](const LabeledFPath& q) { out.push_back(q); });
    return out;
}

inline std::vector<WeightedHWalk> all_weighted_walks(int n, const PathFilter& filter = {}) {
    std::vector<WeightedHWalk> out;
    enumerate_weighted_walks(n, filter, [&](const WeightedHWalk& r) { out.push_back(r); });
    return out;
}

inline std::vector<SimpleHPath> all_simple_paths(int n, const PathFilter& filter = {}) {
    std::vector<SimpleHPath> out;
    enumerate_simple_paths(n, filter, [&](const SimpleHPath& p) { out.push_back(p); });
    return out;
}

}  // namespace invseq_lab
