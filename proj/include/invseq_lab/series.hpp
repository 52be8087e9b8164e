#pragma once

#include <array>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "invseq_lab/bigint.hpp"
#include "invseq_lab/invseq.hpp"

namespace invseq_lab {

// Per-variable maximum exponents (inclusive) under which the retained
// coefficients are exact.
struct SeriesBounds {
    int nx;
    int ny;
    int nz;

    friend bool operator==(const SeriesBounds&, const SeriesBounds&) = default;

    bool dominates(const SeriesBounds& o) const {
        return nx >= o.nx && ny >= o.ny && nz >= o.nz;
    }

    static SeriesBounds meet(const SeriesBounds& a, const SeriesBounds& b) {
        return {a.nx < b.nx ? a.nx : b.nx, a.ny < b.ny ? a.ny : b.ny, a.nz < b.nz ? a.nz : b.nz};
    }
};

inline constexpr SeriesBounds kDefaultSeriesBounds{17, 9, 9};

// Truncated power series in x, y, z with arbitrary-precision integer
// coefficients.  Sparse, normalized (no stored zeros); every operation
// truncates to the meet of the operands' bounds, which keeps all retained
// coefficients exact.
class TruncatedSeries {
public:
    using Key = std::array<int, 3>;
    using CoeffMap = std::map<Key, Int>;

    explicit TruncatedSeries(SeriesBounds bounds) : bounds_(bounds) {
        if (bounds.nx < 0 || bounds.ny < 0 || bounds.nz < 0)
            throw std::invalid_argument("series bounds must be nonnegative");
    }

    static TruncatedSeries constant(const Int& c, SeriesBounds bounds) {
        TruncatedSeries s(bounds);
        if (c != 0) s.coeffs_[{0, 0, 0}] = c;
        return s;
    }

    static TruncatedSeries monomial(const Int& c, int i, int j, int k, SeriesBounds bounds) {
        TruncatedSeries s(bounds);
        if (i < 0 || j < 0 || k < 0 || i > bounds.nx || j > bounds.ny || k > bounds.nz)
            throw std::invalid_argument("monomial exponents outside bounds");
        if (c != 0) s.coeffs_[{i, j, k}] = c;
        return s;
    }

    static TruncatedSeries from_terms(CoeffMap terms, SeriesBounds bounds) {
        TruncatedSeries s(bounds);
        for (auto& [key, c] : terms) {
            if (key[0] < 0 || key[1] < 0 || key[2] < 0 || key[0] > bounds.nx ||
                key[1] > bounds.ny || key[2] > bounds.nz)
                throw std::invalid_argument("from_terms: exponents outside bounds");
            if (c != 0) s.coeffs_[key] = std::move(c);
        }
        return s;
    }

    const SeriesBounds& bounds() const { return bounds_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    const Int& coeff(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i > bounds_.nx || j > bounds_.ny || k > bounds_.nz)
            throw std::out_of_range("coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                                    "," + std::to_string(k) + ") is outside the truncation bounds");
        static const Int kZero = 0;
        auto it = coeffs_.find({i, j, k});
        return it == coeffs_.end() ? kZero : it->second;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combine(a, b, 1);
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return combine(a, b, -1);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(bounds_);
        for (const auto& [key, c] : coeffs_) r.coeffs_[key] = -c;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(SeriesBounds::meet(a.bounds_, b.bounds_));
        for (const auto& [ka, ca] : a.coeffs_) {
            if (ka[0] > r.bounds_.nx || ka[1] > r.bounds_.ny || ka[2] > r.bounds_.nz) continue;
            for (const auto& [kb, cb] : b.coeffs_) {
                const int i = ka[0] + kb[0], j = ka[1] + kb[1], k = ka[2] + kb[2];
                if (i > r.bounds_.nx || j > r.bounds_.ny || k > r.bounds_.nz) continue;
                r.coeffs_[{i, j, k}] += ca * cb;
            }
        }
        r.normalize();
        return r;
    }

    friend TruncatedSeries operator*(const Int& c, const TruncatedSeries& a) {
        TruncatedSeries r(a.bounds_);
        if (c == 0) return r;
        for (const auto& [key, v] : a.coeffs_) r.coeffs_[key] = c * v;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Int& c) { return c * a; }

    // Reciprocal via the convolution recurrence, walking exponents in
    // lexicographic order so every needed smaller coefficient is ready.
    TruncatedSeries inverted() const {
        const Int c0 = coeff(0, 0, 0);
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("inverted: constant term must be 1 or -1");
        TruncatedSeries r(bounds_);
        for (int i = 0; i <= bounds_.nx; ++i)
            for (int j = 0; j <= bounds_.ny; ++j)
                for (int k = 0; k <= bounds_.nz; ++k) {
                    Int acc = 0;
                    for (const auto& [key, c] : coeffs_) {
                        if (key == Key{0, 0, 0}) continue;
                        if (key[0] > i || key[1] > j || key[2] > k) continue;
                        auto it = r.coeffs_.find({i - key[0], j - key[1], k - key[2]});
                        if (it != r.coeffs_.end()) acc += c * it->second;
                    }
                    Int v = (i == 0 && j == 0 && k == 0) ? c0 : Int(-c0 * acc);
                    if (v != 0) r.coeffs_[{i, j, k}] = std::move(v);
                }
        return r;
    }

    TruncatedSeries div_exact_by_x_power(int p) const {
        if (p < 0) throw std::invalid_argument("div_exact_by_x_power: negative power");
        if (p == 0) return *this;
        if (bounds_.nx < p)
            throw std::domain_error("div_exact_by_x_power: bounds too small for the quotient");
        TruncatedSeries r({bounds_.nx - p, bounds_.ny, bounds_.nz});
        for (const auto& [key, c] : coeffs_) {
            if (key[0] < p)
                throw std::domain_error("div_exact_by_x_power: term with x-exponent below " +
                                        std::to_string(p));
            r.coeffs_[{key[0] - p, key[1], key[2]}] = c;
        }
        return r;
    }

    TruncatedSeries truncated_to(SeriesBounds target) const {
        if (!bounds_.dominates(target))
            throw std::domain_error("truncated_to: cannot grow truncation bounds");
        TruncatedSeries r(target);
        for (const auto& [key, c] : coeffs_)
            if (key[0] <= target.nx && key[1] <= target.ny && key[2] <= target.nz)
                r.coeffs_[key] = c;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.bounds_ == b.bounds_ && a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        os << "series[bounds " << s.bounds_.nx << "," << s.bounds_.ny << "," << s.bounds_.nz
           << "; " << s.coeffs_.size() << " terms";
        int shown = 0;
        for (const auto& [key, c] : s.coeffs_) {
            if (shown++ == 4) {
                os << ", ...";
                break;
            }
            os << (shown == 1 ? ": " : ", ") << c.str() << "*x^" << key[0] << "y^" << key[1]
               << "z^" << key[2];
        }
        return os << "]";
    }

private:
    void normalize() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
    }

    static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
        TruncatedSeries r(SeriesBounds::meet(a.bounds_, b.bounds_));
        for (const auto& [key, c] : a.coeffs_)
            if (key[0] <= r.bounds_.nx && key[1] <= r.bounds_.ny && key[2] <= r.bounds_.nz)
                r.coeffs_[key] = c;
        for (const auto& [key, c] : b.coeffs_)
            if (key[0] <= r.bounds_.nx && key[1] <= r.bounds_.ny && key[2] <= r.bounds_.nz)
                r.coeffs_[key] += sign > 0 ? c : Int(-c);
        r.normalize();
        return r;
    }

    SeriesBounds bounds_;
    CoeffMap coeffs_;
};

// Fixed point of B = 1 + x*y*B^2*(x*B^2 - (x-1)*(B-1)) at bounds
// (nx, ny, ny).  Each iteration pins at least one more x-order because the
// correction carries a factor x, so nx+1 iterations suffice; a residual check
// guards the convergence argument.
inline TruncatedSeries solve_B(int nx, int ny) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("solve_B: bounds must be nonnegative");
    const SeriesBounds b{nx, ny, ny};
    if (nx == 0 || ny == 0) return TruncatedSeries::constant(1, b);
    const auto one = TruncatedSeries::constant(1, b);
    const auto x = TruncatedSeries::monomial(1, 1, 0, 0, b);
    const auto y = TruncatedSeries::monomial(1, 0, 1, 0, b);
    auto rhs = [&](const TruncatedSeries& B) {
        const auto B2 = B * B;
        return one + x * y * B2 * (x * B2 - (x - one) * (B - one));
    };
    TruncatedSeries B = one;
    for (int it = 0; it <= nx; ++it) B = rhs(B);
    if (!(B - rhs(B)).is_zero())
        throw std::logic_error("solve_B: fixed point did not stabilize within bounds");
    return B;
}

// A = (B-1)/(xB); D0 = 1 + A + x^2 A^2/(1-xA); D = D0/(1-xzA);
// E = [(xB^2 - (x-1)(B-1))/x] / (B - z(B-1)).  The two routes D and E agree
// coefficientwise; callers compare them rather than this function asserting
// it, so the comparison can be surfaced as a named check.
struct DerivedChain {
    TruncatedSeries A;
    TruncatedSeries D0;
    TruncatedSeries D;
    TruncatedSeries E;
};

inline DerivedChain derive_chain(const TruncatedSeries& B) {
    const SeriesBounds bb = B.bounds();
    if (bb.nx < 1 || bb.ny < 1 || bb.nz < 1)
        throw std::invalid_argument("derive_chain: bounds too small");
    const auto one = TruncatedSeries::constant(1, bb);
    const auto x = TruncatedSeries::monomial(1, 1, 0, 0, bb);
    const auto z = TruncatedSeries::monomial(1, 0, 0, 1, bb);
    const auto Bm1 = B - one;

    const auto A = Bm1.div_exact_by_x_power(1) * B.inverted();
    const auto xA = x * A;
    const auto D0 = one + A + x * x * A * A * (one - xA).inverted();
    const auto D = D0 * (one - x * z * A).inverted();
    const auto numer = x * B * B - (x - one) * Bm1;
    const auto E = numer.div_exact_by_x_power(1) * (B - z * Bm1).inverted();
    return DerivedChain{A, D0, D, E};
}

// Which structural zero-regions of the support the caller vouches for, in the
// indexing [x^n y^m z^t]: they certify which substitutions stay exact under
// truncation.
struct SupportShape {
    bool t_le_m = false;
    bool m_le_n = false;
    bool n_le_2m = false;
};

enum class Assignment { x_to_1, y_to_1, y_to_0, z_to_0, z_to_1 };

namespace detail {

inline TruncatedSeries fold_z_one(const TruncatedSeries& s, const SupportShape& shape) {
    if (!shape.t_le_m) throw std::domain_error("insufficient truncation for z:=1");
    const SeriesBounds b = s.bounds();
    const SeriesBounds nb{b.nx, b.ny < b.nz ? b.ny : b.nz, 0};
    TruncatedSeries::CoeffMap terms;
    for (const auto& [key, c] : s.coeffs())
        if (key[1] <= nb.ny) terms[{key[0], key[1], 0}] += c;
    return TruncatedSeries::from_terms(std::move(terms), nb);
}

inline TruncatedSeries fold_y_one(const TruncatedSeries& s, const SupportShape& shape) {
    if (!shape.m_le_n) throw std::domain_error("insufficient truncation for y:=1");
    const SeriesBounds b = s.bounds();
    const int nx2 = b.nx < b.ny ? b.nx : b.ny;
    const int nz2 = (shape.t_le_m && b.nz > nx2) ? nx2 : b.nz;
    const SeriesBounds nb{nx2, 0, nz2};
    TruncatedSeries::CoeffMap terms;
    for (const auto& [key, c] : s.coeffs())
        if (key[0] <= nb.nx && key[2] <= nb.nz) terms[{key[0], 0, key[2]}] += c;
    return TruncatedSeries::from_terms(std::move(terms), nb);
}

inline TruncatedSeries fold_x_one(const TruncatedSeries& s, const SupportShape& shape) {
    if (!shape.n_le_2m) throw std::domain_error("insufficient truncation for x:=1");
    const SeriesBounds b = s.bounds();
    const int ny2 = b.ny < b.nx / 2 ? b.ny : b.nx / 2;
    const int nz2 = (shape.t_le_m && b.nz > ny2) ? ny2 : b.nz;
    const SeriesBounds nb{0, ny2, nz2};
    TruncatedSeries::CoeffMap terms;
    for (const auto& [key, c] : s.coeffs())
        if (key[1] <= nb.ny && key[2] <= nb.nz) terms[{0, key[1], key[2]}] += c;
    return TruncatedSeries::from_terms(std::move(terms), nb);
}

inline TruncatedSeries filter_axis_zero(const TruncatedSeries& s, int axis) {
    const SeriesBounds b = s.bounds();
    const SeriesBounds nb{b.nx, axis == 1 ? 0 : b.ny, axis == 2 ? 0 : b.nz};
    TruncatedSeries::CoeffMap terms;
    for (const auto& [key, c] : s.coeffs())
        if (key[static_cast<size_t>(axis)] == 0) terms[key] = c;
    return TruncatedSeries::from_terms(std::move(terms), nb);
}

}  // namespace detail

// Substitutes 1 or 0 for a subset of the variables.  Assignments are applied
// in the fixed order z, then y, then x; substituting 1 folds an exponent away
// and is exact only where the vouched support shape bounds the folded
// exponent by a retained one, hence the shape argument.
inline TruncatedSeries specialize(const TruncatedSeries& s, const std::vector<Assignment>& assigns,
                                  const SupportShape& shape) {
    bool x1 = false, y0 = false, y1 = false, z0 = false, z1 = false;
    for (Assignment a : assigns) {
        switch (a) {
            case Assignment::x_to_1: x1 = true; break;
            case Assignment::y_to_1: y1 = true; break;
            case Assignment::y_to_0: y0 = true; break;
            case Assignment::z_to_0: z0 = true; break;
            case Assignment::z_to_1: z1 = true; break;
        }
    }
    if ((y0 && y1) || (z0 && z1))
        throw std::invalid_argument("specialize: conflicting assignments for one variable");
    TruncatedSeries r = s;
    if (z0) r = detail::filter_axis_zero(r, 2);
    if (z1) r = detail::fold_z_one(r, shape);
    if (y0) r = detail::filter_axis_zero(r, 1);
    if (y1) r = detail::fold_y_one(r, shape);
    if (x1) r = detail::fold_x_one(r, shape);
    return r;
}

// The support shape of E (and of B, which has no z-dependence): in
// [x^n y^m z^t], every nonzero coefficient has t <= m <= n <= 2m.
inline constexpr SupportShape kRankDistSupport{true, true, true};

enum class AlgebraicSeries { e_xyz, e_x1z, e_xy1, e_x11, e_xy0, e_x10, e_1yz, e_1y0, e_1y1 };

inline const char* series_name(AlgebraicSeries which) {
    switch (which) {
        case AlgebraicSeries::e_xyz: return "E(x,y,z)";
        case AlgebraicSeries::e_x1z: return "E(x,1,z)";
        case AlgebraicSeries::e_xy1: return "E(x,y,1)";
        case AlgebraicSeries::e_x11: return "E(x,1,1)";
        case AlgebraicSeries::e_xy0: return "E(x,y,0)";
        case AlgebraicSeries::e_x10: return "E(x,1,0)";
        case AlgebraicSeries::e_1yz: return "E(1,y,z)";
        case AlgebraicSeries::e_1y0: return "E(1,y,0)";
        case AlgebraicSeries::e_1y1: return "E(1,y,1)";
    }
    throw std::logic_error("series_name: bad selector");
}

inline TruncatedSeries specialized_e(const TruncatedSeries& E, AlgebraicSeries which) {
    using A = Assignment;
    std::vector<A> assigns;
    switch (which) {
        case AlgebraicSeries::e_xyz: break;
        case AlgebraicSeries::e_x1z: assigns = {A::y_to_1}; break;
        case AlgebraicSeries::e_xy1: assigns = {A::z_to_1}; break;
        case AlgebraicSeries::e_x11: assigns = {A::z_to_1, A::y_to_1}; break;
        case AlgebraicSeries::e_xy0: assigns = {A::z_to_0}; break;
        case AlgebraicSeries::e_x10: assigns = {A::z_to_0, A::y_to_1}; break;
        case AlgebraicSeries::e_1yz: assigns = {A::x_to_1}; break;
        case AlgebraicSeries::e_1y0: assigns = {A::z_to_0, A::x_to_1}; break;
        case AlgebraicSeries::e_1y1: assigns = {A::z_to_1, A::x_to_1}; break;
    }
    return specialize(E, assigns, kRankDistSupport);
}

// c0 + c1*S + ... + cd*S^d with truncated-series coefficients.
struct PolyInSeries {
    std::vector<TruncatedSeries> coeffs;
};

inline TruncatedSeries minpoly_residual(const PolyInSeries& p, const TruncatedSeries& s) {
    if (p.coeffs.size() < 2) throw std::invalid_argument("minpoly_residual: degree must be >= 1");
    for (const auto& c : p.coeffs)
        if (!c.bounds().dominates(s.bounds()))
            throw std::invalid_argument(
                "minpoly_residual: coefficient bounds must dominate the series bounds");
    TruncatedSeries r = p.coeffs.back().truncated_to(s.bounds());
    for (size_t d = p.coeffs.size() - 1; d-- > 0;) r = r * s + p.coeffs[d];
    return r;
}

namespace detail {

struct MinpolyVars {
    TruncatedSeries one, x, y, z;
};

// The quartic satisfied by the full three-variable series; the specialized
// polynomials below are its printed closed forms at the corresponding
// substitutions, transcribed independently rather than derived, except for
// the y:=1 case which has no separate printed form.
inline std::vector<TruncatedSeries> quartic_xyz(const MinpolyVars& v) {
    const auto& [one, x, y, z] = v;
    const auto mx = one - x;
    const auto mz = one - z;
    const auto c1 = -(one - Int(2) * y * x * mx * z + y * mx * mx * mz);
    const auto c2 = y * (Int(2) * x * x * z * z + x * mx * (Int(2) * z * z - Int(6) * z + Int(3) * one) +
                         y * x * x * mx * mx * z * z + mx * mx * mz - y * x * mx * mx * mx * mz);
    const auto c3 = y * x *
                    (Int(2) * y * x * x * mx * z * z * z + x * z * mz * (Int(4) * one - z) -
                     Int(2) * y * x * mx * mx * z * mz - Int(2) * mx * mz * mz);
    const auto c4 = y * x * x * (y * x * x * z * z * z * z - y * x * mx * z * z * mz + mz * mz * mz);
    return {one, c1, c2, c3, c4};
}

}  // namespace detail

inline PolyInSeries minpoly_for(AlgebraicSeries which, const SeriesBounds& bounds) {
    const auto one = TruncatedSeries::constant(1, bounds);
    auto var = [&](int i, int j, int k) { return TruncatedSeries::monomial(1, i, j, k, bounds); };
    switch (which) {
        case AlgebraicSeries::e_xyz:
            return {detail::quartic_xyz({one, var(1, 0, 0), var(0, 1, 0), var(0, 0, 1)})};
        case AlgebraicSeries::e_x1z:
            return {detail::quartic_xyz({one, var(1, 0, 0), one, var(0, 0, 1)})};
        case AlgebraicSeries::e_xy1: {
            const auto x = var(1, 0, 0), y = var(0, 1, 0);
            const auto mx = one - x;
            return {{one, -(one - Int(2) * y * x * mx),
                     y * x * (-one + Int(3) * x + y * x * mx * mx), Int(2) * y * y * x * x * x * mx,
                     y * y * x * x * x * x}};
        }
        case AlgebraicSeries::e_x11: {
            const auto x = var(1, 0, 0);
            const auto mx = one - x;
            return {{one, -(one - Int(2) * x + Int(2) * x * x),
                     x * (-one + Int(4) * x - Int(2) * x * x + x * x * x), Int(2) * x * x * x * mx,
                     x * x * x * x}};
        }
        case AlgebraicSeries::e_xy0: {
            const auto x = var(1, 0, 0), y = var(0, 1, 0);
            const auto mx = one - x;
            return {{one, -(one + y * mx * mx), y * mx * (one + Int(2) * x - y * x * mx * mx),
                     Int(-2) * y * x * mx, y * x * x}};
        }
        case AlgebraicSeries::e_x10: {
            const auto x = var(1, 0, 0);
            const auto mx = one - x;
            return {{one, -(Int(2) * one - Int(2) * x + x * x),
                     mx * (one + x + Int(2) * x * x - x * x * x), Int(-2) * x * mx, x * x}};
        }
        case AlgebraicSeries::e_1yz: {
            const auto y = var(0, 1, 0), z = var(0, 0, 1);
            const auto mz = one - z;
            return {{one, -one, Int(2) * y * z * z, y * z * mz * (Int(4) * one - z),
                     y * (y * z * z * z * z + mz * mz * mz)}};
        }
        case AlgebraicSeries::e_1y0: {
            const auto y = var(0, 1, 0);
            const auto zero = TruncatedSeries(bounds);
            return {{one, -one, zero, zero, y}};
        }
        case AlgebraicSeries::e_1y1: {
            const auto y = var(0, 1, 0);
            const auto zero = TruncatedSeries(bounds);
            return {{one, -one, Int(2) * y, zero, y * y}};
        }
    }
    throw std::logic_error("minpoly_for: bad selector");
}

// [y^m z^t] of b/(1 - y b^3 z), computed both by that series quotient and as
// [y^{m-t}] b^{3t+1}; the two routes must agree.  The result is keyed
// (n=-1, m, t) since the table aggregates over all lengths.
inline CountTable rank_gf_coeffs(int N_m, int N_t) {
    if (N_m < 0 || N_t < 0) throw std::invalid_argument("rank_gf_coeffs: bounds must be >= 0");
    CountTable out;
    if (N_m == 0) {
        out.add(-1, 0, 0, 1);
        return out;
    }
    const auto B = solve_B(2 * N_m + 1, N_m);
    const auto b = specialize(B, {Assignment::x_to_1}, kRankDistSupport);
    const SeriesBounds bb = b.bounds();
    const auto one = TruncatedSeries::constant(1, bb);
    const auto y = TruncatedSeries::monomial(1, 0, 1, 0, bb);
    const auto z = TruncatedSeries::monomial(1, 0, 0, 1, bb);
    const auto G = b * (one - y * z * b * b * b).inverted();
    const auto b3 = b * b * b;
    TruncatedSeries bpow = b;
    const int t_hi = N_t < N_m ? N_t : N_m;
    for (int t = 0; t <= t_hi; ++t) {
        if (t > 0) bpow = bpow * b3;
        for (int m = t; m <= N_m; ++m) {
            const Int& via_g = G.coeff(0, m, t);
            const Int& via_pow = bpow.coeff(0, m - t, 0);
            if (via_g != via_pow)
                throw std::logic_error("rank_gf_coeffs: the two coefficient routes disagree at m=" +
                                       std::to_string(m) + ", t=" + std::to_string(t));
            if (via_g != 0) out.add(-1, m, t, via_g);
        }
    }
    return out;
}

}  // namespace invseq_lab
