#pragma once

#include <algorithm>
#include <stdexcept>

#include "invseq_lab/bigint.hpp"

namespace invseq_lab {

// C(n,k) with the vanishing convention outside 0 <= k <= n, negative n included.
// The closed-form sums below rely on out-of-range terms dropping out.
inline Int binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Number of simple H-paths of semilength n with ud = m that end with a north
// step and do not start with one: b_0^(m) = [m = 0], and for n >= 1
//
//   b_n^(m) = (1/m) C(m, n-m) * sum_j C(n-m, j) C(n+m-j, 2m+j+1).
//
// The m = 0 column vanishes for n >= 1: the defining fixed-point equation
// B = 1 + xyB^2(xB^2 - (x-1)(B-1)) has its whole correction term under a
// factor y, so B(x,0) = 1.
inline Int b_closed(long long n, long long m) {
    if (n == 0) return m == 0 ? 1 : 0;
    if (m == 0 || n < m || n > 2 * m) return 0;
    Int sum = 0;
    for (long long j = 0; j <= n - m; ++j)
        sum += binom(n - m, j) * binom(n + m - j, 2 * m + j + 1);
    return exact_div(binom(m, n - m) * sum, Int(m));
}

// |IS_n^(m)(102,000)| via the convolution
//   b_{n+1}^(m) + sum_{k=1}^{n} sum_{l=0}^{m} b_k^(l) b_{n-k}^(m-l).
inline Int count_dist_closed(long long n, long long m) {
    if (n < 1 || m < 1) throw std::invalid_argument("count_dist_closed: need n, m >= 1");
    Int total = b_closed(n + 1, m);
    for (long long k = 1; k <= n; ++k)
        for (long long l = 0; l <= m; ++l)
            total += b_closed(k, l) * b_closed(n - k, m - l);
    return total;
}

// 3-Fuss-Catalan number C(4m, m)/(3m+1): avoiders with dist = m and rank 0,
// all lengths combined.
inline Int fuss3(long long m) {
    if (m < 0) throw std::invalid_argument("fuss3: need m >= 0");
    return exact_div(binom(4 * m, m), Int(3 * m + 1));
}

// Avoiders with dist = m and rank = t, all lengths combined:
//   (3t+1)/(3m+1) C(4m-t, m-t).
inline Int dist_rank_count(long long m, long long t) {
    if (t < 0 || t > m) throw std::invalid_argument("dist_rank_count: need 0 <= t <= m");
    return exact_div(Int(3 * t + 1) * binom(4 * m - t, m - t), Int(3 * m + 1));
}

// The same count in the shape Lagrange inversion produces,
// [y^{m-t}] b(y)^{3t+1} = (3t+1)/(4m-t+1) C(4m-t+1, m-t).
inline Int dist_rank_count_lagrange(long long m, long long t) {
    if (t < 0 || t > m) throw std::invalid_argument("dist_rank_count_lagrange: need 0 <= t <= m");
    return exact_div(Int(3 * t + 1) * binom(4 * m - t + 1, m - t), Int(4 * m - t + 1));
}

// Avoiders with dist = m, all lengths and ranks combined: C(4m+2, m)/(2m+1).
inline Int dist_total(long long m) {
    if (m < 0) throw std::invalid_argument("dist_total: need m >= 0");
    return exact_div(binom(4 * m + 2, m), Int(2 * m + 1));
}

}  // namespace invseq_lab
