#pragma once

// Reference values for the joint length/dist distribution of inversion
// sequences avoiding 102 and 000, transcribed once and used by the
// verification harness as the fixed point every computation route must hit.

#include <array>

namespace invseq_lab {

// kDistCountGrid[n-1][m-1] = number of inversion sequences of length n
// avoiding 102 and 000 whose entries take exactly m distinct values,
// for n = 1..16 and m = 1..8.
inline constexpr int kDistGridMaxN = 16;
inline constexpr int kDistGridMaxM = 8;

inline constexpr std::array<std::array<long long, 8>, 16> kDistCountGrid{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0},
    {0, 4, 1, 0, 0, 0, 0, 0},
    {0, 4, 9, 1, 0, 0, 0, 0},
    {0, 0, 23, 16, 1, 0, 0, 0},
    {0, 0, 19, 76, 25, 1, 0, 0},
    {0, 0, 0, 146, 190, 36, 1, 0},
    {0, 0, 0, 101, 630, 400, 49, 1},
    {0, 0, 0, 0, 972, 2010, 749, 64},
    {0, 0, 0, 0, 576, 5160, 5285, 1288},
    {0, 0, 0, 0, 0, 6658, 19943, 12124},
    {0, 0, 0, 0, 0, 3445, 41895, 62650},
    {0, 0, 0, 0, 0, 0, 46475, 189784},
    {0, 0, 0, 0, 0, 0, 21323, 337876},
    {0, 0, 0, 0, 0, 0, 0, 328786},
    {0, 0, 0, 0, 0, 0, 0, 135439},
}};

// Column sums of the grid: the number of such sequences with exactly m
// distinct values over all lengths (the support in n is finite, m <= n <= 2m).
inline constexpr std::array<long long, 8> kDistColumnTotals{
    2, 9, 52, 340, 2394, 17710, 135720, 1068012};

}  // namespace invseq_lab
