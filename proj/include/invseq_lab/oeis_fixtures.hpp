#pragma once

// Bundled b-file snapshots for the three sequences the workbench
// cross-checks, so offline runs never touch the network.  Each constant
// holds the b-file text verbatim: one "index value" pair per line.

#include <string_view>

namespace invseq_lab::fixtures {

// Fuss-Catalan numbers C(4m,m)/(3m+1).
inline constexpr std::string_view kA002293 =
    "0 1\n"
    "1 1\n"
    "2 4\n"
    "3 22\n"
    "4 140\n"
    "5 969\n"
    "6 7084\n"
    "7 53820\n"
    "8 420732\n"
    "9 3362260\n"
    "10 27343888\n"
    "11 225568798\n"
    "12 1882933364\n"
    "13 15875338990\n"
    "14 134993766600\n"
    "15 1156393243320\n"
    "16 9969937491420\n"
    "17 86445222719724\n"
    "18 753310723010608\n"
    "19 6594154339031800\n"
    "20 57956002331347120\n";

// C(4m+2,m)/(2m+1): totals of the dist distribution.
inline constexpr std::string_view kA069271 =
    "0 1\n"
    "1 2\n"
    "2 9\n"
    "3 52\n"
    "4 340\n"
    "5 2394\n"
    "6 17710\n"
    "7 135720\n"
    "8 1068012\n"
    "9 8579560\n"
    "10 70068713\n"
    "11 580034052\n"
    "12 4855986044\n"
    "13 41043559340\n"
    "14 349756577100\n"
    "15 3001701610320\n"
    "16 25921837477692\n"
    "17 225083787458904\n"
    "18 1963988670706228\n"
    "19 17211860478150800\n"
    "20 151433425446423120\n";

// Triangle (3t+1)/(3m+1) * C(4m-t, m-t) read by rows m = 0..8, t = 0..m.
inline constexpr std::string_view kA355174 =
    "0 1\n"
    "1 1\n"
    "2 1\n"
    "3 4\n"
    "4 4\n"
    "5 1\n"
    "6 22\n"
    "7 22\n"
    "8 7\n"
    "9 1\n"
    "10 140\n"
    "11 140\n"
    "12 49\n"
    "13 10\n"
    "14 1\n"
    "15 969\n"
    "16 969\n"
    "17 357\n"
    "18 85\n"
    "19 13\n"
    "20 1\n"
    "21 7084\n"
    "22 7084\n"
    "23 2695\n"
    "24 700\n"
    "25 130\n"
    "26 16\n"
    "27 1\n"
    "28 53820\n"
    "29 53820\n"
    "30 20930\n"
    "31 5750\n"
    "32 1196\n"
    "33 184\n"
    "34 19\n"
    "35 1\n"
    "36 420732\n"
    "37 420732\n"
    "38 166257\n"
    "39 47502\n"
    "40 10647\n"
    "41 1872\n"
    "42 247\n"
    "43 22\n"
    "44 1\n";

inline constexpr std::string_view fixture_for(std::string_view id) {
    if (id == "A002293") return kA002293;
    if (id == "A069271") return kA069271;
    if (id == "A355174") return kA355174;
    return {};
}

}  // namespace invseq_lab::fixtures
