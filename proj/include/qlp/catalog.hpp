#pragma once

#include <string_view>

// Catalog of known even-length quaternary Legendre pairs and the worked
// example objects the test suite pins down. Pairs are two glyph lines each.

namespace qlp::catalog {

/// Even lengths N <= 40 reachable from the character construction
/// (length (q-1)/2, q a prime power = 1 mod 4).
inline constexpr std::string_view table1 =
    "i-\n"
    "-+\n"
    "i-+-\n"
    "+--+\n"
    "i+---+\n"
    "-+--++\n"
    "i+--+--+\n"
    "-+++-+--\n"
    "i-++--+--++-\n"
    "+-+----++++-\n"
    "i--++-+-+-++--\n"
    "-++----+-++++-\n"
    "i+-++-+-----+-++-+\n"
    "-++-+++---+++---+-\n"
    "i---++-+-+++-+-++---\n"
    "-++--+-++++----+-++-\n"
    "i+--+-+++---+---+++-+--+\n"
    "+-+--+++++-++--+-----++-\n"
    "i-++++-+---+---+---+-++++-\n"
    "-++----++-++-+-+--+--++++-\n"
    "i++--+----+++-+-+-+++----+--++\n"
    "-+--+-+-----++--++--+++++-+-++\n"
    "i+-++++-+-----++--+--++-----+-++++-+\n"
    "-+---+---+++--+-++-+--+-++---+++-+++\n"
    "i---++-+--+++--+-+-+++-+-+--+++--+-++---\n"
    "+---+------+++-+--+--++-++-+---++++++-++\n";

/// Even lengths N <= 40 reachable from the doubled construction
/// (length 2p, p prime with 2p-1 a prime power).
inline constexpr std::string_view table2 =
    "++-i-+\n"
    "++--+-\n"
    "++ij-i-ji+\n"
    "++--+-+--+\n"
    "+--ij++i++ji--\n"
    "+++-+---++-+--\n"
    "+i-+iiijjj-+jij+-jjjiii+-i\n"
    "++-++----++-+-+-++----++-+\n"
    "+ii-i-jji+-jii+j+jjijj+j+iij-+ijj-i-ii\n"
    "++--++++-+-+----++--+--++++-+-+----++-\n";

// Worked length-10 pair and the binary quadruple it splits into.
inline constexpr std::string_view example_pair10_a = "i-ji+++ij-";
inline constexpr std::string_view example_pair10_b = "--++-+-++-";
inline constexpr std::string_view example_quad10_w = "+--+++++--";
inline constexpr std::string_view example_quad10_x = "--+-+++-+-";
inline constexpr std::string_view example_quad10_y = "--++-+-++-";

// Ternary pair for q = 25 under the pinned GF(625) realization
// (modulus 2,4,4,0,1 over GF(5), generator t).
inline constexpr std::string_view example_gs25_a = "0---+-++-+---";
inline constexpr std::string_view example_gs25_b = "++---+--+---+";

// Length-26 objects for p = 13 under the same realization.
inline constexpr std::string_view example_w26 = "++-++++----+-+-+----++++-+";
inline constexpr std::string_view example_x26 = "+--+---+++-++-++-+++---+--";
inline constexpr std::string_view example_c13 = "0+-++----++-+";
inline constexpr std::string_view example_y26 = "++-++----++-+-+-++----++-+";
inline constexpr std::string_view example_gray26 = "+i-+iiijjj-+jij+-jjjiii+-i";

}  // namespace qlp::catalog
