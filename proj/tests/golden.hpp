// Published Betti tables, written row by row as they are printed: row r
// holds beta_{i, i+r} for i = 0, 1, ...
#ifndef AGSUM_TESTS_GOLDEN_HPP
#define AGSUM_TESTS_GOLDEN_HPP

#include <vector>

#include "agsum/betti.hpp"

namespace golden {

inline agsum::BettiTable from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    agsum::BettiTable t;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t i = 0; i < rows[r].size(); ++i)
            if (rows[r][i] != 0) t.set(static_cast<int>(i), static_cast<int>(i + r), rows[r][i]);
    return t;
}

// Fiber product of K[x,y,z]/(x^3,y^4,z^4) and K[u,v]/(u^5,v^5).
inline agsum::BettiTable fiber_product_table() {
    return from_rows({
        {1, 0, 0, 0, 0, 0},
        {0, 6, 9, 5, 1, 0},
        {0, 1, 2, 1, 0, 0},
        {0, 2, 4, 2, 0, 0},
        {0, 2, 6, 6, 2, 0},
        {0, 0, 2, 4, 2, 0},
        {0, 0, 1, 2, 1, 0},
        {0, 0, 0, 0, 0, 0},
        {0, 0, 1, 4, 5, 2},
    });
}
inline const std::vector<std::int64_t> kFiberProductTotals = {1, 11, 25, 24, 11, 2};

// Connected sum of the same two factors.
inline agsum::BettiTable connected_sum_table() {
    return from_rows({
        {1, 0, 0, 0, 0, 0},
        {0, 6, 9, 5, 1, 0},
        {0, 1, 2, 1, 0, 0},
        {0, 2, 4, 2, 0, 0},
        {0, 2, 6, 6, 2, 0},
        {0, 0, 2, 4, 2, 0},
        {0, 0, 1, 2, 1, 0},
        {0, 1, 5, 9, 6, 0},
        {0, 0, 0, 0, 0, 1},
    });
}
inline const std::vector<std::int64_t> kConnectedSumTotals = {1, 12, 29, 29, 12, 1};

// K[x]/(x^4) # K[y]/(y^4) # K[z]/(z^4), rows as printed.
inline agsum::BettiTable three_point_sum_table() {
    return from_rows({
        {1, 0, 0, 0},
        {0, 3, 2, 0},
        {0, 2, 3, 0},
        {0, 0, 0, 1},
    });
}
// Q/(xy, xz, yz), rows as printed.
inline agsum::BettiTable coordinate_axes_table() {
    return from_rows({
        {1, 0, 0, 0},
        {0, 3, 2, 0},
    });
}
// The printed "total" line, shared by both tables.
inline const std::vector<std::int64_t> kPrintedThreePointTotals = {1, 3, 3, 1};

}  // namespace golden

#endif
