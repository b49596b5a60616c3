#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fairsquare/measure.hpp"

namespace fsqtest {

// Random grid density over `box`: random interior cuts, random cell densities,
// with a fraction of empty cells.
inline fsq::GridDensity random_density(std::mt19937_64& rng, const fsq::Rect& box, int max_cuts = 5,
                                       double zero_prob = 0.3) {
    std::uniform_int_distribution<int> nc(1, max_cuts);
    std::uniform_real_distribution<double> u(0, 1);
    auto cuts = [&](double lo, double hi) {
        std::vector<double> v{lo, hi};
        int k = nc(rng) - 1;
        for (int i = 0; i < k; ++i) v.push_back(lo + (hi - lo) * (0.02 + 0.96 * u(rng)));
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    auto xs = cuts(box.x0, box.x1), ys = cuts(box.y0, box.y1);
    std::vector<std::vector<double>> cells(ys.size() - 1, std::vector<double>(xs.size() - 1));
    bool any = false;
    for (auto& row : cells)
        for (auto& c : row) {
            c = u(rng) < zero_prob ? 0.0 : 0.05 + 3 * u(rng);
            any = any || c > 0;
        }
    if (!any) cells[0][0] = 1;
    return fsq::GridDensity(xs, ys, cells);
}

// Random density that is positive everywhere on `box`.
inline fsq::GridDensity random_positive_density(std::mt19937_64& rng, const fsq::Rect& box,
                                                int max_cuts = 5) {
    return random_density(rng, box, max_cuts, 0.0);
}

} // namespace fsqtest
