#pragma once

// Random instances for every procedure: a cake plus agents whose densities
// live inside it.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fairsquare/protocols.hpp"
#include "support.hpp"

namespace fsqtest {

struct Instance {
    fsq::CakeDomain cake;
    std::vector<fsq::Agent> agents;
};

// Density on a grid over `box` whose cells outside `keep` are zeroed.
inline fsq::GridDensity masked_density(std::mt19937_64& rng, std::vector<double> xs, std::vector<double> ys,
                                       const std::function<bool(const fsq::Rect&)>& keep,
                                       double zero_prob = 0.3) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<std::vector<double>> cells(ys.size() - 1, std::vector<double>(xs.size() - 1, 0.0));
    bool any = false;
    for (size_t iy = 0; iy + 1 < ys.size(); ++iy)
        for (size_t ix = 0; ix + 1 < xs.size(); ++ix) {
            fsq::Rect c{xs[ix], ys[iy], xs[ix + 1], ys[iy + 1]};
            if (!keep(c) || u(rng) < zero_prob) continue;
            cells[iy][ix] = 0.05 + 3 * u(rng);
            any = true;
        }
    if (!any)
        for (size_t iy = 0; iy + 1 < ys.size() && !any; ++iy)
            for (size_t ix = 0; ix + 1 < xs.size() && !any; ++ix)
                if (keep({xs[ix], ys[iy], xs[ix + 1], ys[iy + 1]})) {
                    cells[iy][ix] = 1;
                    any = true;
                }
    return fsq::GridDensity(std::move(xs), std::move(ys), cells);
}

inline std::vector<double> random_cuts(std::mt19937_64& rng, double lo, double hi, int max_cuts) {
    std::uniform_int_distribution<int> nc(0, max_cuts);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> v{lo, hi};
    int k = nc(rng);
    for (int i = 0; i < k; ++i) v.push_back(lo + (hi - lo) * (0.02 + 0.96 * u(rng)));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Shape of random densities: `sparse` concentrates value in few small cells.
struct Mix {
    int cuts = 6;
    double zero_prob = 0.3;
};
inline Mix sparse_mix() { return {12, 0.9}; }

inline std::vector<fsq::Agent> agents_on(std::mt19937_64& rng, int n, const fsq::Rect& box, Mix mix) {
    std::vector<fsq::Agent> out;
    for (int i = 0; i < n; ++i) out.push_back({i + 1, random_density(rng, box, mix.cuts, mix.zero_prob)});
    return out;
}

inline Instance random_instance(const std::string& proc, int n, std::mt19937_64& rng, Mix mix = {}) {
    using namespace fsq;
    std::uniform_real_distribution<double> u(0, 1);
    Instance in;
    if (proc == "four-quarters" || proc == "square-two" || proc == "pairs") {
        double s = 0.5 + 4 * u(rng);
        Rect r{-1 + u(rng), 2 * u(rng), 0, 0};
        r.x1 = r.x0 + s;
        r.y1 = r.y0 + s;
        in.cake = CakeDomain::rectangle(r);
        in.agents = agents_on(rng, n, r, mix);
    } else if (proc == "four-walls" || proc == "fat-rects" || proc == "same-fat" || proc == "ratio") {
        double w = 1 + 3 * u(rng), h = w * (0.5 + 1.5 * u(rng));
        Rect r{u(rng), u(rng), 0, 0};
        r.x1 = r.x0 + w;
        r.y1 = r.y0 + h;
        in.cake = CakeDomain::rectangle(r);
        if (proc == "same-fat") {
            GridDensity d = random_density(rng, r, mix.cuts, mix.zero_prob);
            for (int i = 0; i < n; ++i) in.agents.push_back({i + 1, d});
        } else if (proc == "ratio") {
            for (int i = 0; i < n; ++i) in.agents.push_back({i + 1, random_positive_density(rng, r, mix.cuts)});
        } else {
            in.agents = agents_on(rng, n, r, mix);
        }
    } else if (proc == "three-walls" || proc == "same-three-walls") {
        // open side is a longest side
        double along = 1 + 2 * u(rng), across = along * (0.1 + 0.9 * u(rng));
        int open = static_cast<int>(4 * u(rng)) % 4;
        Rect r{0, 0, across, along};
        unsigned walls = kAllWalls & ~kRight;
        if (open == 1) walls = kAllWalls & ~kLeft;
        if (open >= 2) {
            r = {0, 0, along, across};
            walls = open == 2 ? (kAllWalls & ~kTop) : (kAllWalls & ~kBottom);
        }
        in.cake = CakeDomain::rectangle(r, walls);
        if (proc == "same-three-walls") {
            GridDensity d = random_density(rng, r, mix.cuts, mix.zero_prob);
            for (int i = 0; i < n; ++i) in.agents.push_back({i + 1, d});
        } else {
            in.agents = agents_on(rng, n, r, mix);
        }
    } else if (proc == "staircase") {
        int k = 1 + static_cast<int>(4 * u(rng)) % 4;
        Staircase st;
        std::vector<double> xs{0, 12}, ys{0, 12};
        double x = 0, y = k == 1 ? 0 : 2 + 6 * u(rng);
        for (int j = 0; j < k; ++j) {
            st.corners.push_back({x, y});
            xs.push_back(x);
            ys.push_back(y);
            x += 0.5 + 2 * u(rng);
            y = j + 2 == k ? 0 : y * (0.2 + 0.6 * u(rng));
        }
        in.cake = CakeDomain::staircase(st);
        for (double c : random_cuts(rng, 0, 12, mix.cuts)) xs.push_back(c);
        for (double c : random_cuts(rng, 0, 12, mix.cuts)) ys.push_back(c);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (int i = 0; i < n; ++i)
            in.agents.push_back({i + 1, masked_density(rng, xs, ys, [&](const Rect& c) {
                                     return st.contains(c, 1e-12);
                                 }, mix.zero_prob)});
    } else if (proc == "quarter-plane") {
        in.cake = CakeDomain::quarter_plane();
        in.agents = agents_on(rng, n, {0, 0, 10, 10}, mix);
    } else if (proc == "half-plane") {
        in.cake = CakeDomain::half_plane();
        in.agents = agents_on(rng, n, {-10, 0, 10, 10}, mix);
    } else if (proc == "plane") {
        in.cake = CakeDomain::plane();
        in.agents = agents_on(rng, n, {-10, -10, 10, 10}, mix);
    } else if (proc == "ffdp") {
        double leg = 1 + 4 * u(rng);
        if (u(rng) < 0.5) {
            in.cake = CakeDomain::rait({0, 0}, leg);
            auto inside = [leg](const Rect& c) { return c.x1 + c.y1 <= leg + 1e-12; };
            for (int i = 0; i < n; ++i) {
                int m = 4 + static_cast<int>((mix.cuts + 2) * u(rng));
                std::vector<double> g;
                for (int j = 0; j <= m; ++j) g.push_back(leg * j / m);
                in.agents.push_back({i + 1, masked_density(rng, g, g, inside, mix.zero_prob)});
            }
        } else {
            Rect r{0, 0, leg, leg};
            in.cake = CakeDomain::rectangle(r);
            in.agents = agents_on(rng, n, r, mix);
        }
    } else if (proc == "greedy-compact" || proc == "compact-same") {
        int m = 3 + static_cast<int>(4 * u(rng));
        std::vector<Rect> cells;
        for (int iy = 0; iy < m; ++iy)
            for (int ix = 0; ix < m; ++ix)
                if (u(rng) < 0.7) cells.push_back({double(ix), double(iy), ix + 1.0, iy + 1.0});
        if (cells.empty()) cells.push_back({0, 0, 1, 1});
        in.cake = CakeDomain::grid(cells);
        std::vector<double> g;
        for (int j = 0; j <= m; ++j) g.push_back(j);
        auto inside = [&cells](const Rect& c) {
            for (const auto& q : cells)
                if (q.x0 == c.x0 && q.y0 == c.y0) return true;
            return false;
        };
        GridDensity same = masked_density(rng, g, g, inside, std::min(mix.zero_prob, 0.7));
        for (int i = 0; i < n; ++i)
            in.agents.push_back({i + 1, proc == "compact-same" ? same : masked_density(rng, g, g, inside, std::min(mix.zero_prob, 0.7))});
    } else {
        throw Error("no generator for " + proc);
    }
    return in;
}

} // namespace fsqtest
