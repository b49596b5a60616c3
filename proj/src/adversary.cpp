// Pool arrangements behind the impossibility bounds, and a randomized probe
// that tries to beat them.

#include "fairsquare/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fsq {

namespace {

struct Pools {
    std::vector<Rect> rects;
    std::vector<int> level;
};

Rect pool_at(double x, double y, double eps) { return {x, y, x + eps, y + eps}; }

// Shrinks `p` into the pool square at the origin: x -> ox + d x, y -> d y.
Pools deflate(const Pools& p, double ox, double d) {
    if (p.rects.size() <= 1) return p;
    Pools out;
    for (size_t k = 0; k < p.rects.size(); ++k) {
        const Rect& r = p.rects[k];
        out.rects.push_back({ox + d * r.x0, d * r.y0, ox + d * r.x1, d * r.y1});
        out.level.push_back(p.level[k] + 1);
    }
    return out;
}

void add(Pools& p, Rect r) {
    p.rects.push_back(r);
    p.level.push_back(0);
}

Pools quarter(int n, double eps, double d) {
    Pools p;
    if (n <= 1) {
        add(p, pool_at(0, 0, eps));
        return p;
    }
    p = deflate(quarter(n - 1, eps, d), 0, d);
    add(p, pool_at(10, 0, eps));
    add(p, pool_at(0, 10, eps));
    return p;
}

// Odd n only; the deflated copy is centred inside the pool at the origin
// because the arrangement reaches to negative x.
Pools half(int n, double eps, double d) {
    Pools p;
    if (n <= 1) {
        add(p, pool_at(0, 0, eps));
        return p;
    }
    p = deflate(half(n - 2, eps, d), eps / 2, d);
    add(p, pool_at(5, 0, eps));
    add(p, pool_at(0, 10, eps));
    add(p, pool_at(-5, 0, eps));
    return p;
}

GridDensity pool_density(const std::vector<Rect>& pools, double each) {
    std::vector<double> xs, ys;
    for (const auto& r : pools) {
        xs.insert(xs.end(), {r.x0, r.x1});
        ys.insert(ys.end(), {r.y0, r.y1});
    }
    auto uniq = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(xs);
    uniq(ys);
    std::vector<std::vector<double>> m(ys.size() - 1, std::vector<double>(xs.size() - 1, 0.0));
    for (const auto& r : pools) {
        auto ix0 = std::lower_bound(xs.begin(), xs.end(), r.x0) - xs.begin();
        auto ix1 = std::lower_bound(xs.begin(), xs.end(), r.x1) - xs.begin();
        auto iy0 = std::lower_bound(ys.begin(), ys.end(), r.y0) - ys.begin();
        auto iy1 = std::lower_bound(ys.begin(), ys.end(), r.y1) - ys.begin();
        for (auto iy = iy0; iy < iy1; ++iy)
            for (auto ix = ix0; ix < ix1; ++ix) {
                double share = (xs[ix + 1] - xs[ix]) / r.width() * (ys[iy + 1] - ys[iy]) / r.height();
                m[iy][ix] += each * share;
            }
    }
    return GridDensity::from_masses(xs, ys, m);
}

} // namespace

PoolKind parse_pool_kind(const std::string& s) {
    if (s == "quarter-plane") return PoolKind::QuarterPlane;
    if (s == "square" || s == "square-4-walls") return PoolKind::Square4Walls;
    if (s == "half-plane") return PoolKind::HalfPlane;
    throw Error("unsupported pool arrangement: " + s);
}

std::string pool_kind_name(PoolKind k) {
    switch (k) {
    case PoolKind::QuarterPlane: return "quarter-plane";
    case PoolKind::Square4Walls: return "square-4-walls";
    case PoolKind::HalfPlane: return "half-plane";
    }
    return "?";
}

PoolArrangement gen_pools(PoolKind kind, int n, double eps) {
    if (n < 2) throw Error("pool arrangements need n >= 2");
    if (!(eps > 0) || eps > 0.01) throw Error("pool side must be in (0, 0.01]");
    PoolArrangement a;
    a.kind = kind;
    a.n = n;
    a.eps = eps;
    a.delta = eps / 20;
    Pools p;
    switch (kind) {
    case PoolKind::QuarterPlane:
        p = quarter(n, eps, a.delta);
        a.cake = CakeDomain::quarter_plane();
        break;
    case PoolKind::Square4Walls:
        p = deflate(quarter(n - 1, eps, a.delta), 0, a.delta);
        add(p, pool_at(10, 0, eps));
        add(p, pool_at(0, 10, eps));
        add(p, pool_at(10, 10, eps));
        a.cake = CakeDomain::rectangle({0, 0, 10 + eps, 10 + eps});
        break;
    case PoolKind::HalfPlane:
        if (n == 2) {
            add(p, pool_at(-5, 0, eps));
            add(p, pool_at(5, 0, eps));
        } else {
            p = half(n % 2 == 1 ? n : n - 1, eps, a.delta);
        }
        a.cake = CakeDomain::half_plane();
        break;
    }
    a.pools = p.rects;
    a.level = p.level;
    a.pool_value = 1.0 / static_cast<double>(a.pools.size());
    a.density = pool_density(a.pools, a.pool_value);
    return a;
}

namespace {

struct Cand {
    Rect sq;
    double value;
};

// Bounded box of the cake that holds every square worth considering: the
// support grown by its own size toward open sides.
Rect working_box(const GridDensity& d, const CakeDomain& cake) {
    Rect s = d.support();
    double g = std::max(s.width(), s.height());
    Rect grown{s.x0 - g, s.y0 - g, s.x1 + g, s.y1 + g};
    Rect b = intersect(grown, cake.base == CakeDomain::Base::Rect ? cake.allowed_rect() : cake.bbox());
    return b;
}

std::vector<Cand> candidates(const GridDensity& d, const Rect& box) {
    std::vector<double> X{box.x0, box.x1}, Y{box.y0, box.y1};
    for (double x : d.xs())
        if (x > box.x0 && x < box.x1) X.push_back(x);
    for (double y : d.ys())
        if (y > box.y0 && y < box.y1) Y.push_back(y);
    std::sort(X.begin(), X.end());
    std::sort(Y.begin(), Y.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    std::vector<Cand> out;
    for (double x : X)
        for (double y : Y)
            for (int sx : {1, -1})
                for (int sy : {1, -1}) {
                    double room = std::min(sx > 0 ? box.x1 - x : x - box.x0, sy > 0 ? box.y1 - y : y - box.y0);
                    if (!(room > 0)) continue;
                    std::vector<double> sides{room};
                    for (double x2 : X)
                        if (sx * (x2 - x) > 0 && sx * (x2 - x) < room) sides.push_back(sx * (x2 - x));
                    for (double y2 : Y)
                        if (sy * (y2 - y) > 0 && sy * (y2 - y) < room) sides.push_back(sy * (y2 - y));
                    for (double s : sides) {
                        Rect sq{sx > 0 ? x : x - s, sy > 0 ? y : y - s, sx > 0 ? x + s : x, sy > 0 ? y + s : y};
                        double v = d.rect_value(sq);
                        if (v > 0) out.push_back({sq, v});
                    }
                }
    std::sort(out.begin(), out.end(), [](const Cand& a, const Cand& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.sq.width() != b.sq.width()) return a.sq.width() < b.sq.width();
        return std::tie(a.sq.x0, a.sq.y0) < std::tie(b.sq.x0, b.sq.y0);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Cand& a, const Cand& b) {
                              return a.sq.x0 == b.sq.x0 && a.sq.y0 == b.sq.y0 && a.sq.x1 == b.sq.x1 &&
                                     a.sq.y1 == b.sq.y1;
                          }),
              out.end());
    return out;
}

bool free_of(const Rect& r, const std::vector<Rect>& taken) {
    for (const auto& t : taken)
        if (interiors_overlap(r, t, 0)) return false;
    return true;
}

} // namespace

ProbeResult probe_upper_bound(const GridDensity& d, const CakeDomain& cake, int n, int trials,
                              std::uint64_t seed) {
    if (trials < 1) throw Error("probe needs at least one trial");
    if (n < 1) throw Error("probe needs at least one agent");
    ProbeResult res;
    res.trials = trials;
    const double total = d.total();
    if (!(total > 0)) return res;
    Rect box = working_box(d, cake);
    if (!box.bounded() || box.empty()) return res;
    const auto cands = candidates(d, box);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rect> taken;
        double worst = kInf;
        for (int k = 0; k < n; ++k) {
            // Either the best free square, or the smallest free square worth
            // at least a random share of it.
            const Cand* best = nullptr;
            for (const auto& c : cands)
                if (free_of(c.sq, taken)) {
                    best = &c;
                    break;
                }
            if (!best) {
                worst = 0;
                break;
            }
            const Cand* pick = best;
            if (u(rng) < 0.8) {
                double tau = best->value * u(rng);
                for (const auto& c : cands) {
                    if (c.value < tau) break;
                    if (c.sq.width() < pick->sq.width() && free_of(c.sq, taken)) pick = &c;
                }
            }
            taken.push_back(pick->sq);
            worst = std::min(worst, pick->value / total);
        }
        if (worst > res.best_min_fraction || res.best_allocation.empty()) {
            res.best_min_fraction = std::max(res.best_min_fraction, worst);
            res.best_allocation = taken;
        }
    }
    return res;
}

} // namespace fsq
