#include "doctest.h"

#include <cmath>
#include <random>

#include "fairsquare/measure.hpp"
#include "support.hpp"

using namespace fsq;

namespace {

// Midpoint-rule integral of the density over a rect, used as an independent oracle.
double brute_rect(const GridDensity& d, const Rect& r, int g = 400) {
    double s = 0, hx = r.width() / g, hy = r.height() / g;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) s += d.density_at(r.x0 + (i + 0.5) * hx, r.y0 + (j + 0.5) * hy);
    return s * hx * hy;
}

MonotoneFamily corner(Point a, int sx, int sy) {
    MonotoneFamily f;
    f.kind = FamilyKind::CornerSquare;
    f.anchor = a;
    f.sx = sx;
    f.sy = sy;
    return f;
}

} // namespace

TEST_CASE("piece values") {
    auto u = GridDensity::uniform({0, 0, 1, 1});
    CHECK(u.piece_value(Piece::square({0, 0, 0.5, 0.5})) == doctest::Approx(0.25));
    GridDensity two({0, 1, 2}, {0, 1}, {{1, 3}});
    CHECK(two.piece_value(Piece::rect({0.5, 0, 1.5, 1})) == doctest::Approx(2.0));
    CHECK(u.piece_value(Piece::ffdp({{0, 0}, {1, 0}, {0, 1}})) == doctest::Approx(0.5));
    CHECK(u.piece_value(Piece::quarter_plane({0.5, 0.5, kInf, kInf})) == doctest::Approx(0.25));
    CHECK(u.piece_value(Piece::pair({0, 0, 0.6, 0.6}, {0.4, 0.4, 1, 1})) ==
          doctest::Approx(0.36 + 0.36 - 0.04));
    CHECK(u.piece_value(Piece::lshape({0, 0, 1, 1}, {0.5, 0.5, 1, 1})) == doctest::Approx(0.75));
    Staircase st{{{0, 0.5}, {0.5, 0}}};
    CHECK(u.piece_value(Piece::staircase(st)) == doctest::Approx(0.75));
}

TEST_CASE("density validation") {
    CHECK_THROWS_AS(GridDensity({0, 1}, {0, 1}, {{-1}}), Error);
    CHECK_THROWS_AS(GridDensity({1, 0}, {0, 1}, {{1}}), Error);
    CHECK_THROWS_AS(GridDensity({0, 1, 2}, {0, 1}, {{1}}), Error);
}

TEST_CASE("values agree with brute-force integration and are additive") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 100; ++t) {
        auto d = fsqtest::random_density(rng, {0, 0, 1, 1});
        Rect r{u(rng) * 0.5, u(rng) * 0.5, 0.5 + u(rng) * 0.5, 0.5 + u(rng) * 0.5};
        CHECK(d.rect_value(r) == doctest::Approx(brute_rect(d, r)).epsilon(2e-2));
        double cx = r.x0 + u(rng) * r.width(), cy = r.y0 + u(rng) * r.height();
        double parts = d.rect_value({r.x0, r.y0, cx, cy}) + d.rect_value({cx, r.y0, r.x1, cy}) +
                       d.rect_value({r.x0, cy, cx, r.y1}) + d.rect_value({cx, cy, r.x1, r.y1});
        CHECK(parts == doctest::Approx(d.rect_value(r)).epsilon(1e-9));
        auto poly = std::vector<Point>{{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
        CHECK(d.polygon_value(poly) == doctest::Approx(d.rect_value(r)).epsilon(1e-9));
        auto lower = clip_halfplane(poly, 1, 1, cx + cy);
        auto upper = clip_halfplane(poly, -1, -1, -(cx + cy));
        CHECK(d.polygon_value(lower) + d.polygon_value(upper) ==
              doctest::Approx(d.rect_value(r)).epsilon(1e-9));
    }
}

TEST_CASE("eval partition") {
    auto u = GridDensity::uniform({0, 0, 1, 1});
    std::vector<Piece> quarters{Piece::square({0, 0, 0.5, 0.5}), Piece::square({0.5, 0, 1, 0.5}),
                                Piece::square({0, 0.5, 0.5, 1}), Piece::square({0.5, 0.5, 1, 1})};
    Piece cake = Piece::square({0, 0, 1, 1});
    auto v = eval_partition(u, quarters, &cake);
    for (double x : v) CHECK(x == doctest::Approx(0.25));
    CHECK(eval_partition(u, {cake}, &cake)[0] == doctest::Approx(1.0));
    CHECK_THROWS_AS(eval_partition(u, {quarters[0], quarters[0]}, &cake), Error);
    CHECK_THROWS_AS(eval_partition(u, {quarters[0], quarters[1]}, &cake), Error);
}

TEST_CASE("mark queries") {
    auto u = GridDensity::uniform({0, 0, 1, 1});
    CHECK(mark(u, corner({0, 0}, 1, 1), 0.25).t == doctest::Approx(0.5));
    auto w = GridDensity::uniform({0, 0, 2, 1});
    MonotoneFamily cut;
    cut.kind = FamilyKind::VerticalCut;
    cut.anchor = {0, 0};
    cut.clip = {0, 0, 2, 1};
    CHECK(mark(w, cut, 1).t == doctest::Approx(1.0));
    GridDensity hot({0, 0.5, 1}, {0, 0.5, 1}, {{4, 0}, {0, 0}});
    CHECK(mark(hot, corner({0, 0}, 1, 1), 0.25).t == doctest::Approx(0.25));
    CHECK(mark_bisect(hot, corner({0, 0}, 1, 1), 0.25) == doctest::Approx(0.25).epsilon(1e-11));
    auto inf = mark(u, corner({0, 0}, 1, 1), 2);
    CHECK(inf.infinite);
    CHECK(std::isinf(inf.t));
    // ties go toward the smaller parameter: a zero-density gap is skipped
    GridDensity gap({0, 1, 2, 3}, {0, 1}, {{1, 0, 1}});
    CHECK(mark(gap, cut, 1).t == doctest::Approx(1.0));
}

TEST_CASE("mark round trip and monotonicity") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 300; ++t) {
        auto d = fsqtest::random_density(rng, {0, 0, 1, 1});
        MonotoneFamily f;
        switch (t % 5) {
        case 0: f = corner({u(rng), u(rng)}, t % 2 ? 1 : -1, t % 3 ? 1 : -1); break;
        case 1:
            f.kind = FamilyKind::VerticalCut;
            f.sx = -1;
            f.anchor = {1, 0};
            f.clip = {0, 0, 1, 1};
            break;
        case 2:
            f.kind = FamilyKind::HorizontalCut;
            f.anchor = {0, 0};
            f.clip = {0, 0, 1, 1};
            break;
        case 3:
            f.kind = FamilyKind::Diagonal45;
            f.region = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
            f.sx = 1;
            f.sy = -1;
            f.offset = -1;
            break;
        default:
            f.kind = FamilyKind::CornerSquarePair;
            f.anchor = {0, 0};
            f.anchor2 = {1, 1};
            f.clip = {0, 0, 1, 1};
            f.tmax = 1;
            break;
        }
        double top = family_value(d, f, family_breakpoints(d, f).back());
        if (top < 1e-6 * d.total()) continue;
        double v1 = top * u(rng), v2 = top * u(rng);
        if (v1 > v2) std::swap(v1, v2);
        auto m1 = mark(d, f, v1), m2 = mark(d, f, v2);
        CHECK(family_value(d, f, m1.t) == doctest::Approx(v1).epsilon(1e-9).scale(d.total()));
        CHECK(m1.t <= m2.t + 1e-12);
        CHECK(m1.t == doctest::Approx(mark_bisect(d, f, v1)).epsilon(1e-9));
        CHECK(d.piece_value(m1.piece) == doctest::Approx(v1).epsilon(1e-9).scale(d.total()));
    }
}

TEST_CASE("best square") {
    GridDensity spot({0, 0.4, 0.6, 1}, {0, 0.4, 0.6, 1}, {{0, 0, 0}, {0, 25, 0}, {0, 0, 0}});
    auto b = best_square(spot, std::vector<Rect>{{0, 0, 1, 1}});
    CHECK(b.value == doctest::Approx(spot.total()));
    CHECK(rect_contains({0, 0, 1, 1}, b.piece.rects[0], 1e-9));
    auto u = GridDensity::uniform({0, 0, 1, 1});
    auto l = best_square(u, Piece::lshape({0, 0, 1, 1}, {0.5, 0.5, 1, 1}));
    CHECK(l.value == doctest::Approx(0.25).epsilon(1e-6));
    auto z = best_square(u, std::vector<Rect>{{0, 0, 0, 1}});
    CHECK(z.value == 0);
}

TEST_CASE("best square on a ring matches dense search") {
    // thin frame of a disc inscribed in the unit square, rasterized on a grid
    const int g = 24;
    std::vector<double> cuts;
    for (int i = 0; i <= g; ++i) cuts.push_back(static_cast<double>(i) / g);
    std::vector<std::vector<double>> cells(g, std::vector<double>(g, 0));
    for (int iy = 0; iy < g; ++iy)
        for (int ix = 0; ix < g; ++ix) {
            double x = (ix + 0.5) / g - 0.5, y = (iy + 0.5) / g - 0.5;
            double r = std::sqrt(x * x + y * y);
            if (r > 0.42 && r < 0.48) cells[iy][ix] = 1;
        }
    GridDensity ring(cuts, cuts, cells);
    auto b = best_square(ring, std::vector<Rect>{{0, 0, 1, 1}});
    double brute = 0;
    const int res = 100;
    for (int ix = 0; ix <= res; ++ix)
        for (int iy = 0; iy <= res; ++iy) {
            double x = static_cast<double>(ix) / res, y = static_cast<double>(iy) / res;
            double s = std::min(1 - x, 1 - y);
            for (int k = 1; k <= res; ++k) {
                double side = s * k / res;
                brute = std::max(brute, ring.rect_value({x, y, x + side, y + side}));
            }
        }
    CHECK(b.value >= brute - 1e-9);
}

TEST_CASE("best square dominates lattice candidates and the cover floor") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 40; ++t) {
        auto d = fsqtest::random_density(rng, {0, 0, 1, 1});
        Piece l = Piece::lshape({0, 0, 1, 1}, {0.6, 0.6, 1, 1});
        auto region = l.decompose();
        auto b = best_square(d, region);
        for (const auto& c : lattice_squares(d, region)) CHECK(b.value >= c.value - 1e-12);
        CHECK(b.value >= d.piece_value(l) / 3 - 1e-9);
        double inside = 0;
        for (const auto& r : region) inside += intersect(r, b.piece.rects[0]).area();
        CHECK(inside == doctest::Approx(b.piece.rects[0].area()).epsilon(1e-9));
    }
}

TEST_CASE("covering lemma") {
    auto u = GridDensity::uniform({0, 0, 2, 2});
    Piece l = Piece::lshape({0, 0, 2, 2}, {1, 1, 2, 2});
    auto r = best_covered_piece(u, cover_witness(l, false));
    CHECK(r.value >= u.piece_value(l) / 3);
    Piece one = Piece::square({0, 0, 1, 1});
    CHECK(best_covered_piece(u, {one}).value == doctest::Approx(1.0));
    Staircase st{{{0, 1}, {1, 0}}};
    auto q = GridDensity::uniform({0, 0, 2, 2});
    CHECK(best_covered_piece(q, cover_witness(Piece::staircase(st), false)).value ==
          doctest::Approx(2.0));
}

TEST_CASE("combined densities") {
    GridDensity a({0, 1, 2}, {0, 1}, {{1, 2}});
    GridDensity b({0, 0.5, 2}, {0, 1}, {{3, 1}});
    auto mx = combine_densities({&a, &b}, [](const std::vector<double>& v) {
        return std::max(v[0], v[1]);
    });
    CHECK(mx.density_at(0.25, 0.5) == doctest::Approx(3));
    CHECK(mx.density_at(0.75, 0.5) == doctest::Approx(1));
    CHECK(mx.density_at(1.5, 0.5) == doctest::Approx(2));
}
