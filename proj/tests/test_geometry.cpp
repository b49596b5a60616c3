#include "doctest.h"

#include <cmath>
#include <random>

#include "fairsquare/geometry.hpp"

using namespace fsq;

TEST_CASE("fatness of rectangles") {
    CHECK(fatness({0, 0, 1, 1}) == doctest::Approx(1.0));
    CHECK(fatness({0, 0, 10, 20}) == doctest::Approx(2.0));
    CHECK(fatness({0, 0, 3.1, 1}) == doctest::Approx(3.1));
    CHECK_THROWS_WITH_AS(fatness({0, 0, kInf, 1}), "unbounded", Error);
}

TEST_CASE("fatness follows axis scaling") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.1, 5);
    for (int i = 0; i < 500; ++i) {
        Rect r{0, 0, u(rng), u(rng)};
        double f = u(rng);
        Rect s = scale_axis(r, Axis::Y, f);
        double w = r.width(), h = r.height() * f;
        CHECK(fatness(s) == doctest::Approx(std::max(w, h) / std::min(w, h)).epsilon(1e-12));
    }
}

TEST_CASE("cover numbers") {
    CHECK(cover_number(Piece::rect({0, 0, 3.1, 1}), false) == 4);
    CHECK(cover_number(Piece::square({0, 0, 1, 1}), false) == 1);
    CHECK(cover_number(Piece::lshape({0, 0, 2, 2}, {1, 1, 2, 2}), false) == 3);
    CHECK(cover_number(Piece::lshape({0, 0, 2, 2}, {1.5, 0, 2, 0.5}), false) == 3);
    CHECK(cover_number(Piece::lshape({0, 0, 2, 2}, {1, 1, 2, 2}), true) == 2);
    Staircase st{{{0, 3}, {1, 2}, {2, 0}}};
    CHECK(cover_number(Piece::staircase(st), false) == 3);
    CHECK_THROWS_WITH_AS(cover_number(Piece::ffdp({{0, 0}, {1, 0}, {0, 1}}), false), "no closed form",
                         Error);
}

TEST_CASE("cover witnesses tile their piece") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 200; ++i) {
        double a = 1 + 3 * u(rng), s = a * (0.05 + 0.45 * u(rng));
        int corner = i % 4;
        double cx = corner & 1 ? a - s : 0, cy = corner & 2 ? a - s : 0;
        Piece l = Piece::lshape({0, 0, a, a}, {cx, cy, cx + s, cy + s});
        for (bool by_rects : {false, true}) {
            auto cover = cover_witness(l, by_rects);
            // every cover element lies in the L; together they reach all of it
            double union_area = 0;
            const int g = 60;
            for (int ix = 0; ix < g; ++ix)
                for (int iy = 0; iy < g; ++iy) {
                    double x = (ix + 0.5) * a / g, y = (iy + 0.5) * a / g;
                    bool in_cut = x > cx && x < cx + s && y > cy && y < cy + s;
                    bool covered = false;
                    for (const auto& c : cover) {
                        const Rect& r = c.rects[0];
                        covered = covered || (x > r.x0 && x < r.x1 && y > r.y0 && y < r.y1);
                        if (x > r.x0 && x < r.x1 && y > r.y0 && y < r.y1) CHECK_FALSE(in_cut);
                    }
                    if (!in_cut) CHECK(covered);
                    if (covered) union_area += (a / g) * (a / g);
                }
            CHECK(union_area == doctest::Approx(l.area()).epsilon(0.05));
        }
    }
    auto strips = cover_witness(Piece::rect({0, 0, 3.5, 1}), false);
    double lo = 0;
    for (const auto& sq : strips) {
        CHECK(is_square(sq.rects[0], 1e-12));
        CHECK(sq.rects[0].x0 <= lo + 1e-12);
        lo = std::max(lo, sq.rects[0].x1);
    }
    CHECK(lo == doctest::Approx(3.5));
}

TEST_CASE("interior disjointness") {
    CHECK(interior_disjoint({Piece::square({0, 0, 1, 1}), Piece::square({1, 0, 2, 1})}));
    CHECK_FALSE(interior_disjoint({Piece::square({0, 0, 2, 2}), Piece::square({1, 1, 3, 3})}));
    CHECK(interior_disjoint({}));
    CHECK(interior_disjoint({Piece::ffdp({{0, 0}, {1, 0}, {0, 1}}), Piece::ffdp({{1, 0}, {1, 1}, {0, 1}})}));
    CHECK_FALSE(interior_disjoint({Piece::ffdp({{0, 0}, {1, 0}, {0, 1}}), Piece::square({0.2, 0.2, 0.4, 0.4})}));
}

TEST_CASE("overlap bound") {
    Rect base{0, 0, 1, 1};
    auto r = overlap_bound_check(base, {{-1.5, -1.5, 0.5, 0.5}, {0.5, -1.5, 2.5, 0.5},
                                        {-1.5, 0.5, 0.5, 2.5}, {0.5, 0.5, 2.5, 2.5}});
    CHECK(r.ok);
    CHECK(r.count == 4);
    auto e = overlap_bound_check(base, {});
    CHECK(e.ok);
    CHECK(e.count == 0);
    CHECK_THROWS_AS(overlap_bound_check(base, {{0, 0, 0.5, 0.5}}), Error);
    CHECK_THROWS_AS(overlap_bound_check(base, {{0, 0, 2, 2}, {1, 1, 3, 3}}), Error);
}

TEST_CASE("overlap bound holds on random configurations") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    int max_seen = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        Rect base{0, 0, 1, 1};
        std::vector<Rect> others;
        for (int k = 0; k < 40 && others.size() < 8; ++k) {
            double s = 1 + 2 * u(rng);
            double x = -s + (1 + s) * u(rng), y = -s + (1 + s) * u(rng);
            Rect q{x, y, x + s, y + s};
            bool ok = true;
            for (const auto& o : others) ok = ok && !interiors_overlap(o, q, 0);
            if (ok) others.push_back(q);
        }
        auto r = overlap_bound_check(base, others);
        CHECK(r.ok);
        max_seen = std::max(max_seen, r.count);
    }
    CHECK(max_seen <= 4);
    CHECK(max_seen >= 3);
}

TEST_CASE("shadow removal") {
    Staircase c{{{0, 10}, {2, 6}, {5, 3}, {9, 0}}};
    Rect w = make_square(2, 6, 4);
    CHECK(shadow_corner_count(c, w) == 3);
    Staircase n = remove_shadow(c, w);
    REQUIRE(n.corners.size() == 3);
    CHECK(n.corners[0].x == 0);
    CHECK(n.corners[0].y == 10);
    CHECK(n.corners[1].x == 6);
    CHECK(n.corners[1].y == 3);
    CHECK(n.corners[2].x == 9);

    Staircase q{{{0, 0}}};
    CHECK(remove_shadow(q, make_square(0, 0, 1)).corners.size() == 2);
    CHECK(remove_shadow(c, make_square(5, 3, 0.5)).corners.size() == 5);
    CHECK_THROWS_WITH_AS(remove_shadow(c, make_square(1, 6, 1)), "winner not corner-anchored", Error);
}

TEST_CASE("shadow removal preserves staircase validity and area") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 2000; ++t) {
        int k = 1 + t % 6;
        Staircase c;
        double x = 0, y = 10;
        for (int j = 0; j < k; ++j) {
            c.corners.push_back({x, y});
            x += 0.2 + 2 * u(rng);
            y -= 0.2 + 2 * u(rng);
        }
        int j = static_cast<int>(u(rng) * k);
        Rect w = make_square(c.corners[j].x, c.corners[j].y, 0.1 + 8 * u(rng));
        Staircase n = remove_shadow(c, w);
        CHECK_NOTHROW(n.validate());
        int m = shadow_corner_count(c, w);
        CHECK(static_cast<int>(n.corners.size()) == k - m + 2);
        Rect box{-1, -20, 40, 40};
        Rect shadow{-kInf, -kInf, w.x1, w.y1};
        double removed = c.area_within(intersect(box, shadow));
        CHECK(c.area_within(box) - n.area_within(box) == doctest::Approx(removed).epsilon(1e-9));
    }
}

TEST_CASE("axis scaling") {
    Rect r = scale_axis(Rect{0, 0, 2, 1}, Axis::Y, 1.618);
    CHECK(r.height() == doctest::Approx(1.618));
    CHECK(r.width() == 2);
    Rect back = scale_axis(Rect{0, 0, 1, 1}, Axis::Y, 1 / 1.618);
    CHECK(back.height() == doctest::Approx(1 / 1.618));
    Piece p = Piece::lshape({0, 0, 2, 2}, {1, 1, 2, 2});
    Piece same = scale_axis(p, Axis::X, 1.0);
    CHECK(same.rects[0].x1 == 2);
    CHECK(same.rects[1].x0 == 1);
    CHECK(scale_axis(Rect{0, 0, 1, 1}, Axis::X, 2).width() == 2);
    CHECK_THROWS_AS(scale_axis(Rect{0, 0, 1, 1}, Axis::X, 0), Error);
    CHECK_THROWS_AS(scale_axis(Rect{0, 0, 1, 1}, Axis::X, -1), Error);
}

TEST_CASE("forty-five degree polygons") {
    std::vector<Point> rait{{0, 0}, {1, 0}, {0, 1}};
    CHECK(polygon_is_45(rait, 1e-9));
    CHECK(polygon_fatness(rait) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(polygon_is_fat(rait, 2, 1e-6));
    std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(polygon_fatness(sq) == doctest::Approx(1.0).epsilon(1e-6));
    std::vector<Point> thin{{0, 0}, {4, 0}, {4, 1}, {0, 1}};
    CHECK_FALSE(polygon_is_fat(thin, 2, 1e-6));
    std::vector<Point> skew{{0, 0}, {2, 0}, {1, 0.5}};
    CHECK_FALSE(polygon_is_45(skew, 1e-9));
    CHECK(polygon_area(rait) == doctest::Approx(0.5));
    auto half = clip_halfplane(sq, 1, 1, 1);
    CHECK(polygon_area(half) == doctest::Approx(0.5));
}

TEST_CASE("tolerance parsing") {
    auto t = parse_tolerances("1e-7");
    CHECK(t.geo == 1e-7);
    t = parse_tolerances("value=1e-8,probe=0.01");
    CHECK(t.value == 1e-8);
    CHECK(t.probe == 0.01);
    CHECK(t.geo == 1e-9);
    CHECK_THROWS_AS(parse_tolerances("bogus=1"), Error);
    CHECK_THROWS_AS(parse_tolerances("abc"), Error);
}

TEST_CASE("cake domains") {
    auto q = CakeDomain::quarter_plane();
    CHECK(q.wall_count() == 2);
    CHECK(q.piece_inside(Piece::square({3, 4, 10, 11}), 1e-9));
    CHECK_FALSE(q.piece_inside(Piece::square({-1, 4, 1, 6}), 1e-9));
    auto three = CakeDomain::rectangle({0, 0, 1, 1}, kLeft | kBottom | kTop);
    CHECK(three.piece_inside(Piece::square({0.5, 0, 1.5, 1}), 1e-9));
    CHECK_FALSE(three.piece_inside(Piece::square({0.5, 0.5, 1.5, 1.5}), 1e-9));
    auto st = CakeDomain::staircase(Staircase{{{0, 2}, {2, 0}}});
    CHECK(st.piece_inside(Piece::square({2, 0, 5, 3}), 1e-9));
    CHECK_FALSE(st.piece_inside(Piece::square({1, 1, 2, 2}), 1e-9));
}
