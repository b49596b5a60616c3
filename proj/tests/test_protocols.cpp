#include "doctest.h"

#include <random>

#include "fairsquare/adversary.hpp"
#include "fairsquare/protocols.hpp"
#include "instances.hpp"

using namespace fsq;

namespace {

std::vector<Agent> same_agents(const GridDensity& d, int n) {
    std::vector<Agent> out;
    for (int i = 0; i < n; ++i) out.push_back({i + 1, d});
    return out;
}

void require_valid(const DivisionReport& rep, const CakeDomain& cake, const std::vector<Agent>& agents) {
    auto v = verify_report(rep, cake, procedure_family(rep.procedure), &agents);
    INFO(rep.procedure << ": " << (v.problems.empty() ? std::string() : v.problems[0]));
    CHECK(v.ok());
}

double fraction_of(const DivisionReport& rep, int agent) {
    for (const auto& a : rep.allocation)
        if (a.agent == agent) return a.fraction;
    return -1;
}

// Pools of `kind` on a square cake with four walls.
Rect pool_square(const PoolArrangement& a) { return {0, 0, 10 + a.eps, 10 + a.eps}; }

} // namespace

TEST_CASE("square-two") {
    auto cake = CakeDomain::square(1);
    auto uni = GridDensity::uniform({0, 0, 1, 1});
    auto rep = divide_square_two(same_agents(uni, 2), cake);
    CHECK(rep.bound.value() == doctest::Approx(0.25));
    for (const auto& a : rep.allocation) CHECK(a.fraction == doctest::Approx(0.25).epsilon(1e-9));
    require_valid(rep, cake, same_agents(uni, 2));

    GridDensity top_right({0, 0.5, 1}, {0, 0.5, 1}, {{0, 0}, {0, 1}});
    std::vector<Agent> ag{{1, uni}, {2, top_right}};
    rep = divide_square_two(ag, cake);
    CHECK(fraction_of(rep, 2) == doctest::Approx(1));
    CHECK(fraction_of(rep, 1) == doctest::Approx(0.25));
    require_valid(rep, cake, ag);

    auto pools = gen_pools(PoolKind::Square4Walls, 2);
    auto pc = CakeDomain::rectangle(pool_square(pools));
    rep = divide_square_two(same_agents(pools.density, 2), pc);
    CHECK(rep.min_fraction() == doctest::Approx(0.25).epsilon(1e-9));

    CHECK_THROWS_AS(divide_square_two(same_agents(uni, 3), cake), Error);
}

TEST_CASE("four quarters") {
    auto cake = CakeDomain::square(2);
    auto uni = GridDensity::uniform({0, 0, 2, 2});
    auto rep = four_quarters(same_agents(uni, 2), cake);
    CHECK(rep.min_fraction() >= 0.25 - 1e-9);

    const double e = 0.01;
    auto d = GridDensity::from_masses({0, 1, 2}, {0, 1, 2}, {{1 - e, 1 - e}, {4 - e, 4 + 3 * e}});
    auto ag = same_agents(d, 3);
    rep = four_quarters(ag, cake);
    CHECK(rep.bound.value() == doctest::Approx(0.1));
    CHECK(rep.min_fraction() >= 0.1 - 1e-6);
    bool got_rich_quarter = false;
    for (const auto& a : rep.allocation)
        if (rect_contains({0, 1, 1, 2}, a.piece.bbox(), 1e-12)) got_rich_quarter = true;
    CHECK(got_rich_quarter);
    require_valid(rep, cake, ag);

    for (int seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        auto in = fsqtest::random_instance("four-quarters", 4, rng);
        auto r = four_quarters(in.agents, in.cake);
        CHECK(r.min_fraction() >= 1.0 / 16 - 1e-6);
    }
}

TEST_CASE("four and three walls") {
    auto fat = CakeDomain::rectangle({0, 0, 2, 1});
    auto uni = GridDensity::uniform({0, 0, 2, 1});
    auto rep = divide_four_walls(same_agents(uni, 1), fat);
    CHECK(rep.allocation.size() == 1);
    CHECK(rep.allocation[0].fraction >= 0.5 - 1e-9);

    auto sq = CakeDomain::square(1);
    auto u1 = GridDensity::uniform({0, 0, 1, 1});
    rep = divide_four_walls(same_agents(u1, 2), sq);
    CHECK(rep.bound.value() == doctest::Approx(0.25));
    CHECK(rep.min_fraction() >= 0.25 - 1e-9);

    auto open = CakeDomain::rectangle({0, 0, 1, 2}, kAllWalls & ~kRight);
    auto u2 = GridDensity::uniform({0, 0, 1, 2});
    rep = divide_three_walls(same_agents(u2, 3), open);
    CHECK(rep.bound.value() == doctest::Approx(1.0 / 7));
    require_valid(rep, open, same_agents(u2, 3));

    CHECK_THROWS_AS(divide_four_walls(same_agents(uni, 2), CakeDomain::rectangle({0, 0, 3, 1})), Error);
    CHECK_THROWS_AS(divide_three_walls(same_agents(u2, 2), CakeDomain::rectangle({0, 0, 2, 1}, kAllWalls & ~kRight)),
                    Error);
}

TEST_CASE("same measure procedures") {
    auto uni = GridDensity::uniform({0, 0, 1, 1}, 4);
    auto res = same_fat(uni, 2, {0, 0, 1, 1});
    REQUIRE(res.squares.size() == 2);
    for (const auto& s : res.squares) CHECK(uni.rect_value(s) >= 1 - 1e-9);
    CHECK_FALSE(interiors_overlap(res.squares[0], res.squares[1], 1e-12));

    auto two = GridDensity::uniform({0, 0, 2, 1});
    res = same_fat(two, 1, {0, 0, 2, 1});
    REQUIRE(res.squares.size() == 1);
    CHECK(two.rect_value(res.squares[0]) >= 1 - 1e-9);

    auto tw = GridDensity::uniform({0, 0, 1, 3}, 5.0 / 3);
    res = same_three_walls(tw, 3, {0, 0, 1, 3}, Side::Right);
    REQUIRE(res.squares.size() == 3);
    for (const auto& s : res.squares) {
        CHECK(tw.rect_value(s) >= 1 - 1e-9);
        CHECK(s.x1 <= 1 + 3 + 1e-9);
    }
}

TEST_CASE("ratio") {
    auto cake = CakeDomain::square(1);
    auto uni = GridDensity::uniform({0, 0, 1, 1});
    auto rep = ratio_divide(same_agents(uni, 2), cake);
    CHECK(rep.ratio_r == doctest::Approx(1));
    CHECK(rep.min_fraction() >= 0.25 - 1e-9);

    GridDensity skew({0, 0.5, 1}, {0, 1}, {{1, 2}});
    std::vector<Agent> ag{{1, GridDensity::uniform({0, 0, 1, 1}, 1.5)}, {2, skew}};
    rep = ratio_divide(ag, cake);
    CHECK(rep.ratio_r <= 2 + 1e-9);
    CHECK(rep.min_fraction() >= 1.0 / 8 - 1e-9);
    require_valid(rep, cake, ag);

    GridDensity hole({0, 0.5, 1}, {0, 1}, {{0, 1}});
    CHECK_THROWS_AS(ratio_divide({{1, uni}, {2, hole}}, cake), Error);
}

TEST_CASE("staircase and unbounded cakes") {
    auto pools = gen_pools(PoolKind::QuarterPlane, 2);
    auto rep = staircase_divide(same_agents(pools.density, 2), CakeDomain::quarter_plane());
    for (const auto& a : rep.allocation) CHECK(a.fraction == doctest::Approx(1.0 / 3).epsilon(1e-9));

    Staircase st{{{0, 1}, {1, 0}}};
    auto two = CakeDomain::staircase(st);
    GridDensity d({0, 1, 2}, {0, 1, 2}, {{0, 1}, {1, 1}});
    rep = staircase_divide(same_agents(d, 1), two);
    CHECK(rep.bound.value() == doctest::Approx(0.5));
    CHECK(rep.min_fraction() >= 0.5 - 1e-9);

    auto sym = GridDensity::uniform({-1, 0, 1, 1});
    rep = half_plane_divide(same_agents(sym, 2), CakeDomain::half_plane());
    for (const auto& a : rep.allocation) CHECK(a.fraction == doctest::Approx(0.5).epsilon(1e-9));

    auto hp = gen_pools(PoolKind::HalfPlane, 3);
    CHECK(hp.pools.size() == 4);
    rep = half_plane_divide(same_agents(hp.density, 3), CakeDomain::half_plane());
    CHECK(rep.min_fraction() >= 0.25 - 1e-6);

    auto plane = CakeDomain::plane();
    auto blob = GridDensity::uniform({-1, -1, 1, 1});
    rep = plane_divide(same_agents(blob, 2), plane);
    CHECK(rep.allocation.size() == 2);
    CHECK(rep.min_fraction() >= 0.5 - 1e-9);

    auto clusters = GridDensity::from_masses({-10, -9, 9, 10}, {-10, -9, 9, 10},
                                             {{1, 0, 1}, {0, 0, 0}, {1, 0, 1}});
    rep = plane_divide(same_agents(clusters, 4), plane);
    CHECK(rep.bound.value() == doctest::Approx(0.25));
    CHECK(rep.min_fraction() >= 0.25 - 1e-9);
    require_valid(rep, plane, same_agents(clusters, 4));
}

TEST_CASE("greedy compact") {
    auto cake = CakeDomain::grid({{0, 0, 1, 1}, {1, 0, 2, 1}, {0, 1, 1, 2}});
    GridDensity d({0, 1, 2}, {0, 1, 2}, {{1, 2}, {3, 0}});
    auto rep = greedy_compact_divide(same_agents(d, 1), cake);
    CHECK(rep.relative);
    CHECK(rep.allocation[0].fraction == doctest::Approx(1));

    GridDensity cell({0, 1, 2}, {0, 1, 2}, {{0, 1}, {0, 0}});
    auto ag = same_agents(cell, 2);
    rep = greedy_compact_divide(ag, cake);
    CHECK(rep.min_fraction() >= 0.1 - 1e-9);
    for (const auto& a : rep.allocation) CHECK(rect_contains({1, 0, 2, 1}, a.piece.bbox(), 1e-12));

    rep = greedy_compact_divide(ag, cake, true);
    CHECK(rep.min_fraction() >= 0.25 - 1e-9);
    require_valid(rep, cake, ag);
}

TEST_CASE("fat rectangles, pairs and ffdp") {
    auto sq = CakeDomain::square(1);
    auto uni = GridDensity::uniform({0, 0, 1, 1});
    auto rep = fatrect_divide(same_agents(uni, 2), sq);
    for (const auto& a : rep.allocation) CHECK(a.fraction == doctest::Approx(0.5).epsilon(1e-9));

    auto qp = gen_pools(PoolKind::QuarterPlane, 2);
    auto qcake = CakeDomain::rectangle(pool_square(qp));
    rep = fatrect_divide(same_agents(qp.density, 2), qcake);
    CHECK(rep.min_fraction() == doctest::Approx(1.0 / 3).epsilon(1e-9));

    rep = pairs_divide(same_agents(uni, 2), sq);
    for (const auto& a : rep.allocation) CHECK(a.fraction == doctest::Approx(0.5).epsilon(1e-9));

    auto corners = gen_pools(PoolKind::Square4Walls, 2);
    auto ccake = CakeDomain::rectangle(pool_square(corners));
    auto ag = same_agents(corners.density, 2);
    CHECK(divide_square_two(ag, ccake).min_fraction() == doctest::Approx(0.25).epsilon(1e-9));
    rep = pairs_divide(ag, ccake);
    CHECK(rep.min_fraction() == doctest::Approx(0.5).epsilon(1e-9));
    require_valid(rep, ccake, ag);

    auto rait = CakeDomain::rait({0, 0}, 1);
    std::vector<double> g{0, 0.25, 0.5, 0.75, 1};
    std::vector<std::vector<double>> cells(4, std::vector<double>(4, 0.0));
    for (int iy = 0; iy < 4; ++iy)
        for (int ix = 0; ix + iy <= 2; ++ix) cells[iy][ix] = 1;
    GridDensity tri(g, g, cells);
    rep = ffdp_divide(same_agents(tri, 2), rait);
    CHECK(rep.min_fraction() >= 0.5 - 1e-9);
    require_valid(rep, rait, same_agents(tri, 2));

    rep = ffdp_divide(same_agents(uni, 2), sq);
    for (const auto& a : rep.allocation) CHECK(a.fraction == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("dispatch and compatibility") {
    CHECK(auto_procedure(CakeDomain::square(1)) == "four-walls");
    CHECK(auto_procedure(CakeDomain::rectangle({0, 0, 2, 1}, kAllWalls & ~kTop)) == "three-walls");
    CHECK(auto_procedure(CakeDomain::quarter_plane()) == "staircase");
    CHECK(auto_procedure(CakeDomain::half_plane()) == "half-plane");
    CHECK(auto_procedure(CakeDomain::plane()) == "plane");
    CHECK(auto_procedure(CakeDomain::grid({{0, 0, 1, 1}})) == "greedy-compact");

    CHECK(cake_row(CakeDomain::square(1)) == "4 walls");
    CHECK(cake_row(CakeDomain::half_plane()) == "1 wall");
    CHECK(cake_row(CakeDomain::rait({0, 0}, 1)) == "triangle");
    CHECK_NOTHROW(check_compatible("four-walls", CakeDomain::square(1), Family::Squares));
    CHECK_THROWS_WITH_AS(check_compatible("four-walls", CakeDomain::half_plane(), Family::Squares),
                         doctest::Contains("\"1 wall\""), Error);
    CHECK_THROWS_AS(check_compatible("four-walls", CakeDomain::square(1), Family::SquarePairs), Error);
    CHECK(procedure_for(CakeDomain::square(1), Family::SquarePairs) == "pairs");
    CHECK(procedure_for(CakeDomain::rait({0, 0}, 1), Family::Ffdp) == "ffdp");
    for (const auto& name : procedure_names())
        CHECK(std::string(family_name(procedure_family(name))).size() > 0);
    CHECK_THROWS_AS(run_procedure("no-such", {}, CakeDomain::square(1)), Error);
}

TEST_CASE("property runs") {
    struct Case {
        const char* gen;
        const char* proc;
    };
    const Case cases[] = {{"four-quarters", "four-quarters"}, {"four-walls", "four-walls"},
                          {"three-walls", "three-walls"},     {"same-fat", "same-fat"},
                          {"same-three-walls", "same-three-walls"}, {"staircase", "staircase"},
                          {"half-plane", "half-plane"},       {"plane", "plane"},
                          {"fat-rects", "fat-rects"},         {"pairs", "pairs"},
                          {"ffdp", "ffdp"},                   {"ratio", "ratio"},
                          {"greedy-compact", "greedy-compact"}};
    for (const auto& c : cases)
        for (int n = 2; n <= 5; ++n)
            for (int t = 0; t < 15; ++t) {
                std::mt19937_64 rng(static_cast<uint64_t>(n * 1000 + t));
                auto in = fsqtest::random_instance(c.gen, n, rng);
                auto rep = run_procedure(c.proc, in.agents, in.cake);
                INFO(c.proc << " n=" << n << " t=" << t);
                CHECK(static_cast<int>(rep.allocation.size()) == n);
                auto v = verify_report(rep, in.cake, procedure_family(c.proc), &in.agents);
                INFO((v.problems.empty() ? std::string() : v.problems[0]));
                CHECK(v.disjoint);
                CHECK(v.walls);
                CHECK(v.guarantee);
                if (std::string(c.proc) != "ffdp") CHECK(v.shapes);
            }
}
