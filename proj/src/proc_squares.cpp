// Square pieces for bounded cakes with walls: the two-agent procedure, Four
// Quarters, and the mutually recursive 4-walls / 3-walls procedures.

#include <algorithm>
#include <cmath>

#include "engine.hpp"

namespace fsq {

using namespace detail;

namespace {

// Quarters of [0,1]^2: bottom-left, bottom-right, top-left, top-right.
std::vector<Rect> quarters() {
    return {{0, 0, .5, .5}, {.5, 0, 1, .5}, {0, .5, .5, 1}, {.5, .5, 1, 1}};
}

// Frame on [0,1]^2 putting the cake corner of quarter j at the origin.
Frame corner_frame(int j) {
    Frame f;
    if (j & 1) f = f.then(flip_x(1));
    if (j & 2) f = f.then(flip_y(1));
    return f;
}

// Best of the three squares covering [0,1]^2 minus [0,s]^2.
Rect best_l_square(const View& w, int i, double s) {
    auto cover = cover_witness(Piece::lshape({0, 0, 1, 1}, {0, 0, s, s}), false);
    Rect best = cover.at(0).rects[0];
    double bv = -1;
    for (const auto& p : cover) {
        double v = w.val(i, p.rects[0]);
        if (v > bv) {
            bv = v;
            best = p.rects[0];
        }
    }
    return best;
}

int partner(double v, double tot, int n, double low, double margin, double add, double div,
            double slack) {
    if (v < low - slack) return 0;
    if (v > tot - margin - slack) return n;
    return std::min(n, static_cast<int>(std::floor((v + add) / div + slack)));
}

// ---------------- Four Quarters ----------------

void four_quarters_rec(const View& v, const std::vector<int>& ag) {
    const int n = static_cast<int>(ag.size());
    if (n == 1) {
        v.give_square(ag[0], {0, 0, 1, 1});
        return;
    }
    auto Q = quarters();
    auto vals = v.eval(ag, Q, "four-quarters: quarters");
    std::vector<std::vector<int>> P(n, std::vector<int>(4));
    for (int k = 0; k < n; ++k) {
        double tot = row_sum(vals[k]);
        for (int j = 0; j < 4; ++j)
            P[k][j] = partner(vals[k][j], tot, n, 1, 3, 8, 6, v.cx->slack);
    }
    Split sp = split_rooms(ag, P);
    if (sp.hard < 0) {
        for (int j = 0; j < 4; ++j) {
            const auto& g = sp.groups[j];
            if (g.size() == 1) v.give_square(g[0], Q[j]);
            else if (g.size() > 1) four_quarters_rec(v.sub(scaled(Q[j].x0, Q[j].y0, .5), Q[j]), g);
        }
        return;
    }
    View w = v.sub(corner_frame(sp.hard), {0, 0, 1, 1});
    std::vector<double> side(n);
    for (int k = 0; k < n; ++k) {
        double tot = row_sum(vals[k]);
        side[k] = clamp_mark(w.mark_corner(ag[k], {0, 0}, 1, 1, tot - 3, .5, "four-quarters: corner square"), .5);
    }
    int win = argmax_first(side);
    double s = side[win];
    w.give_square(ag[win], best_l_square(w, ag[win], s));
    std::vector<int> rest;
    for (int k = 0; k < n; ++k)
        if (k != win) rest.push_back(ag[k]);
    if (rest.size() == 1) w.give_square(rest[0], {0, 0, s, s});
    else four_quarters_rec(w.sub(scaled(0, 0, s), {0, 0, s, s}), rest);
}

// ---------------- 4 walls / 3 walls ----------------

void four_walls_rec(const View& v, const std::vector<int>& ag, double L);
void three_walls_rec(const View& v, const std::vector<int>& ag, double L);

void four_walls_on(const View& v, const Rect& r, const std::vector<int>& ag) {
    Placement p = r.width() >= r.height() ? place(r, Side::Left, Side::Bottom, true)
                                          : place(r, Side::Bottom, Side::Right, true);
    four_walls_rec(v.sub(p, r), ag, p.w);
}

void three_walls_on(const View& v, const Rect& r, Side open, const std::vector<int>& ag) {
    Side y0 = (open == Side::Left || open == Side::Right) ? Side::Bottom : Side::Left;
    Placement p = place(r, opposite(open), y0, true);
    three_walls_rec(v.sub(p, r), ag, std::min(p.w, 1.0));
}

// Largest x with value of [x, L] x [0,1] equal to `target`, for each agent.
std::vector<double> right_marks(const View& v, const std::vector<int>& ag, double L, double target,
                                const char* label) {
    std::vector<double> xs;
    for (int i : ag) {
        double t = v.mark_cut(i, Axis::X, -1, L, {0, 0, L, 1}, target, label);
        xs.push_back(std::isfinite(t) ? L - t : 0.0);
    }
    return xs;
}

void four_walls_rec(const View& v, const std::vector<int>& ag, double L) {
    const int n = static_cast<int>(ag.size());
    if (n == 1) {
        Rect a{0, 0, 1, 1}, b{L - 1, 0, L, 1};
        v.give_square(ag[0], v.val(ag[0], a) >= v.val(ag[0], b) ? a : b);
        return;
    }
    const double slack = v.cx->slack;
    std::vector<Rect> H{{0, 0, L / 2, 1}, {L / 2, 0, L, 1}};
    auto vals = v.eval(ag, H, "four-walls: halves");
    std::vector<std::vector<int>> P(n, std::vector<int>(2));
    std::vector<double> tot(n);
    for (int k = 0; k < n; ++k) {
        tot[k] = row_sum(vals[k]);
        for (int j = 0; j < 2; ++j) P[k][j] = partner(vals[k][j], tot[k], n, 2, 2, 4, 4, slack);
    }
    Split sp = split_rooms(ag, P);
    if (sp.hard < 0) {
        for (int j = 0; j < 2; ++j)
            if (!sp.groups[j].empty()) four_walls_on(v, H[j], sp.groups[j]);
        return;
    }
    View w = sp.hard == 1 ? v.sub(flip_x(L), {0, 0, L, 1}) : v;
    auto xs = right_marks(w, ag, L, 2, "four-walls: right rectangle");
    int win = argmax_first(xs);
    double xw = xs[win];
    if (xw >= .5) {
        four_walls_on(w, {xw, 0, L, 1}, {ag[win]});
        four_walls_on(w, {0, 0, xw, 1}, without(ag, ag[win]));
        return;
    }
    std::vector<Rect> S{{0, 0, .5, .5}, {0, .5, .5, 1}};
    auto sv = w.eval(ag, S, "four-walls: far-left squares");
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < 2; ++j) P[k][j] = partner(sv[k][j], tot[k], n, 1, 3, 5, 4, slack);
    Split s2 = split_rooms(ag, P);
    if (s2.hard < 0) {
        for (int j = 0; j < 2; ++j)
            if (!s2.groups[j].empty()) three_walls_on(w, S[j], Side::Right, s2.groups[j]);
        return;
    }
    View u = s2.hard == 1 ? w.sub(flip_y(1), {0, 0, L, 1}) : w;
    std::vector<double> side(n);
    for (int k = 0; k < n; ++k)
        side[k] = clamp_mark(u.mark_corner(ag[k], {0, 0}, 1, 1, tot[k] - 3, .5, "four-walls: corner square"), .5);
    win = argmax_first(side);
    double s = side[win];
    Rect top{0, s, 1 - s, 1};
    auto rest = without(ag, ag[win]);
    if (u.val(ag[win], top) >= 1 - slack) {
        u.give_square(ag[win], top);
        three_walls_on(u, {0, 0, s, s}, Side::Right, rest);
    } else {
        four_walls_on(u, {s, 0, L, 1}, {ag[win]});
        three_walls_on(u, {0, 0, s, s}, Side::Top, rest);
    }
}

void three_walls_rec(const View& v, const std::vector<int>& ag, double L) {
    const int n = static_cast<int>(ag.size());
    if (n == 1) {
        v.give_square(ag[0], {0, 0, 1, 1});
        return;
    }
    const double slack = v.cx->slack;
    auto xs = right_marks(v, ag, L, 1, "three-walls: right rectangle");
    int win = argmax_first(xs);
    double xw = xs[win];
    if (xw >= .5) {
        v.give_square(ag[win], {xw, 0, xw + 1, 1});
        four_walls_on(v, {0, 0, xw, 1}, without(ag, ag[win]));
        return;
    }
    std::vector<Rect> S{{0, 0, .5, .5}, {0, .5, .5, 1}};
    auto sv = v.eval(ag, S, "three-walls: far-left squares");
    std::vector<double> tot(n);
    std::vector<std::vector<int>> P(n, std::vector<int>(2));
    for (int k = 0; k < n; ++k) {
        tot[k] = v.val_quiet(ag[k], {0, 0, L, 1});
        for (int j = 0; j < 2; ++j) P[k][j] = partner(sv[k][j], tot[k], n, 1, 2, 5, 4, slack);
    }
    Split sp = split_rooms(ag, P);
    if (sp.hard < 0) {
        for (int j = 0; j < 2; ++j)
            if (!sp.groups[j].empty()) three_walls_on(v, S[j], Side::Right, sp.groups[j]);
        return;
    }
    View u = sp.hard == 1 ? v.sub(flip_y(1), {0, 0, L + 1, 1}) : v;
    std::vector<double> side(n);
    for (int k = 0; k < n; ++k)
        side[k] = clamp_mark(u.mark_corner(ag[k], {0, 0}, 1, 1, tot[k] - 2, .5, "three-walls: corner square"), .5);
    win = argmax_first(side);
    double s = side[win];
    Rect top{0, s, 1 - s, 1};
    auto rest = without(ag, ag[win]);
    if (u.val(ag[win], top) >= 1 - slack) {
        u.give_square(ag[win], top);
        three_walls_on(u, {0, 0, s, s}, Side::Right, rest);
    } else {
        u.give_square(ag[win], {s, 0, s + 1, 1});
        three_walls_on(u, {0, 0, s, s}, Side::Top, rest);
    }
}

// ---------------- top-level wrappers ----------------

Rect bounded_rect(const CakeDomain& cake, const char* what) {
    if (cake.base != CakeDomain::Base::Rect || !cake.rect.bounded() || cake.rect.empty())
        throw Error(std::string(what) + ": cake must be a bounded rectangle");
    return cake.rect;
}

void require_walls(const CakeDomain& cake, unsigned walls, const char* what) {
    if (cake.walls != walls) throw Error(std::string(what) + ": unexpected wall set");
}

} // namespace

DivisionReport divide_square_two(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "square-two";
    Rect r = bounded_rect(cake, name);
    if (!is_square(r, tolerances().geo * std::max(1.0, r.width()))) throw Error("square-two: cake must be a square");
    if (agents.size() != 2) throw Error("square-two: exactly 2 agents required");
    check_agents(agents, cake, 2);
    Ctx cx = make_ctx(agents, units_for(agents, cake, 4));
    View root{&cx, {}, r};
    View v = root.sub(place(r, Side::Left, Side::Bottom, true), r);
    auto Q = quarters();
    auto vals = v.eval({0, 1}, Q, "square-two: quarters");
    int c0 = argmax_first(vals[0]), c1 = argmax_first(vals[1]);
    if (c0 == c1) {
        // an agent with a second quarter worth 1 keeps the pair separable
        for (int j = 0; j < 4 && c0 == c1; ++j)
            if (j != c0 && vals[1][j] >= 1 - cx.slack) c1 = j;
        for (int j = 0; j < 4 && c0 == c1; ++j)
            if (j != c1 && vals[0][j] >= 1 - cx.slack) c0 = j;
    }
    if (c0 != c1) {
        v.give_square(0, Q[c0]);
        v.give_square(1, Q[c1]);
    } else {
        View w = v.sub(corner_frame(c0), {0, 0, 1, 1});
        std::vector<double> side(2);
        for (int k = 0; k < 2; ++k)
            side[k] = clamp_mark(w.mark_corner(k, {0, 0}, 1, 1, 1, .5, "square-two: corner square"), .5);
        int win = argmin_first(side);
        double s = side[win];
        w.give_square(win, {0, 0, s, s});
        w.give_square(1 - win, best_l_square(w, 1 - win, s));
    }
    return finish(name, agents, cake, cx, {1, 4}, 0, 0);
}

DivisionReport four_quarters(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "four-quarters";
    Rect r = bounded_rect(cake, name);
    if (!is_square(r, tolerances().geo * std::max(1.0, r.width()))) throw Error("four-quarters: cake must be a square");
    check_agents(agents, cake, 2);
    const int n = static_cast<int>(agents.size());
    Ctx cx = make_ctx(agents, units_for(agents, cake, 6.0 * n - 8));
    View root{&cx, {}, r};
    four_quarters_rec(root.sub(place(r, Side::Left, Side::Bottom, true), r), all_agents(n));
    return finish(name, agents, cake, cx, {1, 6.0 * n - 8}, 6, 8);
}

DivisionReport divide_four_walls(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "four-walls";
    Rect r = bounded_rect(cake, name);
    require_walls(cake, kAllWalls, name);
    if (fatness(r) > 2 + tolerances().geo) throw Error("four-walls: cake must be a 2-fat rectangle");
    check_agents(agents, cake, 1);
    const int n = static_cast<int>(agents.size());
    double target = std::max(2.0, 4.0 * n - 4);
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, r};
    four_walls_on(root, r, all_agents(n));
    return finish(name, agents, cake, cx, {1, target}, 4, 4);
}

DivisionReport divide_three_walls(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "three-walls";
    Rect r = bounded_rect(cake, name);
    Side open;
    switch (cake.walls) {
    case kLeft | kBottom | kTop: open = Side::Right; break;
    case kRight | kBottom | kTop: open = Side::Left; break;
    case kLeft | kRight | kBottom: open = Side::Top; break;
    case kLeft | kRight | kTop: open = Side::Bottom; break;
    default: throw Error("three-walls: cake must have exactly three walls");
    }
    double along = (open == Side::Left || open == Side::Right) ? r.height() : r.width();
    double across = (open == Side::Left || open == Side::Right) ? r.width() : r.height();
    if (across > along * (1 + tolerances().geo))
        throw Error("three-walls: the open side must be a longest side");
    check_agents(agents, cake, 1);
    const int n = static_cast<int>(agents.size());
    double target = std::max(1.0, 4.0 * n - 5);
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, r};
    three_walls_on(root, r, open, all_agents(n));
    return finish(name, agents, cake, cx, {1, target}, 4, 5);
}

} // namespace fsq
