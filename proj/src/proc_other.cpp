// Non-square pieces on bounded cakes: 2-fat rectangles, pairs of squares and
// 2-fat 45-degree polygons.

#include <algorithm>
#include <cmath>
#include <sstream>

#include "engine.hpp"

namespace fsq {

using namespace detail;

namespace {

int need_fat(int g) { return g == 1 ? 1 : 4 * g - 5; }
int need_pair(int g) { return g == 1 ? 1 : 3 * g - 4; }
int need_poly(int g) { return g == 1 ? 1 : 2 * g - 2; }

// Map search_rooms groups (indices into ag) back to agent indices.
std::vector<std::vector<int>> to_agents(const std::vector<std::vector<int>>& groups,
                                        const std::vector<int>& ag) {
    std::vector<std::vector<int>> out;
    for (const auto& g : groups) {
        std::vector<int> a;
        for (int k : g) a.push_back(ag[k]);
        out.push_back(a);
    }
    return out;
}

// Index of a room every agent values below 1, or -1.
int worthless_room(const std::vector<std::vector<double>>& vals, double slack) {
    const int m = static_cast<int>(vals.at(0).size());
    for (int j = 0; j < m; ++j) {
        bool all = true;
        for (const auto& row : vals) all = all && row[j] < 1 - slack;
        if (all) return j;
    }
    return -1;
}

// Two agents, two rooms: each gets a room worth at least 1 if possible.
bool assign_two(const std::vector<std::vector<double>>& vals, double slack, int& r0, int& r1) {
    const int m = static_cast<int>(vals[0].size());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && vals[0][a] >= 1 - slack && vals[1][b] >= 1 - slack) {
                r0 = a;
                r1 = b;
                return true;
            }
    return false;
}

// ---------------- 2-fat rectangles (canonical [0,L] x [0,1], 1 <= L <= 2) ----------------

void fat_rec(const View& v, const std::vector<int>& ag, double L);

void fat_rect_on(const View& v, const Rect& r, const std::vector<int>& ag) {
    Placement p = r.width() >= r.height() ? place(r, Side::Left, Side::Bottom, true)
                                          : place(r, Side::Bottom, Side::Right, true);
    fat_rec(v.sub(p, r), ag, p.w);
}

// Two 2-fat rectangles covering [0,L] x [0,1] minus [0,s]^2 (s <= 1/2).
Rect best_fat_cover(const View& v, int i, double s, double L) {
    double w = std::max(s, (1 - s) / 2);
    Rect a{s, 0, L, 1}, b{0, s, w, 1};
    return v.val(i, a) >= v.val(i, b) ? a : b;
}

void fat_two(const View& v, const std::vector<int>& ag, double L) {
    const double slack = v.cx->slack;
    std::vector<Rect> H{{0, 0, L / 2, 1}, {L / 2, 0, L, 1}};
    auto hv = v.eval(ag, H, "fat-rects: halves");
    int r0, r1;
    if (assign_two(hv, slack, r0, r1)) {
        v.give(ag[0], Piece::rect(H[r0]));
        v.give(ag[1], Piece::rect(H[r1]));
        return;
    }
    int rich = hv[0][0] >= hv[0][1] ? 0 : 1;
    View w = rich == 1 ? v.sub(flip_x(L), {0, 0, L, 1}) : v;
    std::vector<Rect> Q{{0, 0, L / 2, .5}, {0, .5, L / 2, 1}};
    auto qv = w.eval(ag, Q, "fat-rects: quarters");
    if (assign_two(qv, slack, r0, r1)) {
        w.give(ag[0], Piece::rect(Q[r0]));
        w.give(ag[1], Piece::rect(Q[r1]));
        return;
    }
    rich = qv[0][0] >= qv[0][1] ? 0 : 1;
    View u = rich == 1 ? w.sub(flip_y(1), {0, 0, L, 1}) : w;
    std::vector<double> side(2);
    for (int k = 0; k < 2; ++k)
        side[k] = clamp_mark(u.mark_corner(ag[k], {0, 0}, 1, 1, 1, .5, "fat-rects: corner square"), .5);
    int win = argmin_first(side);
    double s = side[win];
    u.give(ag[win], Piece::rect({0, 0, s, s}));
    u.give(ag[1 - win], Piece::rect(best_fat_cover(u, ag[1 - win], s, L)));
}

void fat_rec(const View& v, const std::vector<int>& ag, double L) {
    const int n = static_cast<int>(ag.size());
    if (n == 1) {
        v.give(ag[0], Piece::rect({0, 0, L, 1}));
        return;
    }
    if (n == 2) {
        fat_two(v, ag, L);
        return;
    }
    const double slack = v.cx->slack;
    std::vector<Rect> H{{0, 0, L / 2, 1}, {L / 2, 0, L, 1}};
    auto hv = v.eval(ag, H, "fat-rects: halves");
    auto fits = [&](const std::vector<std::vector<double>>& vals) {
        return [&vals, slack](int k, int j, int g) { return vals[k][j] >= need_fat(g) - slack; };
    };
    auto groups = search_rooms(n, {n - 1, n - 1}, fits(hv));
    if (!groups.empty()) {
        auto ga = to_agents(groups, ag);
        for (int j = 0; j < 2; ++j)
            if (!ga[j].empty()) fat_rect_on(v, H[j], ga[j]);
        return;
    }
    int poor = worthless_room(hv, slack);
    if (poor < 0) throw Error("internal: fat-rectangle halves admit no split");
    View w = poor == 0 ? v.sub(flip_x(L), {0, 0, L, 1}) : v;
    std::vector<double> xs;
    for (int i : ag) {
        double t = w.mark_cut(i, Axis::X, -1, L, {0, 0, L, 1}, 1, "fat-rects: right rectangle");
        xs.push_back(std::isfinite(t) ? L - t : 0.0);
    }
    int win = argmax_first(xs);
    double xw = xs[win];
    if (xw >= .5) {
        w.give(ag[win], Piece::rect({xw, 0, L, 1}));
        fat_rect_on(w, {0, 0, xw, 1}, without(ag, ag[win]));
        return;
    }
    std::vector<Rect> S{{0, 0, .5, .5}, {0, .5, .5, 1}};
    auto sv = w.eval(ag, S, "fat-rects: far-left squares");
    groups = search_rooms(n, {n - 1, n - 1}, fits(sv));
    if (!groups.empty()) {
        auto ga = to_agents(groups, ag);
        for (int j = 0; j < 2; ++j)
            if (!ga[j].empty()) fat_rect_on(w, S[j], ga[j]);
        return;
    }
    poor = worthless_room(sv, slack);
    if (poor < 0) throw Error("internal: fat-rectangle squares admit no split");
    View u = poor == 0 ? w.sub(flip_y(1), {0, 0, L, 1}) : w;
    std::vector<double> side(n);
    for (int k = 0; k < n; ++k) {
        double tot = u.val_quiet(ag[k], {0, 0, L, 1});
        side[k] = clamp_mark(u.mark_corner(ag[k], {0, 0}, 1, 1, tot - 2, .5, "fat-rects: corner square"), .5);
    }
    win = argmax_first(side);
    double s = side[win];
    u.give(ag[win], Piece::rect(best_fat_cover(u, ag[win], s, L)));
    fat_rect_on(u, {0, 0, s, s}, without(ag, ag[win]));
}

// ---------------- pairs of squares (canonical [0,1]^2) ----------------

std::vector<Rect> quarters() {
    return {{0, 0, .5, .5}, {.5, 0, 1, .5}, {0, .5, .5, 1}, {.5, .5, 1, 1}};
}

Frame quarter_corner(int j) {
    Frame f;
    if (j & 1) f = f.then(flip_x(1));
    if (j & 2) f = f.then(flip_y(1));
    return f;
}

// Side of the smallest pair of squares at corners (0,0) and (1,1) reaching v.
double mark_pair(const View& v, int i, double val, double cap, const std::string& label) {
    MonotoneFamily fam;
    fam.kind = FamilyKind::CornerSquarePair;
    fam.anchor = v.f.map(Point{0, 0});
    fam.anchor2 = v.f.map(Point{1, 1});
    v.f.dir(1, 1, fam.sx, fam.sy);
    fam.tmax = cap * v.f.s;
    fam.clip = v.clip;
    MarkResult m = mark(*v.cx->dens[i], fam, val * v.cx->unit[i]);
    v.cx->log.push_back({"mark", label, v.cx->ids[i],
                         {fam.anchor.x, fam.anchor.y, fam.anchor2.x, fam.anchor2.y, val},
                         {m.infinite ? kInf : m.t}});
    return m.infinite ? kInf : m.t / v.f.s;
}

void pair_rec(const View& v, const std::vector<int>& ag);

void pair_on(const View& v, const Rect& q, const std::vector<int>& ag) {
    pair_rec(v.sub(scaled(q.x0, q.y0, q.width()), q), ag);
}

void pair_two(const View& v, const std::vector<int>& ag) {
    const double slack = v.cx->slack;
    auto Q = quarters();
    auto qv = v.eval(ag, Q, "pairs: quarters");
    // diagonal pairs: {bottom-left, top-right} and {top-left, bottom-right}
    std::vector<std::vector<double>> dv(2, std::vector<double>(2));
    for (int k = 0; k < 2; ++k) {
        dv[k][0] = qv[k][0] + qv[k][3];
        dv[k][1] = qv[k][2] + qv[k][1];
    }
    std::vector<Piece> D{Piece::pair(Q[0], Q[3]), Piece::pair(Q[2], Q[1])};
    int r0, r1;
    if (assign_two(dv, slack, r0, r1)) {
        v.give(ag[0], D[r0]);
        v.give(ag[1], D[r1]);
        return;
    }
    int rich = dv[0][0] >= dv[0][1] ? 0 : 1;
    View w = rich == 1 ? v.sub(flip_x(1), {0, 0, 1, 1}) : v;
    std::vector<double> side(2);
    for (int k = 0; k < 2; ++k) side[k] = clamp_mark(mark_pair(w, ag[k], 1, .5, "pairs: corner pair"), .5);
    int win = argmin_first(side);
    double s = side[win];
    w.give(ag[win], Piece::pair({0, 0, s, s}, {1 - s, 1 - s, 1, 1}));
    w.give(ag[1 - win], Piece::pair({s, 0, 1, 1 - s}, {0, s, 1 - s, 1}));
}

// Rooms over the quarters: each room is one quarter or two merged quarters.
std::vector<std::vector<std::vector<int>>> pair_structures() {
    std::vector<std::vector<std::vector<int>>> out{{{0}, {1}, {2}, {3}}};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            std::vector<std::vector<int>> s{{a, b}};
            for (int c = 0; c < 4; ++c)
                if (c != a && c != b) s.push_back({c});
            out.push_back(s);
        }
    out.push_back({{0, 1}, {2, 3}});
    out.push_back({{0, 2}, {1, 3}});
    out.push_back({{0, 3}, {1, 2}});
    return out;
}

void pair_rec(const View& v, const std::vector<int>& ag) {
    const int n = static_cast<int>(ag.size());
    if (n == 1) {
        v.give(ag[0], Piece::pair({0, 0, 1, 1}, {0, 0, 1, 1}));
        return;
    }
    if (n == 2) {
        pair_two(v, ag);
        return;
    }
    const double slack = v.cx->slack;
    auto Q = quarters();
    auto qv = v.eval(ag, Q, "pairs: quarters");
    std::vector<std::vector<int>> P(n, std::vector<int>(4));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < 4; ++j)
            P[k][j] = largest_group(qv[k][j], n, slack, need_pair);
    Split sp;
    sp.hard = 0;
    try {
        sp = split_rooms(ag, P);
    } catch (const Error&) {
        sp.hard = 0;
    }
    if (sp.hard < 0) {
        for (int j = 0; j < 4; ++j)
            if (!sp.groups[j].empty()) pair_on(v, Q[j], sp.groups[j]);
        return;
    }
    for (const auto& rooms : pair_structures()) {
        std::vector<int> cap;
        for (const auto& r : rooms) cap.push_back(r.size() == 1 ? n - 1 : 1);
        auto ok = [&](int k, int j, int g) {
            const auto& r = rooms[j];
            if (r.size() == 1) return qv[k][r[0]] >= need_pair(g) - slack;
            return g == 1 && qv[k][r[0]] + qv[k][r[1]] >= 1 - slack;
        };
        auto groups = search_rooms(n, cap, ok);
        if (groups.empty()) continue;
        auto ga = to_agents(groups, ag);
        for (size_t j = 0; j < rooms.size(); ++j) {
            if (ga[j].empty()) continue;
            if (rooms[j].size() == 1) pair_on(v, Q[rooms[j][0]], ga[j]);
            else v.give(ga[j][0], Piece::pair(Q[rooms[j][0]], Q[rooms[j][1]]));
        }
        return;
    }
    std::vector<double> tot(n);
    for (int k = 0; k < n; ++k) tot[k] = row_sum(qv[k]);
    int rich = -1;
    for (int j = 0; j < 4 && rich < 0; ++j) {
        bool all = true;
        for (int k = 0; k < n; ++k) all = all && qv[k][j] > tot[k] - 3 - slack;
        if (all) rich = j;
    }
    if (rich < 0) throw Error("internal: no quarter holds the pair-procedure hard case");
    View w = v.sub(quarter_corner(rich), {0, 0, 1, 1});
    std::vector<double> side(n);
    for (int k = 0; k < n; ++k)
        side[k] = clamp_mark(w.mark_corner(ag[k], {0, 0}, 1, 1, tot[k] - 3, .5, "pairs: corner square"), .5);
    int win = argmax_first(side);
    double s = side[win];
    std::vector<Rect> sq{{0, s, 1 - s, 1}, {s, 0, 1, 1 - s}, {s, s, 1, 1}};
    Piece best;
    double bv = -1;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            Piece p = Piece::pair(sq[a], sq[b]);
            double val = 0;
            for (const auto& r : p.decompose()) val += w.val_quiet(ag[win], r);
            if (val > bv) {
                bv = val;
                best = p;
            }
        }
    w.cx->log.push_back({"eval", "pairs: remainder pairs", w.cx->ids[ag[win]], {}, {bv}});
    w.give(ag[win], best);
    auto rest = without(ag, ag[win]);
    pair_rec(w.sub(scaled(0, 0, s), {0, 0, s, s}), rest);
}

// ---------------- 45-degree polygons ----------------

using Poly = std::vector<Point>;

Point mid(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

Poly ccw(Poly p) {
    double s = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % p.size()];
        s += a.x * b.y - b.x * a.y;
    }
    if (s < 0) std::reverse(p.begin(), p.end());
    return p;
}

int sgn(double v, double scale) { return std::fabs(v) <= 1e-9 * scale ? 0 : (v > 0 ? 1 : -1); }

struct PolyCtx {
    Ctx* cx;
    double val(int i, const Poly& p) const { return cx->dens[i]->polygon_value(p) / cx->unit[i]; }
    std::vector<std::vector<double>> eval(const std::vector<int>& ag, const std::vector<Poly>& rooms,
                                          const std::string& label) const {
        std::vector<double> args;
        for (const auto& r : rooms) {
            for (const auto& q : r) args.insert(args.end(), {q.x, q.y});
            args.push_back(kInf);
        }
        std::vector<std::vector<double>> out;
        for (int i : ag) {
            std::vector<double> row;
            for (const auto& r : rooms) row.push_back(val(i, r));
            cx->log.push_back({"eval", label, cx->ids[i], args, row});
            out.push_back(row);
        }
        return out;
    }
    void give(int i, const Poly& p) const {
        if (cx->given[i]) throw Error("internal: agent allocated twice");
        cx->alloc[i] = Piece::ffdp(ccw(p));
        cx->given[i] = true;
    }
};

// Triangle with right angle at `r`.
struct Rait {
    Point r, a, b;
    Poly poly() const { return ccw({r, a, b}); }
};

Rait rait_of(const Poly& tri) {
    Poly p;
    for (const auto& q : tri) {
        bool dup = false;
        for (const auto& e : p) dup = dup || (std::fabs(e.x - q.x) + std::fabs(e.y - q.y) <= 1e-12 * (1 + std::fabs(q.x) + std::fabs(q.y)));
        if (!dup) p.push_back(q);
    }
    if (p.size() != 3) throw Error("internal: remainder is not a triangle");
    int best = 0;
    double bd = kInf;
    for (int k = 0; k < 3; ++k) {
        Point v = p[k], u = p[(k + 1) % 3], w = p[(k + 2) % 3];
        double d = std::fabs((u.x - v.x) * (w.x - v.x) + (u.y - v.y) * (w.y - v.y));
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    return {p[best], p[(best + 1) % 3], p[(best + 2) % 3]};
}

void poly_rec(const PolyCtx& pc, const Rait& t, const std::vector<int>& ag);

// Rooms for the two halves. An agent worth less than 1 in a half has no
// partner count there; a direct search over group sizes covers that case.
Split halves_split(const std::vector<int>& ag, const std::vector<std::vector<double>>& vals, double slack) {
    const int n = static_cast<int>(ag.size());
    std::vector<std::vector<int>> P(n, std::vector<int>(2));
    bool short_row = false;
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < 2; ++j) P[k][j] = largest_group(vals[k][j], n, slack, need_poly);
        short_row = short_row || P[k][0] + P[k][1] < n;
    }
    if (!short_row) return split_rooms(ag, P);
    Split sp;
    auto groups = search_rooms(n, {n - 1, n - 1}, [&](int k, int j, int g) {
        return vals[k][j] >= need_poly(g) - slack;
    });
    if (!groups.empty()) {
        sp.groups = to_agents(groups, ag);
        return sp;
    }
    int poor = worthless_room(vals, slack);
    if (poor < 0) throw Error("internal: no feasible split of the halves");
    sp.groups.assign(2, {});
    sp.hard = 1 - poor;
    return sp;
}

// Everyone wants room `rich`; lines parallel to the split line grow the piece
// from the other side and the smallest piece worth 1 wins.
void poly_hard(const PolyCtx& pc, const Poly& region, Point on_line, Point toward, Point away,
               const std::vector<int>& ag, const char* label) {
    double scale = std::fabs(toward.x - away.x) + std::fabs(toward.y - away.y);
    MonotoneFamily fam;
    fam.kind = FamilyKind::Diagonal45;
    fam.region = region;
    fam.sx = sgn(toward.x - away.x, scale);
    fam.sy = sgn(toward.y - away.y, scale);
    fam.offset = fam.sx * on_line.x + fam.sy * on_line.y;
    fam.tmax = fam.sx * toward.x + fam.sy * toward.y - fam.offset;
    const int n = static_cast<int>(ag.size());
    std::vector<double> ts(n);
    for (int k = 0; k < n; ++k) {
        MarkResult m = mark(*pc.cx->dens[ag[k]], fam, pc.cx->unit[ag[k]]);
        ts[k] = m.infinite ? kInf : m.t;
        pc.cx->log.push_back({"mark", label, pc.cx->ids[ag[k]],
                              {double(fam.sx), double(fam.sy), fam.offset, 1}, {ts[k]}});
    }
    int win = argmin_first(ts);
    double t = ts[win];
    if (!std::isfinite(t)) throw Error("internal: no agent reaches value 1");
    Poly piece = fam.piece(t).poly;
    double fat = polygon_fatness(piece);
    if (fat > 2 + 1e-6) {
        std::ostringstream os;
        os << "agent " << pc.cx->ids[ag[win]] << " received a polygon of fatness " << fat;
        pc.cx->notes.push_back(os.str());
    }
    pc.give(ag[win], piece);
    Poly rest = clip_halfplane(region, -fam.sx, -fam.sy, -(fam.offset + t));
    poly_rec(pc, rait_of(rest), without(ag, ag[win]));
}

void poly_rec(const PolyCtx& pc, const Rait& t, const std::vector<int>& ag) {
    const int n = static_cast<int>(ag.size());
    if (n == 1) {
        pc.give(ag[0], t.poly());
        return;
    }
    Point m = mid(t.a, t.b);
    std::vector<Rait> H{{m, t.r, t.a}, {m, t.r, t.b}};
    auto vals = pc.eval(ag, {H[0].poly(), H[1].poly()}, "polygons: halves");
    Split sp = halves_split(ag, vals, pc.cx->slack);
    if (sp.hard < 0) {
        for (int j = 0; j < 2; ++j)
            if (!sp.groups[j].empty()) poly_rec(pc, H[j], sp.groups[j]);
        return;
    }
    Point toward = sp.hard == 0 ? t.a : t.b, away = sp.hard == 0 ? t.b : t.a;
    poly_hard(pc, t.poly(), t.r, toward, away, ag, "polygons: parallel cut");
}

} // namespace

DivisionReport fatrect_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "fat-rects";
    if (cake.base != CakeDomain::Base::Rect || !cake.rect.bounded() || cake.rect.empty())
        throw Error("fat-rects: cake must be a bounded rectangle");
    if (fatness(cake.rect) > 2 + tolerances().geo) throw Error("fat-rects: cake must be a 2-fat rectangle");
    check_agents(agents, cake, 2);
    const int n = static_cast<int>(agents.size());
    const double target = 4.0 * n - 5;
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, cake.rect};
    fat_rect_on(root, cake.rect, all_agents(n));
    return finish(name, agents, cake, cx, {1, target}, 4, 5);
}

DivisionReport pairs_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "pairs";
    const Rect& r = cake.rect;
    if (cake.base != CakeDomain::Base::Rect || !r.bounded() || r.empty() ||
        !is_square(r, tolerances().geo * std::max(1.0, r.width())))
        throw Error("pairs: cake must be a square");
    check_agents(agents, cake, 2);
    const int n = static_cast<int>(agents.size());
    const double target = 3.0 * n - 4;
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, r};
    pair_rec(root.sub(scaled(r.x0, r.y0, r.width()), r), all_agents(n));
    return finish(name, agents, cake, cx, {1, target}, 3, 4);
}

DivisionReport ffdp_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "ffdp";
    check_agents(agents, cake, 2);
    const int n = static_cast<int>(agents.size());
    const double target = 2.0 * n - 2;
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    PolyCtx pc{&cx};
    if (cake.base == CakeDomain::Base::Polygon) {
        Rait t = rait_of(cake.polygon);
        double la = std::hypot(t.a.x - t.r.x, t.a.y - t.r.y), lb = std::hypot(t.b.x - t.r.x, t.b.y - t.r.y);
        if (std::fabs(la - lb) > 1e-9 * la || !polygon_is_45(cake.polygon, tolerances().geo))
            throw Error("ffdp: cake must be a right-angled isosceles triangle or a square");
        poly_rec(pc, t, all_agents(n));
    } else if (cake.base == CakeDomain::Base::Rect && cake.rect.bounded() && !cake.rect.empty() &&
               is_square(cake.rect, tolerances().geo * std::max(1.0, cake.rect.width()))) {
        const Rect& r = cake.rect;
        Point lo{r.x0, r.y0}, hi{r.x1, r.y1}, br{r.x1, r.y0}, tl{r.x0, r.y1};
        std::vector<Rait> T{{br, lo, hi}, {tl, lo, hi}};
        auto vals = pc.eval(all_agents(n), {T[0].poly(), T[1].poly()}, "polygons: diagonal halves");
        Split sp = halves_split(all_agents(n), vals, cx.slack);
        if (sp.hard < 0) {
            for (int j = 0; j < 2; ++j)
                if (!sp.groups[j].empty()) poly_rec(pc, T[j], sp.groups[j]);
        } else {
            Point toward = sp.hard == 0 ? br : tl, away = sp.hard == 0 ? tl : br;
            poly_hard(pc, ccw({lo, br, hi, tl}), lo, toward, away, all_agents(n), "polygons: parallel cut");
        }
    } else {
        throw Error("ffdp: cake must be a right-angled isosceles triangle or a square");
    }
    return finish(name, agents, cake, cx, {1, target}, 2, 2);
}

} // namespace fsq
