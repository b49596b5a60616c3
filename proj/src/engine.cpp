#include "engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fairsquare/rpa.hpp"

namespace fsq::detail {

namespace {

double sel(int k, double v) { return k == 0 ? 0.0 : k * v; }

void unit_dir(Side s, int& dx, int& dy) {
    dx = dy = 0;
    switch (s) {
    case Side::Left: dx = 1; break;
    case Side::Right: dx = -1; break;
    case Side::Bottom: dy = 1; break;
    case Side::Top: dy = -1; break;
    }
}

bool horizontal_normal(Side s) { return s == Side::Left || s == Side::Right; }

double side_coord(const Rect& r, Side s) {
    switch (s) {
    case Side::Left: return r.x0;
    case Side::Right: return r.x1;
    case Side::Bottom: return r.y0;
    case Side::Top: return r.y1;
    }
    return 0;
}

} // namespace

Point Frame::map(Point p) const {
    return {ox + s * (sel(a, p.x) + sel(b, p.y)), oy + s * (sel(c, p.x) + sel(d, p.y))};
}

Point Frame::unmap(Point g) const {
    double dx = g.x - ox, dy = g.y - oy;
    return {(sel(a, dx) + sel(c, dy)) / s, (sel(b, dx) + sel(d, dy)) / s};
}

Rect Frame::map(const Rect& r) const {
    Point p = map(Point{r.x0, r.y0}), q = map(Point{r.x1, r.y1});
    return {std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x), std::max(p.y, q.y)};
}

Rect Frame::unmap(const Rect& r) const {
    Point p = unmap(Point{r.x0, r.y0}), q = unmap(Point{r.x1, r.y1});
    return {std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x), std::max(p.y, q.y)};
}

Frame Frame::then(const Frame& ch) const {
    Frame out;
    Point o = map(Point{ch.ox, ch.oy});
    out.ox = o.x;
    out.oy = o.y;
    out.s = s * ch.s;
    out.a = a * ch.a + b * ch.c;
    out.b = a * ch.b + b * ch.d;
    out.c = c * ch.a + d * ch.c;
    out.d = c * ch.b + d * ch.d;
    return out;
}

void Frame::dir(int sx, int sy, int& gx, int& gy) const {
    gx = a * sx + b * sy;
    gy = c * sx + d * sy;
}

Side opposite(Side s) {
    switch (s) {
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
    case Side::Bottom: return Side::Top;
    case Side::Top: return Side::Bottom;
    }
    return s;
}

Placement place(const Rect& r, Side x0, Side y0, bool unit_y) {
    if (horizontal_normal(x0) == horizontal_normal(y0)) throw Error("placement sides must be adjacent");
    Placement p;
    int ax, cx, bx, dx;
    unit_dir(x0, ax, cx);
    unit_dir(y0, bx, dx);
    p.f.a = ax;
    p.f.c = cx;
    p.f.b = bx;
    p.f.d = dx;
    double ex = horizontal_normal(x0) ? r.width() : r.height();
    double ey = horizontal_normal(y0) ? r.width() : r.height();
    p.f.ox = horizontal_normal(x0) ? side_coord(r, x0) : side_coord(r, y0);
    p.f.oy = horizontal_normal(x0) ? side_coord(r, y0) : side_coord(r, x0);
    p.f.s = unit_y ? ey : ex;
    if (!(p.f.s > 0)) throw Error("degenerate placement");
    p.w = ex / p.f.s;
    p.h = ey / p.f.s;
    return p;
}

// ---------------- View ----------------

double View::val_quiet(int i, const Rect& r) const {
    Rect g = intersect(f.map(r), clip);
    if (!(g.x1 > g.x0) || !(g.y1 > g.y0)) return 0;
    return cx->dens[i]->rect_value(g) / cx->unit[i];
}

double View::val(int i, const Rect& r) const {
    double v = val_quiet(i, r);
    Rect g = f.map(r);
    cx->log.push_back({"eval", "value", cx->ids[i], {g.x0, g.y0, g.x1, g.y1}, {v}});
    return v;
}

std::vector<std::vector<double>> View::eval(const std::vector<int>& agents,
                                            const std::vector<Rect>& rooms,
                                            const std::string& label) const {
    std::vector<double> args;
    for (const auto& r : rooms) {
        Rect g = f.map(r);
        args.insert(args.end(), {g.x0, g.y0, g.x1, g.y1});
    }
    std::vector<std::vector<double>> out;
    for (int i : agents) {
        std::vector<double> row;
        for (const auto& r : rooms) row.push_back(val_quiet(i, r));
        cx->log.push_back({"eval", label, cx->ids[i], args, row});
        out.push_back(std::move(row));
    }
    return out;
}

double View::mark_corner(int i, Point corner, int sx, int sy, double v, double cap,
                         const std::string& label) const {
    MonotoneFamily fam;
    fam.kind = FamilyKind::CornerSquare;
    fam.anchor = f.map(corner);
    f.dir(sx, sy, fam.sx, fam.sy);
    fam.tmax = cap * f.s;
    fam.clip = clip;
    MarkResult m = mark(*cx->dens[i], fam, std::max(0.0, v) * cx->unit[i]);
    double t = m.infinite ? kInf : m.t / f.s;
    cx->log.push_back({"mark", label, cx->ids[i],
                       {fam.anchor.x, fam.anchor.y, double(fam.sx), double(fam.sy), v},
                       {m.infinite ? kInf : m.t}});
    return t;
}

double View::mark_cut(int i, Axis axis, int dir, double from, const Rect& region, double v,
                      const std::string& label) const {
    MonotoneFamily fam;
    int gx, gy;
    Point anchor = axis == Axis::X ? f.map(Point{from, 0}) : f.map(Point{0, from});
    if (axis == Axis::X) f.dir(dir, 0, gx, gy);
    else f.dir(0, dir, gx, gy);
    if (gx != 0) {
        fam.kind = FamilyKind::VerticalCut;
        fam.sx = gx;
    } else {
        fam.kind = FamilyKind::HorizontalCut;
        fam.sy = gy;
    }
    fam.anchor = anchor;
    fam.clip = intersect(f.map(region), clip);
    double t = kInf;
    bool infinite = true;
    if (fam.clip.x1 > fam.clip.x0 && fam.clip.y1 > fam.clip.y0) {
        MarkResult m = mark(*cx->dens[i], fam, std::max(0.0, v) * cx->unit[i]);
        infinite = m.infinite;
        t = m.t;
    }
    cx->log.push_back({"mark", label, cx->ids[i],
                       {anchor.x, anchor.y, double(gx), double(gy), v},
                       {infinite ? kInf : t}});
    return infinite ? kInf : t / f.s;
}

Piece View::global(const Piece& p) const {
    Piece g = p;
    for (auto& r : g.rects) r = f.map(r);
    if (p.kind == PieceKind::Ffdp) {
        for (auto& q : g.poly) q = f.map(q);
        if (f.a * f.d - f.b * f.c < 0) std::reverse(g.poly.begin(), g.poly.end());
    }
    if (p.kind == PieceKind::Staircase) throw Error("staircase pieces cannot be reframed");
    return g;
}

void View::give(int i, const Piece& local) const {
    if (cx->given[i]) throw Error("internal: agent allocated twice");
    cx->alloc[i] = global(local);
    cx->given[i] = true;
}

void View::give_square(int i, const Rect& local) const { give(i, Piece::square(local)); }

View View::sub(const Frame& child, const Rect& local_clip) const {
    View v;
    v.cx = cx;
    v.f = f.then(child);
    v.clip = intersect(clip, f.map(local_clip));
    return v;
}

// ---------------- rooms ----------------

Split split_rooms(const std::vector<int>& agents, const std::vector<std::vector<int>>& P) {
    const int n = static_cast<int>(agents.size());
    const int m = P.empty() ? 0 : static_cast<int>(P[0].size());
    RoomAssignment ra = room_partition(P);
    Split sp;
    sp.groups.assign(m, {});
    int full = -1;
    for (int j = 0; j < m; ++j)
        if (n >= 2 && static_cast<int>(ra.groups[j].size()) == n) full = j;
    if (full >= 0) {
        for (int k = 0; k < n; ++k) {
            for (int r = 0; r < m; ++r) {
                if (r == full || P[k][r] < 1) continue;
                auto& g = ra.groups[full];
                g.erase(std::find(g.begin(), g.end(), k));
                ra.groups[r].push_back(k);
                full = -2;
                break;
            }
            if (full == -2) break;
        }
        if (full >= 0) sp.hard = full;
    }
    for (int j = 0; j < m; ++j) {
        std::sort(ra.groups[j].begin(), ra.groups[j].end());
        for (int k : ra.groups[j]) sp.groups[j].push_back(agents[k]);
    }
    return sp;
}

// ---------------- setup & report ----------------

double cake_value(const GridDensity& d, const CakeDomain& cake) {
    switch (cake.base) {
    case CakeDomain::Base::Rect: return d.rect_value(cake.rect);
    case CakeDomain::Base::Staircase: return d.piece_value(Piece::staircase(cake.stairs));
    case CakeDomain::Base::Grid: {
        double v = 0;
        for (const auto& c : cake.cells) v += d.rect_value(c);
        return v;
    }
    case CakeDomain::Base::Polygon: return d.polygon_value(cake.polygon);
    }
    return 0;
}

void check_agents(const std::vector<Agent>& agents, const CakeDomain& cake, int min_n) {
    if (static_cast<int>(agents.size()) < min_n) {
        std::ostringstream os;
        os << "procedure needs at least " << min_n << " agents";
        throw Error(os.str());
    }
    for (const auto& a : agents) {
        double in = cake_value(a.density, cake);
        double tot = a.density.total();
        if (!(in > 0)) throw Error("agent " + std::to_string(a.id) + " has zero value on the cake");
        if (tot - in > 1e-9 * tot)
            throw Error("agent " + std::to_string(a.id) + " has value outside the cake");
    }
}

std::vector<double> units_for(const std::vector<Agent>& agents, const CakeDomain& cake,
                              double target) {
    std::vector<double> u;
    for (const auto& a : agents) u.push_back(cake_value(a.density, cake) / target);
    return u;
}

Ctx make_ctx(const std::vector<Agent>& agents, const std::vector<double>& units) {
    Ctx cx;
    for (size_t i = 0; i < agents.size(); ++i) {
        cx.dens.push_back(&agents[i].density);
        cx.unit.push_back(units[i]);
        cx.ids.push_back(agents[i].id);
    }
    cx.alloc.resize(agents.size());
    cx.given.assign(agents.size(), false);
    cx.slack = tolerances().value;
    return cx;
}

std::vector<int> without(const std::vector<int>& ag, int who) {
    std::vector<int> out;
    for (int a : ag)
        if (a != who) out.push_back(a);
    return out;
}

int argmax_first(const std::vector<double>& v) {
    return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

int argmin_first(const std::vector<double>& v) {
    return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin());
}

double row_sum(const std::vector<double>& r) {
    double s = 0;
    for (double v : r) s += v;
    return s;
}

std::vector<int> all_agents(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

DivisionReport finish(const std::string& name, const std::vector<Agent>& agents,
                      const CakeDomain& cake, Ctx& cx, Bound bound, double E, double F) {
    DivisionReport rep;
    rep.procedure = name;
    rep.n = static_cast<int>(agents.size());
    rep.bound = bound;
    rep.E = E;
    rep.F = F;
    for (size_t i = 0; i < agents.size(); ++i) {
        if (!cx.given[i]) throw Error("internal: agent " + std::to_string(agents[i].id) + " got no piece");
        Assignment a;
        a.agent = agents[i].id;
        a.piece = cx.alloc[i];
        a.value = agents[i].density.piece_value(a.piece);
        a.fraction = a.value / cake_value(agents[i].density, cake);
        rep.allocation.push_back(std::move(a));
    }
    rep.queries = std::move(cx.log);
    rep.case_b = std::move(cx.case_b);
    rep.notes = std::move(cx.notes);
    return rep;
}

} // namespace fsq::detail

namespace fsq {

double DivisionReport::min_fraction() const {
    double m = kInf;
    for (const auto& a : allocation) m = std::min(m, a.fraction);
    return m;
}

bool DivisionReport::guarantee_met(double tol) const {
    for (const auto& a : allocation)
        if (a.fraction < bound.value() - tol) return false;
    return true;
}

} // namespace fsq

namespace fsq::detail {

DivisionReport report_for(const std::string& name, const std::vector<Agent>& agents,
                          const std::vector<Piece>& pieces, const std::vector<double>& denom,
                          Bound bound, double E, double F) {
    DivisionReport rep;
    rep.procedure = name;
    rep.n = static_cast<int>(agents.size());
    rep.bound = bound;
    rep.E = E;
    rep.F = F;
    for (size_t i = 0; i < agents.size(); ++i) {
        Assignment a;
        a.agent = agents[i].id;
        a.piece = pieces.at(i);
        a.value = agents[i].density.piece_value(a.piece);
        a.fraction = a.value / denom.at(i);
        rep.allocation.push_back(std::move(a));
    }
    return rep;
}

bool same_density(const GridDensity& a, const GridDensity& b) {
    if (a.xs() != b.xs() || a.ys() != b.ys()) return false;
    for (int iy = 0; iy < a.ny(); ++iy)
        for (int ix = 0; ix < a.nx(); ++ix)
            if (a.mass(ix, iy) != b.mass(ix, iy)) return false;
    return true;
}

} // namespace fsq::detail
