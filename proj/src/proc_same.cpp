// Same-measure procedures (fat, thin, 3-walls), the bounded-ratio division and
// greedy selection for compact cakes.

#include <algorithm>
#include <cmath>

#include "engine.hpp"

namespace fsq {

using namespace detail;

namespace {

double side_of(const Rect& r) { return std::max(r.width(), r.height()); }

void append(SqOut& a, const SqOut& b) { a.sq.insert(a.sq.end(), b.sq.begin(), b.sq.end()); }

size_t largest_index(const std::vector<Rect>& sq) {
    size_t k = 0;
    for (size_t i = 1; i < sq.size(); ++i)
        if (side_of(sq[i]) > side_of(sq[k])) k = i;
    return k;
}

void drop_largest(std::vector<Rect>& sq, size_t keep) {
    while (sq.size() > keep) sq.erase(sq.begin() + static_cast<long>(largest_index(sq)));
}

// Canonical [0,1] x [0,L]: largest y with value below y equal to u.
double level(const View& v, double u, double tot, double L, const char* label) {
    if (u <= 0) return 0;
    if (u >= tot) return L;
    double t = v.mark_cut(0, Axis::Y, -1, L, {0, 0, 1, L}, tot - u, label);
    return std::isfinite(t) ? std::clamp(L - t, 0.0, L) : 0.0;
}

SqOut fat_canon(const View& v, int n, double L);
SqOut thin_canon(const View& v, int n, double L);

// Bottom/top part of a thin procedure: fat if its height allows, thin otherwise.
SqOut strip(const View& v, const Rect& r, int agents_if_fat) {
    if (r.height() <= 2 * (1 + 1e-12)) return fat_on(v, r, agents_if_fat);
    return thin_on(v, r, Side::Right, agents_if_fat + 1);
}

SqOut fat_canon(const View& v, int n, double L) {
    SqOut out;
    if (n <= 0) return out;
    if (n == 1) {
        Rect a{0, 0, 1, 1}, b{0, L - 1, 1, L};
        out.sq.push_back(v.global(v.val(0, a) >= v.val(0, b) ? a : b));
        return out;
    }
    double tot = v.val_quiet(0, {0, 0, 1, L});
    int k = 1;
    double yk = L;
    for (; k <= n; ++k) {
        yk = k == n ? L : level(v, 2.0 * k, tot, L, "fat: level");
        if (yk >= .5) break;
    }
    if (L - yk >= .5) {
        append(out, fat_on(v, {0, 0, 1, yk}, k));
        append(out, fat_on(v, {0, yk, 1, L}, n - k));
        return out;
    }
    double ykm = k >= 2 ? level(v, 2.0 * (k - 1), tot, L, "fat: level") : 0.0;
    SqOut rt, rb;
    if (k < n) {
        rt = thin_on(v, {0, yk, 1, L}, Side::Bottom, n - k + 1);
        if (!rt.three) {
            append(out, rt);
            append(out, fat_on(v, {0, 0, 1, yk}, k));
            return out;
        }
    }
    if (k >= 2) {
        rb = thin_on(v, {0, 0, 1, ykm}, Side::Top, k);
        if (!rb.three) {
            append(out, rb);
            append(out, fat_on(v, {0, ykm, 1, L}, n - k + 1));
            return out;
        }
    }
    append(out, rt);
    append(out, rb);
    if (out.sq.size() > static_cast<size_t>(n)) {
        CaseBRemoval ev;
        ev.n = n;
        ev.width = v.f.s;
        ev.count_before = static_cast<int>(out.sq.size());
        const double eps = 1e-9 * L;
        for (const auto& g : rt.sq) {
            Rect c = v.f.unmap(g);
            if (c.y1 >= L - eps) ev.hawk_sum_high += side_of(g);
        }
        for (const auto& g : rb.sq) {
            Rect c = v.f.unmap(g);
            if (c.y0 <= eps) ev.hawk_sum_low += side_of(g);
        }
        size_t big = largest_index(out.sq);
        ev.removed = out.sq[big];
        out.sq.erase(out.sq.begin() + static_cast<long>(big));
        ev.kept = out.sq;
        v.cx->case_b.push_back(ev);
    }
    return out;
}

SqOut thin_canon(const View& v, int n, double L) {
    SqOut out;
    if (n <= 1) return out;
    double tot = v.val_quiet(0, {0, 0, 1, L});
    if (n == 2) {
        double t = v.mark_cut(0, Axis::Y, 1, 0, {0, 0, 1, L}, tot / 2, "thin: median");
        double y = std::isfinite(t) ? t : L;
        if (y >= 1 && y <= L - 1) {
            out.sq = {v.global(Rect{0, 0, y, y}), v.global(Rect{0, y, L - y, L})};
            out.three = true;
        } else {
            out.sq = {v.global(y < 1 ? Rect{0, 0, 1, 1} : Rect{0, L - 1, 1, L})};
        }
        return out;
    }
    int k = 1;
    double yk = L;
    for (; k <= n - 1; ++k) {
        yk = k == n - 1 ? L : level(v, 2.0 * k, tot, L, "thin: level");
        if (yk >= .5) break;
    }
    if (L - yk >= .5) {
        SqOut b = strip(v, {0, 0, 1, yk}, k);
        SqOut t = strip(v, {0, yk, 1, L}, n - k - 1);
        out.three = b.three || t.three;
        append(out, b);
        append(out, t);
        drop_largest(out.sq, static_cast<size_t>(out.three ? n : n - 1));
        return out;
    }
    double ykm = k >= 2 ? level(v, 2.0 * (k - 1), tot, L, "thin: level") : 0.0;
    SqOut rt, rb;
    if (k < n - 1) {
        rt = thin_on(v, {0, yk, 1, L}, Side::Bottom, n - k);
        if (!rt.three) {
            SqOut b = strip(v, {0, 0, 1, yk}, k);
            out.three = b.three;
            append(out, rt);
            append(out, b);
            return out;
        }
    }
    if (k >= 2) {
        rb = thin_on(v, {0, 0, 1, ykm}, Side::Top, k);
        if (!rb.three) {
            SqOut t = strip(v, {0, ykm, 1, L}, n - k);
            out.three = t.three;
            append(out, rb);
            append(out, t);
            return out;
        }
    }
    append(out, rt);
    append(out, rb);
    drop_largest(out.sq, static_cast<size_t>(n - 1));
    return out;
}

SqOut same3_canon(const View& v, int n, double L) {
    SqOut out;
    out.three = true;
    if (n <= 0) return out;
    if (n == 1) {
        out.sq.push_back(v.global(Rect{0, 0, 1, 1}));
        return out;
    }
    double t = v.mark_cut(0, Axis::X, -1, L, {0, 0, L, 1}, 1, "three-walls: right strip");
    double x = std::isfinite(t) ? std::clamp(L - t, 0.0, L) : 0.0;
    Rect sq{x, 0, x + 1, 1};
    if (x >= .5) {
        append(out, fat_on(v, {0, 0, x, 1}, n - 1));
        out.sq.push_back(v.global(sq));
        return out;
    }
    SqOut r = thin_on(v, {0, 0, x, 1}, Side::Right, n);
    append(out, r);
    if (!r.three) out.sq.push_back(v.global(sq));
    return out;
}

Ctx single_ctx(const GridDensity& d, double unit) {
    Ctx cx;
    cx.dens = {&d};
    cx.unit = {unit};
    cx.ids = {0};
    cx.alloc.resize(1);
    cx.given = {false};
    cx.slack = tolerances().value;
    return cx;
}

double resolve_unit(const GridDensity& d, const Rect& cake, double unit, double count) {
    double V = d.rect_value(cake);
    if (unit <= 0) unit = V / count;
    if (!(unit > 0) || V < count * unit * (1 - 1e-9)) throw Error("value below precondition");
    return unit;
}

SameResult to_result(Ctx& cx, SqOut&& o) {
    SameResult r;
    r.squares = std::move(o.sq);
    r.three_walls = o.three;
    r.unit = cx.unit[0];
    r.case_b = std::move(cx.case_b);
    r.queries = std::move(cx.log);
    return r;
}

void require_identical(const std::vector<Agent>& agents, const char* what) {
    for (const auto& a : agents)
        if (!same_density(a.density, agents[0].density))
            throw Error(std::string(what) + ": agents must share one value measure");
}

Rect fat_cake(const CakeDomain& cake, const char* what) {
    if (cake.base != CakeDomain::Base::Rect || !cake.rect.bounded() || cake.rect.empty())
        throw Error(std::string(what) + ": cake must be a bounded rectangle");
    if (fatness(cake.rect) > 2 + tolerances().geo)
        throw Error(std::string(what) + ": cake must be a 2-fat rectangle");
    return cake.rect;
}

} // namespace

namespace detail {

SqOut fat_on(const View& v, const Rect& r, int n) {
    if (n <= 0) return {};
    Placement p = r.height() >= r.width() ? place(r, Side::Left, Side::Bottom, false)
                                          : place(r, Side::Bottom, Side::Right, false);
    return fat_canon(v.sub(p, r), n, p.h);
}

SqOut thin_on(const View& v, const Rect& r, Side open, int n) {
    Side y0 = (open == Side::Left || open == Side::Right) ? Side::Bottom : Side::Left;
    Placement p = place(r, opposite(open), y0, false);
    return thin_canon(v.sub(p, r), n, p.h);
}

SqOut same3_on(const View& v, const Rect& r, Side open, int n) {
    Side y0 = (open == Side::Left || open == Side::Right) ? Side::Bottom : Side::Left;
    Placement p = place(r, opposite(open), y0, true);
    return same3_canon(v.sub(p, r), n, std::min(p.w, 1.0));
}

} // namespace detail

SameResult same_fat(const GridDensity& d, int n, const Rect& cake, double unit) {
    if (n < 1) throw Error("fat: n must be >= 1");
    if (!cake.bounded() || cake.empty() || fatness(cake) > 2 + tolerances().geo)
        throw Error("fat: cake must be a 2-fat rectangle");
    Ctx cx = single_ctx(d, resolve_unit(d, cake, unit, 2.0 * n));
    View root{&cx, {}, cake};
    return to_result(cx, fat_on(root, cake, n));
}

SameResult same_thin(const GridDensity& d, int n, const Rect& cake, Side open, double unit) {
    if (n < 2) throw Error("thin: n must be >= 2");
    if (!cake.bounded() || cake.empty()) throw Error("thin: cake must be a bounded rectangle");
    double along = (open == Side::Left || open == Side::Right) ? cake.height() : cake.width();
    double across = (open == Side::Left || open == Side::Right) ? cake.width() : cake.height();
    if (along < 2 * across * (1 - 1e-12)) throw Error("thin: cake must be 2-thin with the open side long");
    Ctx cx = single_ctx(d, resolve_unit(d, cake, unit, 2.0 * n - 2));
    View root{&cx, {}, cake};
    return to_result(cx, thin_on(root, cake, open, n));
}

SameResult same_three_walls(const GridDensity& d, int n, const Rect& cake, Side open, double unit) {
    if (n < 1) throw Error("three-walls: n must be >= 1");
    if (!cake.bounded() || cake.empty()) throw Error("three-walls: cake must be a bounded rectangle");
    double along = (open == Side::Left || open == Side::Right) ? cake.height() : cake.width();
    double across = (open == Side::Left || open == Side::Right) ? cake.width() : cake.height();
    if (across > along * (1 + tolerances().geo)) throw Error("three-walls: the open side must be a longest side");
    Ctx cx = single_ctx(d, resolve_unit(d, cake, unit, 2.0 * n - 1));
    View root{&cx, {}, cake};
    return to_result(cx, same3_on(root, cake, open, n));
}

namespace {

DivisionReport squares_report(const char* name, const std::vector<Agent>& agents,
                              const CakeDomain& cake, SameResult&& sr, Bound b, double E, double F) {
    std::vector<Piece> pieces;
    std::vector<double> denom;
    for (size_t i = 0; i < agents.size(); ++i) {
        pieces.push_back(Piece::square(sr.squares.at(i)));
        denom.push_back(cake_value(agents[i].density, cake));
    }
    DivisionReport rep = report_for(name, agents, pieces, denom, b, E, F);
    rep.queries = std::move(sr.queries);
    rep.case_b = std::move(sr.case_b);
    return rep;
}

} // namespace

DivisionReport same_fat_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "same-fat";
    Rect r = fat_cake(cake, name);
    check_agents(agents, cake, 1);
    require_identical(agents, name);
    const int n = static_cast<int>(agents.size());
    SameResult sr = same_fat(agents[0].density, n, r);
    return squares_report(name, agents, cake, std::move(sr), {1, 2.0 * n}, 2, 0);
}

DivisionReport same_three_walls_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "same-three-walls";
    if (cake.base != CakeDomain::Base::Rect) throw Error("same-three-walls: cake must be a rectangle");
    Side open;
    switch (cake.walls) {
    case kLeft | kBottom | kTop: open = Side::Right; break;
    case kRight | kBottom | kTop: open = Side::Left; break;
    case kLeft | kRight | kBottom: open = Side::Top; break;
    case kLeft | kRight | kTop: open = Side::Bottom; break;
    default: throw Error("same-three-walls: cake must have exactly three walls");
    }
    check_agents(agents, cake, 1);
    require_identical(agents, name);
    const int n = static_cast<int>(agents.size());
    SameResult sr = same_three_walls(agents[0].density, n, cake.rect, open);
    return squares_report(name, agents, cake, std::move(sr), {1, 2.0 * n - 1}, 2, 1);
}

DivisionReport ratio_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "ratio";
    Rect r = fat_cake(cake, name);
    check_agents(agents, cake, 1);
    const int n = static_cast<int>(agents.size());
    std::vector<GridDensity> norm;
    for (const auto& a : agents) norm.push_back(a.density.scaled(1.0 / cake_value(a.density, cake)));
    std::vector<const GridDensity*> ptr;
    for (const auto& d : norm) ptr.push_back(&d);
    GridDensity ratio = combine_densities(ptr, [](const std::vector<double>& v) {
        double hi = *std::max_element(v.begin(), v.end());
        double lo = *std::min_element(v.begin(), v.end());
        if (!(hi > 0)) return 0.0;
        return lo > 0 ? hi / lo : kInf;
    });
    double rr = 1;
    for (const auto& row : ratio.cell_densities())
        for (double q : row) rr = std::max(rr, q);
    if (!std::isfinite(rr)) throw Error("unbounded ratio");
    GridDensity combined = combine_densities(ptr, [](const std::vector<double>& v) {
        return *std::max_element(v.begin(), v.end()) + *std::min_element(v.begin(), v.end());
    });
    SameResult sr = same_fat(combined, n, r);
    DivisionReport rep = squares_report(name, agents, cake, std::move(sr), {1, 2.0 * n * rr}, 2, 0);
    rep.ratio_r = rr;
    rep.notes.push_back("r is the largest pointwise ratio between normalized densities");
    return rep;
}

DivisionReport greedy_compact_divide(const std::vector<Agent>& agents, const CakeDomain& cake,
                                     bool identical) {
    const char* name = identical ? "compact-same" : "greedy-compact";
    std::vector<Rect> region;
    if (cake.base == CakeDomain::Base::Grid) region = cake.cells;
    else if (cake.base == CakeDomain::Base::Rect && cake.rect.bounded() && cake.walls == kAllWalls)
        region = {cake.rect};
    else throw Error(std::string(name) + ": cake must be compact (grid region or walled rectangle)");
    check_agents(agents, cake, 1);
    const int n = static_cast<int>(agents.size());
    const double geo = tolerances().geo;

    if (identical) {
        require_identical(agents, name);
        UtilityResult q = best_square(agents[0].density, region, geo);
        if (!(q.value > 0)) throw Error("best-square search failed");
        SameResult sr = same_fat(agents[0].density, n, q.piece.rects[0]);
        std::vector<Piece> pieces;
        std::vector<double> denom;
        for (int i = 0; i < n; ++i) {
            pieces.push_back(Piece::square(sr.squares.at(i)));
            denom.push_back(q.value);
        }
        DivisionReport rep = report_for(name, agents, pieces, denom, {1, 2.0 * n}, 2, 0);
        rep.relative = true;
        rep.queries = std::move(sr.queries);
        rep.case_b = std::move(sr.case_b);
        return rep;
    }

    const int N = 4 * n - 3;
    std::vector<double> best(n);
    std::vector<std::vector<Rect>> cols(n);
    std::vector<QueryRecord> log;
    for (int i = 0; i < n; ++i) {
        UtilityResult q = best_square(agents[i].density, region, geo);
        if (!(q.value > 0)) throw Error("best-square search failed for agent " + std::to_string(agents[i].id));
        best[i] = q.value;
        const Rect& qs = q.piece.rects[0];
        log.push_back({"eval", "best square", agents[i].id, {qs.x0, qs.y0, qs.x1, qs.y1}, {q.value}});
        SameResult sr = same_fat(agents[i].density, N, qs, q.value / (2.0 * N));
        cols[i] = std::move(sr.squares);
    }
    std::vector<Piece> pieces(n);
    std::vector<bool> done(n, false);
    int max_removed = 0;
    for (int step = 0; step < n; ++step) {
        int bi = -1;
        size_t bk = 0;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            if (cols[i].empty()) throw Error("internal: square collection exhausted");
            for (size_t k = 0; k < cols[i].size(); ++k)
                if (bi < 0 || side_of(cols[i][k]) < side_of(cols[bi][bk])) {
                    bi = i;
                    bk = k;
                }
        }
        Rect chosen = cols[bi][bk];
        pieces[bi] = Piece::square(chosen);
        done[bi] = true;
        for (int j = 0; j < n; ++j) {
            if (done[j]) continue;
            std::vector<Rect> hit, keep;
            for (const auto& s : cols[j]) (interiors_overlap(chosen, s, geo) ? hit : keep).push_back(s);
            if (!hit.empty()) {
                OverlapCount oc = overlap_bound_check(chosen, hit, geo);
                if (!oc.ok) throw Error("internal: more than 4 squares overlap the selected square");
                max_removed = std::max(max_removed, oc.count);
            }
            cols[j] = std::move(keep);
        }
    }
    DivisionReport rep = report_for(name, agents, pieces, best, {1, 8.0 * n - 6}, 8, 6);
    rep.relative = true;
    rep.max_removals = max_removed;
    rep.queries = std::move(log);
    return rep;
}

} // namespace fsq
