// Square pieces for unbounded cakes: staircases (quarter-plane included),
// half-planes and the full plane.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "engine.hpp"

namespace fsq {

using namespace detail;

namespace {

Frame rotated(double ox, double oy, int a, int b, int c, int d) { return Frame{ox, oy, 1, a, b, c, d}; }

double stair_value(const View& v, int i, const Staircase& st) {
    double s = 0;
    for (const auto& r : Piece::staircase(st).decompose()) s += v.val_quiet(i, r);
    return s;
}

// Local staircase, squares grown toward +x/+y; every agent values it at least
// 2n - 2 + k in view units.
void staircase_rec(const View& v, Staircase st, std::vector<int> ag) {
    const double tol = tolerances().guarantee;
    while (!ag.empty()) {
        const auto& cs = st.corners;
        if (ag.size() == 1) {
            int i = ag[0];
            size_t bj = 0;
            double bv = -1;
            for (size_t j = 0; j < cs.size(); ++j) {
                double q = v.val(i, {cs[j].x, cs[j].y, kInf, kInf});
                if (q > bv) {
                    bv = q;
                    bj = j;
                }
            }
            v.give(i, Piece::quarter_plane({cs[bj].x, cs[bj].y, kInf, kInf}));
            return;
        }
        int win = -1;
        size_t wj = 0;
        double wkey = kInf, wl = kInf;
        for (size_t k = 0; k < ag.size(); ++k)
            for (size_t j = 0; j < cs.size(); ++j) {
                double l = v.mark_corner(ag[k], cs[j], 1, 1, 1, kInf, "staircase: corner square");
                double key = cs[j].x + cs[j].y + l;
                if (key < wkey) {
                    wkey = key;
                    wl = l;
                    win = static_cast<int>(k);
                    wj = j;
                }
            }
        if (win < 0) throw Error("internal: no agent reaches value 1 at any corner");
        Rect sq{cs[wj].x, cs[wj].y, cs[wj].x + wl, cs[wj].y + wl};
        v.give_square(ag[win], sq);
        st = remove_shadow(st, sq, tolerances().geo * wl);
        ag.erase(ag.begin() + win);
        const double need = 2.0 * static_cast<double>(ag.size()) - 2 + static_cast<double>(st.corners.size());
        for (int i : ag)
            if (stair_value(v, i, st) < need - tol * std::max(1.0, need))
                throw Error("internal: staircase value invariant violated");
    }
}

// Local half-plane y >= 0.
void half_plane_rec(const View& v, const std::vector<int>& ag) {
    double anchor = kInf;
    for (int i : ag) {
        Rect s = intersect(v.cx->dens[i]->support(), v.clip);
        if (s.x1 > s.x0 && s.y1 > s.y0) anchor = std::min(anchor, v.f.unmap(s).x0);
    }
    if (!std::isfinite(anchor)) anchor = 0;
    if (ag.size() == 1) {
        v.give(ag[0], Piece::quarter_plane({anchor, 0, kInf, kInf}));
        return;
    }
    std::vector<double> xs;
    for (int i : ag) {
        double t = v.mark_cut(i, Axis::X, 1, anchor, {-kInf, 0, kInf, kInf}, 1, "half-plane: left strip");
        xs.push_back(anchor + t);
    }
    size_t win = static_cast<size_t>(std::min_element(xs.begin(), xs.end()) - xs.begin());
    double x = xs[win];
    if (!std::isfinite(x)) throw Error("internal: no agent reaches value 1 in the half-plane");
    v.give(ag[win], Piece::quarter_plane({-kInf, 0, x, kInf}));
    std::vector<int> rest;
    for (size_t k = 0; k < ag.size(); ++k)
        if (k != win) rest.push_back(ag[k]);
    staircase_rec(v, Staircase{{{x, 0}}}, rest);
}

const char* kHalf = "half-plane";

// Frame mapping the local half-plane y >= 0 onto the open side of one wall.
Frame wall_frame(const CakeDomain& cake) {
    const Rect& r = cake.rect;
    switch (cake.walls) {
    case kBottom: return rotated(0, r.y0, 1, 0, 0, 1);
    case kTop: return rotated(0, r.y1, -1, 0, 0, -1);
    case kLeft: return rotated(r.x0, 0, 0, 1, -1, 0);
    case kRight: return rotated(r.x1, 0, 0, -1, 1, 0);
    default: throw Error("half-plane: cake must have exactly one wall");
    }
}

// Frame mapping the local quarter-plane x, y >= 0 onto the corner of two walls.
Frame corner_frame(const CakeDomain& cake) {
    const Rect& r = cake.rect;
    switch (cake.walls) {
    case kLeft | kBottom: return rotated(r.x0, r.y0, 1, 0, 0, 1);
    case kRight | kBottom: return rotated(r.x1, r.y0, -1, 0, 0, 1);
    case kLeft | kTop: return rotated(r.x0, r.y1, 1, 0, 0, -1);
    case kRight | kTop: return rotated(r.x1, r.y1, -1, 0, 0, -1);
    default: throw Error("staircase: two walls must meet at a corner");
    }
}

} // namespace

DivisionReport staircase_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "staircase";
    Frame f;
    Staircase st;
    if (cake.base == CakeDomain::Base::Staircase) {
        cake.stairs.validate(tolerances().geo);
        st = cake.stairs;
    } else if (cake.base == CakeDomain::Base::Rect) {
        f = corner_frame(cake);
        st.corners = {{0, 0}};
    } else {
        throw Error("staircase: cake must be a staircase or a quarter-plane");
    }
    check_agents(agents, cake, 1);
    const int n = static_cast<int>(agents.size());
    const int k = static_cast<int>(st.corners.size());
    const double target = 2.0 * n - 2 + k;
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, cake.base == CakeDomain::Base::Rect ? cake.allowed_rect() : cake.bbox()};
    staircase_rec(root.sub(f, {-kInf, -kInf, kInf, kInf}), st, all_agents(n));
    return finish(name, agents, cake, cx, {1, target}, 2, 2.0 - k);
}

DivisionReport half_plane_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    if (cake.base != CakeDomain::Base::Rect) throw Error("half-plane: cake must be a half-plane");
    Frame f = wall_frame(cake);
    check_agents(agents, cake, 2);
    const int n = static_cast<int>(agents.size());
    const double target = 2.0 * n - 2;
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, cake.allowed_rect()};
    half_plane_rec(root.sub(f, {-kInf, -kInf, kInf, kInf}), all_agents(n));
    return finish(kHalf, agents, cake, cx, {1, target}, 2, 2);
}

DivisionReport plane_divide(const std::vector<Agent>& agents, const CakeDomain& cake) {
    const char* name = "plane";
    if (cake.base != CakeDomain::Base::Rect || cake.walls != 0) throw Error("plane: cake must be the plane");
    check_agents(agents, cake, 2);
    const int n = static_cast<int>(agents.size());
    const double target = std::max(2.0 * n - 4, 1.0 * n);
    Ctx cx = make_ctx(agents, units_for(agents, cake, target));
    View root{&cx, {}, {-kInf, -kInf, kInf, kInf}};

    // The g agents with the leftmost marks share the left half-plane; each values
    // it at least g, while the others keep at least target - g on the right.
    const int g = n <= 3 ? 1 : 2;
    double anchor = kInf;
    for (const auto& a : agents) anchor = std::min(anchor, a.density.support().x0);
    std::vector<double> xs;
    for (int i = 0; i < n; ++i)
        xs.push_back(anchor + root.mark_cut(i, Axis::X, 1, anchor, {-kInf, -kInf, kInf, kInf}, g,
                                            "plane: left half"));
    std::vector<int> order = all_agents(n);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return xs[a] < xs[b]; });
    const double c = xs[order[g - 1]];
    if (!std::isfinite(c)) throw Error("internal: plane cut not found");
    std::vector<int> left(order.begin(), order.begin() + g), right(order.begin() + g, order.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    half_plane_rec(root.sub(rotated(c, 0, 0, -1, 1, 0), {-kInf, -kInf, c, kInf}), left);
    half_plane_rec(root.sub(rotated(c, 0, 0, 1, -1, 0), {c, -kInf, kInf, kInf}), right);
    DivisionReport rep = finish(name, agents, cake, cx, {1, target}, n >= 4 ? 2 : 1, n >= 4 ? 4 : 0);
    rep.notes.push_back("cut at the " + std::string(g == 1 ? "first" : "second") +
                        " smallest vertical mark");
    return rep;
}

} // namespace fsq
