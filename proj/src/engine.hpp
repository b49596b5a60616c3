#pragma once

// Shared machinery for the division procedures: coordinate frames, the query
// context, and room assignment helpers.

#include <string>
#include <vector>

#include "fairsquare/geometry.hpp"
#include "fairsquare/measure.hpp"
#include "fairsquare/protocols.hpp"

namespace fsq::detail {

// global = o + s * M * local, M a signed permutation [[a, b], [c, d]].
struct Frame {
    double ox = 0, oy = 0, s = 1;
    int a = 1, b = 0, c = 0, d = 1;

    Point map(Point p) const;
    Point unmap(Point g) const;
    Rect map(const Rect& r) const;
    Rect unmap(const Rect& r) const;
    Frame then(const Frame& child) const;
    void dir(int sx, int sy, int& gx, int& gy) const;
};

struct Placement {
    Frame f;
    double w = 0, h = 0; // canonical extents
};

// Frame taking canonical [0,w] x [0,h] onto r with canonical x = 0 on side
// `x0` and y = 0 on side `y0`; the unit is r's extent along the canonical y
// axis (unit_y) or x axis.
Placement place(const Rect& r, Side x0, Side y0, bool unit_y);
Side opposite(Side s);

inline Frame scaled(double x, double y, double s) { return Frame{x, y, s, 1, 0, 0, 1}; }
inline Frame flip_x(double w) { return Frame{w, 0, 1, -1, 0, 0, 1}; }
inline Frame flip_y(double h) { return Frame{0, h, 1, 1, 0, 0, -1}; }

struct Ctx {
    std::vector<const GridDensity*> dens;
    std::vector<double> unit;
    std::vector<int> ids;
    std::vector<Piece> alloc;
    std::vector<bool> given;
    std::vector<QueryRecord> log;
    std::vector<CaseBRemoval> case_b;
    std::vector<std::string> notes;
    double slack = 1e-9;

    int n() const { return static_cast<int>(dens.size()); }
};

struct View {
    Ctx* cx = nullptr;
    Frame f;
    Rect clip{-kInf, -kInf, kInf, kInf};

    // Normalized value of a local rect (restricted to the clip).
    double val(int i, const Rect& r) const;
    double val_quiet(int i, const Rect& r) const;
    // values[k][j] for agents[k] and rooms[j]; logged as one eval query each.
    std::vector<std::vector<double>> eval(const std::vector<int>& agents,
                                          const std::vector<Rect>& rooms,
                                          const std::string& label) const;
    // Local side of the smallest corner square reaching value v; kInf if none
    // within `cap`.
    double mark_corner(int i, Point corner, int sx, int sy, double v, double cap,
                       const std::string& label) const;
    // Smallest t such that region ∩ {along `axis`: dir * (p - from) <= t}
    // reaches value v (local units); kInf if never.
    double mark_cut(int i, Axis axis, int dir, double from, const Rect& region, double v,
                    const std::string& label) const;
    void give(int i, const Piece& local) const;
    void give_square(int i, const Rect& local) const;

    View sub(const Frame& child, const Rect& local_clip) const;
    View sub(const Placement& p, const Rect& local_clip) const { return sub(p.f, local_clip); }
    Rect global(const Rect& r) const { return f.map(r); }
    Piece global(const Piece& p) const;
};

// Partner-number rooms: groups per room plus a hard-case marker. After the
// Room Partition Algorithm, if every agent lands in one room the lowest-index
// agent that can stand alone elsewhere is moved; `hard` is set only when no
// such agent exists.
struct Split {
    std::vector<std::vector<int>> groups;
    int hard = -1;
};
Split split_rooms(const std::vector<int>& agents, const std::vector<std::vector<int>>& P);

// Largest g <= cap with need(g) <= v (+slack); 0 if need(1) > v.
template <class Need>
int largest_group(double v, int cap, double slack, Need need) {
    int g = 0;
    while (g < cap && need(g + 1) <= v + slack) ++g;
    return g;
}

// First group-size vector (lexicographic over rooms) admitting an assignment
// where agent k may join room j of size g iff ok(k, j, g). Each group size is
// at most max_size[j]. Returns empty groups if none.
template <class Ok>
std::vector<std::vector<int>> search_rooms(int n, const std::vector<int>& max_size, Ok ok);

// Reference wall for normalization: total value / target count.
std::vector<double> units_for(const std::vector<Agent>& agents, const CakeDomain& cake,
                              double target);
double cake_value(const GridDensity& d, const CakeDomain& cake);
void check_agents(const std::vector<Agent>& agents, const CakeDomain& cake, int min_n);

Ctx make_ctx(const std::vector<Agent>& agents, const std::vector<double>& units);
DivisionReport finish(const std::string& name, const std::vector<Agent>& agents,
                      const CakeDomain& cake, Ctx& cx, Bound bound, double E, double F);
// Report for pieces computed outside a query context; fractions use `denom`.
DivisionReport report_for(const std::string& name, const std::vector<Agent>& agents,
                          const std::vector<Piece>& pieces, const std::vector<double>& denom,
                          Bound bound, double E, double F);
bool same_density(const GridDensity& a, const GridDensity& b);
std::vector<int> all_agents(int n);
std::vector<int> without(const std::vector<int>& ag, int who);
int argmax_first(const std::vector<double>& v);
int argmin_first(const std::vector<double>& v);
double row_sum(const std::vector<double>& r);
// A mark that found nothing within `cap` counts as the cap itself.
inline double clamp_mark(double t, double cap) { return t < cap ? t : cap; }

// Same-measure procedures on canonical frames (single agent 0 in the context).
struct SqOut {
    std::vector<Rect> sq; // global
    bool three = false;
};
SqOut fat_on(const View& v, const Rect& r, int n);
SqOut thin_on(const View& v, const Rect& r, Side open, int n);
SqOut same3_on(const View& v, const Rect& r, Side open, int n);

} // namespace fsq::detail

#include "engine_search.hpp"
