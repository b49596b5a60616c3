// Procedure dispatch and allocation verification.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "engine.hpp"

namespace fsq {

using namespace detail;

namespace {

using Runner = std::function<DivisionReport(const std::vector<Agent>&, const CakeDomain&)>;

const std::vector<std::pair<std::string, Runner>>& table() {
    static const std::vector<std::pair<std::string, Runner>> t{
        {"square-two", divide_square_two},
        {"four-quarters", four_quarters},
        {"four-walls", divide_four_walls},
        {"three-walls", divide_three_walls},
        {"same-fat", same_fat_divide},
        {"same-three-walls", same_three_walls_divide},
        {"ratio", ratio_divide},
        {"staircase", staircase_divide},
        {"half-plane", half_plane_divide},
        {"plane", plane_divide},
        {"greedy-compact", [](const auto& a, const auto& c) { return greedy_compact_divide(a, c, false); }},
        {"compact-same", [](const auto& a, const auto& c) { return greedy_compact_divide(a, c, true); }},
        {"fat-rects", fatrect_divide},
        {"pairs", pairs_divide},
        {"ffdp", ffdp_divide},
    };
    return t;
}

std::string piece_label(size_t k, const Assignment& a) {
    std::ostringstream os;
    os << "piece " << k << " (agent " << a.agent << ")";
    return os.str();
}

bool shape_ok(const Piece& p, Family fam, double tol) {
    switch (fam) {
    case Family::Squares:
        if (p.kind == PieceKind::QuarterPlane) return true;
        return p.kind == PieceKind::Square && is_square(p.rects.at(0), tol * std::max(1.0, p.rects[0].width()));
    case Family::FatRects:
        if (p.kind != PieceKind::Rect && p.kind != PieceKind::Square) return false;
        return p.rects.at(0).bounded() && fatness(p.rects[0]) <= 2 + tol;
    case Family::SquarePairs: {
        if (p.kind != PieceKind::SquarePair) return false;
        const Rect& a = p.rects.at(0);
        const Rect& b = p.rects.at(1);
        double s = std::max(1.0, a.width());
        return is_square(a, tol * s) && is_square(b, tol * s) && std::fabs(a.width() - b.width()) <= tol * s;
    }
    case Family::Ffdp:
        return p.kind == PieceKind::Ffdp && polygon_is_45(p.poly, tol) && polygon_is_fat(p.poly, 2, 1e-6);
    }
    return false;
}

// How far a piece may reach past an open side of a bounded cake.
bool overflow_ok(const Piece& p, const CakeDomain& cake, double tol) {
    if (cake.base != CakeDomain::Base::Rect || !cake.rect.bounded() || cake.wall_count() != 3) return true;
    const Rect& r = cake.rect;
    Rect b = p.bbox();
    double slack = tol * std::max({1.0, r.width(), r.height()});
    if (!(cake.walls & kRight)) return b.x1 <= r.x1 + r.height() + slack;
    if (!(cake.walls & kLeft)) return b.x0 >= r.x0 - r.height() - slack;
    if (!(cake.walls & kTop)) return b.y1 <= r.y1 + r.width() + slack;
    return b.y0 >= r.y0 - r.width() - slack;
}

double relative_denominator(const GridDensity& d, const CakeDomain& cake) {
    std::vector<Rect> region = cake.base == CakeDomain::Base::Grid ? cake.cells : std::vector<Rect>{cake.rect};
    return best_square(d, region, tolerances().geo).value;
}

struct RowUse {
    const char* procedure;
    std::vector<std::string> rows;
};

const std::vector<RowUse>& row_table() {
    static const std::vector<RowUse> t{
        {"square-two", {"4 walls"}},
        {"four-quarters", {"4 walls"}},
        {"four-walls", {"4 walls"}},
        {"three-walls", {"3 walls"}},
        {"same-fat", {"4 walls"}},
        {"same-three-walls", {"3 walls"}},
        {"ratio", {"4 walls"}},
        {"staircase", {"2 walls", "staircase"}},
        {"half-plane", {"1 wall"}},
        {"plane", {"0 walls"}},
        {"greedy-compact", {"compact region"}},
        {"compact-same", {"compact region"}},
        {"fat-rects", {"4 walls"}},
        {"pairs", {"4 walls"}},
        {"ffdp", {"4 walls", "triangle"}},
    };
    return t;
}

} // namespace

std::string cake_row(const CakeDomain& cake) {
    switch (cake.base) {
    case CakeDomain::Base::Staircase: return "staircase";
    case CakeDomain::Base::Grid: return "compact region";
    case CakeDomain::Base::Polygon: return "triangle";
    case CakeDomain::Base::Rect: break;
    }
    int w = cake.wall_count();
    return std::to_string(w) + (w == 1 ? " wall" : " walls");
}

void check_compatible(const std::string& procedure, const CakeDomain& cake, Family family) {
    const std::string row = cake_row(cake);
    const RowUse* use = nullptr;
    for (const auto& u : row_table())
        if (procedure == u.procedure) use = &u;
    if (!use) throw Error("unknown procedure: " + procedure);
    std::vector<std::string> fits;
    for (const auto& u : row_table())
        if (std::find(u.rows.begin(), u.rows.end(), row) != u.rows.end() && procedure_family(u.procedure) == family)
            fits.push_back(u.procedure);
    auto listing = [&] {
        std::string s;
        for (const auto& f : fits) s += (s.empty() ? "" : ", ") + f;
        return s.empty() ? std::string("none") : s;
    };
    if (std::find(use->rows.begin(), use->rows.end(), row) == use->rows.end())
        throw Error("procedure " + procedure + " does not serve the cake row \"" + row +
                    "\"; procedures for that row: " + listing());
    if (procedure_family(procedure) != family)
        throw Error("procedure " + procedure + " does not allocate " + family_name(family) + " (cake row \"" +
                    row + "\"); procedures for that row: " + listing());
}

std::string procedure_for(const CakeDomain& cake, Family family) {
    switch (family) {
    case Family::Squares: return auto_procedure(cake);
    case Family::FatRects: return "fat-rects";
    case Family::SquarePairs: return "pairs";
    case Family::Ffdp: return "ffdp";
    }
    return auto_procedure(cake);
}

const char* family_name(Family f) {
    switch (f) {
    case Family::Squares: return "squares";
    case Family::FatRects: return "fat-rects";
    case Family::SquarePairs: return "pairs";
    case Family::Ffdp: return "ffdp";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::Squares, Family::FatRects, Family::SquarePairs, Family::Ffdp})
        if (s == family_name(f)) return f;
    throw Error("unknown piece family: " + s);
}

std::vector<std::string> procedure_names() {
    std::vector<std::string> out;
    for (const auto& e : table()) out.push_back(e.first);
    return out;
}

DivisionReport run_procedure(const std::string& name, const std::vector<Agent>& agents,
                             const CakeDomain& cake) {
    std::string n = name == "auto" ? auto_procedure(cake) : name;
    for (const auto& e : table())
        if (e.first == n) return e.second(agents, cake);
    throw Error("unknown procedure: " + name);
}

std::string auto_procedure(const CakeDomain& cake) {
    switch (cake.base) {
    case CakeDomain::Base::Staircase: return "staircase";
    case CakeDomain::Base::Grid: return "greedy-compact";
    case CakeDomain::Base::Polygon: return "ffdp";
    case CakeDomain::Base::Rect: break;
    }
    switch (cake.wall_count()) {
    case 4: return "four-walls";
    case 3: return "three-walls";
    case 2: return "staircase";
    case 1: return "half-plane";
    default: return "plane";
    }
}

Family procedure_family(const std::string& name) {
    if (name == "fat-rects") return Family::FatRects;
    if (name == "pairs") return Family::SquarePairs;
    if (name == "ffdp") return Family::Ffdp;
    return Family::Squares;
}

Verification verify_report(const DivisionReport& report, const CakeDomain& cake, Family family,
                           const std::vector<Agent>* agents) {
    Verification v;
    const double geo = tolerances().geo;
    std::vector<Piece> pieces;
    for (const auto& a : report.allocation) pieces.push_back(a.piece);
    if (!interior_disjoint(pieces, geo)) {
        v.disjoint = false;
        v.problems.push_back("pieces overlap");
    }
    for (size_t k = 0; k < report.allocation.size(); ++k) {
        const auto& a = report.allocation[k];
        if (!shape_ok(a.piece, family, 1e-9)) {
            v.shapes = false;
            v.problems.push_back(piece_label(k, a) + " has the wrong shape");
        }
        bool inside = cake.piece_inside(a.piece, geo);
        if (!inside || !overflow_ok(a.piece, cake, geo)) {
            v.walls = false;
            v.problems.push_back(piece_label(k, a) + " crosses a wall");
        }
    }
    if (agents) {
        if (agents->size() != report.allocation.size()) {
            v.guarantee = false;
            v.problems.push_back("allocation size does not match the agent count");
            return v;
        }
        for (size_t k = 0; k < agents->size(); ++k) {
            const Agent& ag = (*agents)[k];
            const auto& a = report.allocation[k];
            if (a.agent != ag.id) {
                v.guarantee = false;
                v.problems.push_back("allocation order does not match the agents");
                continue;
            }
            double denom = report.relative ? relative_denominator(ag.density, cake) : cake_value(ag.density, cake);
            double frac = ag.density.piece_value(a.piece) / denom;
            if (frac < report.bound.value() - tolerances().guarantee) {
                v.guarantee = false;
                std::ostringstream os;
                os << "agent " << ag.id << " gets " << frac << " < bound " << report.bound.value();
                v.problems.push_back(os.str());
            }
        }
    } else if (!report.guarantee_met(tolerances().guarantee)) {
        v.guarantee = false;
        v.problems.push_back("reported fractions fall below the bound");
    }
    return v;
}

} // namespace fsq
