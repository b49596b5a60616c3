#pragma once

#include <string>
#include <vector>

#include "fairsquare/geometry.hpp"
#include "fairsquare/measure.hpp"

namespace fsq {

struct Agent {
    int id = 0;
    GridDensity density;
};

enum class Side { Left, Right, Bottom, Top };

struct Assignment {
    int agent = 0;
    Piece piece;
    double value = 0;    // V_i(piece)
    double fraction = 0; // value / V_i(C), or / V_i^S(C) for relative reports
};

// One agent's answer to one query. Coordinates in `args` are global.
struct QueryRecord {
    std::string kind; // "eval" or "mark"
    std::string label;
    int agent = 0;
    std::vector<double> args;
    std::vector<double> response;
};

struct Bound {
    double num = 1, den = 1;
    double value() const { return num / den; }
};

// Emitted whenever the fat procedure ends Case B with one square too many.
struct CaseBRemoval {
    int n = 0;
    double width = 0;
    double hawk_sum_low = 0;  // hawks standing on the low wall of the split axis
    double hawk_sum_high = 0; // hawks hanging from the high wall
    int count_before = 0;
    Rect removed;
    std::vector<Rect> kept;
};

struct DivisionReport {
    std::string procedure;
    int n = 0;
    Bound bound;
    double E = 0, F = 0;
    bool relative = false;
    std::vector<Assignment> allocation;
    std::vector<QueryRecord> queries;
    std::vector<std::string> notes;
    double ratio_r = 1;    // ratio procedure only
    int max_removals = 0;  // greedy selection only
    std::vector<CaseBRemoval> case_b;

    double min_fraction() const;
    bool guarantee_met(double tol) const;
};

struct SameResult {
    std::vector<Rect> squares;
    bool three_walls = false; // thin: true for the n-square outcome
    double unit = 1;
    std::vector<CaseBRemoval> case_b;
    std::vector<QueryRecord> queries;
};

// Same-measure procedures. `unit` is the value each square must reach; 0 picks
// V(C)/(2n), V(C)/(2n-2) and V(C)/(2n-1) respectively.
SameResult same_fat(const GridDensity& d, int n, const Rect& cake, double unit = 0);
SameResult same_thin(const GridDensity& d, int n, const Rect& cake, Side open, double unit = 0);
SameResult same_three_walls(const GridDensity& d, int n, const Rect& cake, Side open,
                            double unit = 0);

DivisionReport divide_square_two(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport four_quarters(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport divide_four_walls(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport divide_three_walls(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport same_fat_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport same_three_walls_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport ratio_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport staircase_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport half_plane_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport plane_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport greedy_compact_divide(const std::vector<Agent>& agents, const CakeDomain& cake,
                                     bool identical_measures = false);
DivisionReport fatrect_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport pairs_divide(const std::vector<Agent>& agents, const CakeDomain& cake);
DivisionReport ffdp_divide(const std::vector<Agent>& agents, const CakeDomain& cake);

// Procedure names accepted by run_procedure.
std::vector<std::string> procedure_names();
DivisionReport run_procedure(const std::string& name, const std::vector<Agent>& agents,
                             const CakeDomain& cake);
// Procedure chosen by wall count: 4 four-walls, 3 three-walls, 2 staircase,
// 1 half-plane, 0 plane; staircase and grid cakes map to staircase and
// greedy-compact.
std::string auto_procedure(const CakeDomain& cake);

// Piece family each procedure allocates from.
enum class Family { Squares, FatRects, SquarePairs, Ffdp };
Family procedure_family(const std::string& name);
const char* family_name(Family f);
Family family_from_name(const std::string& s);

// Row of the results table a cake belongs to: "4 walls" .. "0 walls",
// "staircase", "compact region" or "triangle".
std::string cake_row(const CakeDomain& cake);
// Throws naming the row when the procedure does not serve it or allocates a
// different family.
void check_compatible(const std::string& procedure, const CakeDomain& cake, Family family);
// Default procedure for a cake and piece family.
std::string procedure_for(const CakeDomain& cake, Family family);

struct Verification {
    bool disjoint = true;
    bool shapes = true;
    bool walls = true;
    bool guarantee = true;
    std::vector<std::string> problems;
    bool ok() const { return disjoint && shapes && walls && guarantee; }
};

// Re-checks disjointness, piece shapes, wall containment and (if agents are
// given) recomputes values against the reported bound.
Verification verify_report(const DivisionReport& report, const CakeDomain& cake, Family family,
                           const std::vector<Agent>* agents = nullptr);

} // namespace fsq
