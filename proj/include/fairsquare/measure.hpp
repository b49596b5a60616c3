#pragma once

#include <functional>
#include <vector>

#include "fairsquare/geometry.hpp"

namespace fsq {

// Nonnegative piecewise-constant density. Cell (ix, iy) spans
// [xs[ix], xs[ix+1]] x [ys[iy], ys[iy+1]]; rows of `cells` are indexed by iy.
class GridDensity {
public:
    GridDensity() = default;
    GridDensity(std::vector<double> xs, std::vector<double> ys,
                const std::vector<std::vector<double>>& cells);

    static GridDensity from_masses(std::vector<double> xs, std::vector<double> ys,
                                   const std::vector<std::vector<double>>& masses);
    static GridDensity uniform(const Rect& r, double density = 1.0);

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    int nx() const { return static_cast<int>(xs_.size()) - 1; }
    int ny() const { return static_cast<int>(ys_.size()) - 1; }
    double mass(int ix, int iy) const { return mass_[static_cast<size_t>(iy) * nx() + ix]; }
    double density(int ix, int iy) const;
    double density_at(double x, double y) const;
    std::vector<std::vector<double>> cell_densities() const;

    double total() const { return total_; }
    double cumulative(double x, double y) const;
    double rect_value(const Rect& r) const;
    double polygon_value(const std::vector<Point>& poly) const;
    double piece_value(const Piece& p) const;
    Rect support() const;

    GridDensity scaled(double factor) const;

private:
    void build(const std::vector<double>& masses);
    std::vector<double> xs_, ys_;
    std::vector<double> mass_;   // row-major by iy
    std::vector<double> dens_;   // as given, so documents round-trip exactly
    std::vector<double> prefix_; // (nx+1) x (ny+1), prefix_[iy*(nx+1)+ix]
    double total_ = 0;
};

// Pointwise combination of densities on the union grid.
GridDensity combine_densities(const std::vector<const GridDensity*>& ds,
                              const std::function<double(const std::vector<double>&)>& op);

enum class FamilyKind { CornerSquare, VerticalCut, HorizontalCut, Diagonal45, CornerSquarePair };

// A family of pieces growing with a parameter t in [0, tmax]; pieces are nested.
//   CornerSquare:     square spanning anchor .. anchor + (sx t, sy t)
//   VerticalCut:      {x <= anchor.x + t} (sx > 0) or {x >= anchor.x - t} (sx < 0)
//   HorizontalCut:    same along y with sy
//   Diagonal45:       region ∩ {sx x + sy y <= offset + t}
//   CornerSquarePair: CornerSquare at anchor plus the mirrored square at anchor2
// Values are measured inside `clip`.
struct MonotoneFamily {
    FamilyKind kind = FamilyKind::CornerSquare;
    Point anchor;
    int sx = 1, sy = 1;
    Point anchor2;
    double offset = 0;
    double tmax = kInf;
    Rect clip{-kInf, -kInf, kInf, kInf};
    std::vector<Point> region;

    Piece piece(double t) const;
};

struct MarkResult {
    double t = 0;
    bool infinite = false;
    Piece piece;
};

double family_value(const GridDensity& d, const MonotoneFamily& f, double t);
std::vector<double> family_breakpoints(const GridDensity& d, const MonotoneFamily& f);
MarkResult mark(const GridDensity& d, const MonotoneFamily& f, double v);
double mark_bisect(const GridDensity& d, const MonotoneFamily& f, double v, double tol = 1e-12);

struct UtilityResult {
    Piece piece;
    double value = 0;
};

double piece_value(const GridDensity& d, const Piece& p);
std::vector<double> eval_partition(const GridDensity& d, const std::vector<Piece>& rooms,
                                   const Piece* cake = nullptr);
UtilityResult best_square(const GridDensity& d, const std::vector<Rect>& region, double tol = 1e-9);
UtilityResult best_square(const GridDensity& d, const Piece& region, double tol = 1e-9);
UtilityResult best_covered_piece(const GridDensity& d, const std::vector<Piece>& cover);

// Squares anchored on the lattice of density cuts and region edges, each grown
// to the largest side that stays inside the region.
std::vector<UtilityResult> lattice_squares(const GridDensity& d, const std::vector<Rect>& region);

} // namespace fsq
