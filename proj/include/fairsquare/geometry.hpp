#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsq {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Process-wide tolerances. FAIRSQUARE_TOL may override them, either as a bare
// number (geometric tolerance) or as "geo=..,value=..,guarantee=..,probe=..".
struct Tolerances {
    double geo = 1e-9;
    double value = 1e-9;
    double guarantee = 1e-6;
    double probe = 1e-3;
};
const Tolerances& tolerances();
Tolerances parse_tolerances(const std::string& spec, Tolerances base = {});

struct Point {
    double x = 0, y = 0;
};

// Axis-parallel rectangle; any side may be infinite.
struct Rect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool bounded() const;
    bool empty(double tol = 0) const { return !(x1 - x0 > tol && y1 - y0 > tol); }
    double area() const;
};

Rect make_square(double x, double y, double side);
Rect intersect(const Rect& a, const Rect& b);
bool interiors_overlap(const Rect& a, const Rect& b, double tol);
bool rect_contains(const Rect& outer, const Rect& inner, double tol);
bool is_square(const Rect& r, double tol);

// Staircase: union over corners of [x_j, inf) x [y_j, inf).
struct Staircase {
    std::vector<Point> corners;
    void validate(double tol = 0) const;
    bool contains(const Rect& r, double tol) const;
    // Area of the part of `box` (bounded) that lies inside the staircase.
    double area_within(const Rect& box) const;
};

enum class PieceKind : std::uint8_t {
    Square,
    Rect,
    LShape,
    Staircase,
    Ffdp,
    SquarePair,
    HalfPlane,
    QuarterPlane
};

const char* kind_name(PieceKind k);
PieceKind kind_from_name(const std::string& s);

// Tagged piece.
//   Square, Rect, HalfPlane, QuarterPlane: rects[0]
//   LShape: rects[0] is the outer rect, rects[1] the removed corner rect
//   SquarePair: rects[0], rects[1] (same side, may overlap or coincide)
//   Staircase: stairs;  Ffdp: poly (counter-clockwise)
struct Piece {
    PieceKind kind = PieceKind::Square;
    std::vector<Rect> rects;
    std::vector<Point> poly;
    Staircase stairs;

    static Piece square(const Rect& r);
    static Piece rect(const Rect& r);
    static Piece lshape(const Rect& outer, const Rect& cut);
    static Piece pair(const Rect& a, const Rect& b);
    static Piece ffdp(std::vector<Point> pts);
    static Piece staircase(Staircase s);
    static Piece quarter_plane(const Rect& r);
    static Piece half_plane(const Rect& r);

    // Disjoint rectangles whose union is the piece (not defined for Ffdp).
    std::vector<Rect> decompose() const;
    Rect bbox() const;
    double area() const;
};

enum Wall : unsigned { kLeft = 1, kRight = 2, kBottom = 4, kTop = 8, kAllWalls = 15 };

struct CakeDomain {
    enum class Base : std::uint8_t { Rect, Staircase, Grid, Polygon };
    Base base = Base::Rect;
    Rect rect;                  // Rect base; infinite sides allowed
    Staircase stairs;           // Staircase base
    std::vector<Rect> cells;    // Grid base: union of cells
    std::vector<Point> polygon; // Polygon base (RAIT), counter-clockwise
    unsigned walls = kAllWalls;

    static CakeDomain square(double side);
    static CakeDomain rectangle(const Rect& r, unsigned walls = kAllWalls);
    static CakeDomain quarter_plane();
    static CakeDomain half_plane();
    static CakeDomain plane();
    static CakeDomain staircase(Staircase s);
    static CakeDomain grid(std::vector<Rect> cells);
    static CakeDomain rait(Point corner, double leg);

    // Region a piece may occupy: the cake extended to infinity past open sides.
    Rect allowed_rect() const;
    bool piece_inside(const Piece& p, double tol) const;
    Rect bbox() const;
    int wall_count() const;
};

// --- operations ---
double fatness(const Rect& r);
int cover_number(const Piece& p, bool by_rectangles);
// Witnessing cover used by cover_number.
std::vector<Piece> cover_witness(const Piece& p, bool by_rectangles);

bool interior_disjoint(const std::vector<Piece>& pieces, double tol = -1);
bool pieces_overlap(const Piece& a, const Piece& b, double tol);

struct OverlapCount {
    bool ok;
    int count;
};
OverlapCount overlap_bound_check(const Rect& base, const std::vector<Rect>& others,
                                 double tol = -1);

Staircase remove_shadow(const Staircase& c, const Rect& winner, double tol = -1);
int shadow_corner_count(const Staircase& c, const Rect& winner);

enum class Axis { X, Y };
Rect scale_axis(const Rect& r, Axis a, double factor);
Piece scale_axis(const Piece& p, Axis a, double factor);
CakeDomain scale_axis(const CakeDomain& d, Axis a, double factor);

// Polygons (45-degree family).
double polygon_area(const std::vector<Point>& poly);
std::vector<Point> clip_polygon(const std::vector<Point>& poly, const Rect& r);
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, double a, double b,
                                  double c); // keep a*x + b*y <= c
bool polygon_is_45(const std::vector<Point>& poly, double tol);
// Least R for which the convex polygon is R-fat (numeric over orientations).
double polygon_fatness(const std::vector<Point>& poly);
bool polygon_is_fat(const std::vector<Point>& poly, double R, double tol);
bool polygons_overlap(const std::vector<Point>& a, const std::vector<Point>& b, double tol);

} // namespace fsq
