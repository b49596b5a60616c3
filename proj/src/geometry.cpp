#include "fairsquare/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace fsq {

Tolerances parse_tolerances(const std::string& spec, Tolerances t) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        try {
            if (eq == std::string::npos) {
                t.geo = std::stod(item);
                continue;
            }
            std::string key = item.substr(0, eq);
            double v = std::stod(item.substr(eq + 1));
            if (key == "geo") t.geo = v;
            else if (key == "value") t.value = v;
            else if (key == "guarantee") t.guarantee = v;
            else if (key == "probe") t.probe = v;
            else throw Error("unknown tolerance key: " + key);
        } catch (const std::invalid_argument&) {
            throw Error("bad tolerance spec: " + item);
        }
    }
    return t;
}

const Tolerances& tolerances() {
    static Tolerances tol = [] {
        const char* env = std::getenv("FAIRSQUARE_TOL");
        return env ? parse_tolerances(env) : Tolerances{};
    }();
    return tol;
}

static double pick_tol(double tol) { return tol < 0 ? tolerances().geo : tol; }

// ---------------- Rect ----------------

bool Rect::bounded() const {
    return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(y0) && std::isfinite(y1);
}

double Rect::area() const {
    double w = width(), h = height();
    if (!(w > 0) || !(h > 0)) return 0;
    return w * h;
}

Rect make_square(double x, double y, double side) { return {x, y, x + side, y + side}; }

Rect intersect(const Rect& a, const Rect& b) {
    return {std::max(a.x0, b.x0), std::max(a.y0, b.y0), std::min(a.x1, b.x1),
            std::min(a.y1, b.y1)};
}

bool interiors_overlap(const Rect& a, const Rect& b, double tol) {
    return std::max(a.x0, b.x0) < std::min(a.x1, b.x1) - tol &&
           std::max(a.y0, b.y0) < std::min(a.y1, b.y1) - tol;
}

bool rect_contains(const Rect& o, const Rect& i, double tol) {
    return i.x0 >= o.x0 - tol && i.y0 >= o.y0 - tol && i.x1 <= o.x1 + tol && i.y1 <= o.y1 + tol;
}

bool is_square(const Rect& r, double tol) {
    double w = r.width(), h = r.height();
    if (std::isinf(w) || std::isinf(h)) return std::isinf(w) && std::isinf(h);
    return w > 0 && std::fabs(w - h) <= tol * std::max(1.0, w);
}

// Rect minus rect: up to four disjoint rects.
static std::vector<Rect> subtract(const Rect& a, const Rect& b) {
    Rect c = intersect(a, b);
    if (c.empty()) return {a};
    std::vector<Rect> out;
    if (c.y0 > a.y0) out.push_back({a.x0, a.y0, a.x1, c.y0});
    if (c.y1 < a.y1) out.push_back({a.x0, c.y1, a.x1, a.y1});
    if (c.x0 > a.x0) out.push_back({a.x0, c.y0, c.x0, c.y1});
    if (c.x1 < a.x1) out.push_back({c.x1, c.y0, a.x1, c.y1});
    return out;
}

// ---------------- Staircase ----------------

void Staircase::validate(double tol) const {
    if (corners.empty()) throw Error("staircase needs at least one corner");
    for (const auto& p : corners)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error("staircase corner not finite");
    for (size_t j = 1; j < corners.size(); ++j) {
        if (!(corners[j].x > corners[j - 1].x + tol) || !(corners[j].y < corners[j - 1].y - tol))
            throw Error("staircase corners must have increasing x and decreasing y");
    }
}

bool Staircase::contains(const Rect& r, double tol) const {
    for (const auto& c : corners)
        if (r.x0 >= c.x - tol && r.y0 >= c.y - tol) return true;
    return false;
}

double Staircase::area_within(const Rect& box) const {
    double total = 0;
    for (size_t j = 0; j < corners.size(); ++j) {
        double xa = std::max(box.x0, corners[j].x);
        double xb = j + 1 < corners.size() ? corners[j + 1].x : kInf;
        xb = std::min(xb, box.x1);
        if (!(xb > xa)) continue;
        double h = box.y1 - std::max(box.y0, corners[j].y);
        if (h > 0) total += (xb - xa) * h;
    }
    return total;
}

// ---------------- Piece ----------------

const char* kind_name(PieceKind k) {
    switch (k) {
    case PieceKind::Square: return "square";
    case PieceKind::Rect: return "rect";
    case PieceKind::LShape: return "lshape";
    case PieceKind::Staircase: return "staircase";
    case PieceKind::Ffdp: return "ffdp";
    case PieceKind::SquarePair: return "pair";
    case PieceKind::HalfPlane: return "half-plane";
    case PieceKind::QuarterPlane: return "quarter-plane";
    }
    return "?";
}

PieceKind kind_from_name(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(PieceKind::QuarterPlane); ++k)
        if (s == kind_name(static_cast<PieceKind>(k))) return static_cast<PieceKind>(k);
    throw Error("unknown piece kind: " + s);
}

Piece Piece::square(const Rect& r) { return {PieceKind::Square, {r}, {}, {}}; }
Piece Piece::rect(const Rect& r) { return {PieceKind::Rect, {r}, {}, {}}; }
Piece Piece::lshape(const Rect& o, const Rect& c) { return {PieceKind::LShape, {o, c}, {}, {}}; }
Piece Piece::pair(const Rect& a, const Rect& b) { return {PieceKind::SquarePair, {a, b}, {}, {}}; }
Piece Piece::ffdp(std::vector<Point> pts) { return {PieceKind::Ffdp, {}, std::move(pts), {}}; }
Piece Piece::staircase(Staircase s) { return {PieceKind::Staircase, {}, {}, std::move(s)}; }
Piece Piece::quarter_plane(const Rect& r) { return {PieceKind::QuarterPlane, {r}, {}, {}}; }
Piece Piece::half_plane(const Rect& r) { return {PieceKind::HalfPlane, {r}, {}, {}}; }

std::vector<Rect> Piece::decompose() const {
    switch (kind) {
    case PieceKind::LShape: return subtract(rects.at(0), rects.at(1));
    case PieceKind::SquarePair: {
        std::vector<Rect> out{rects.at(0)};
        for (const auto& r : subtract(rects.at(1), rects.at(0))) out.push_back(r);
        return out;
    }
    case PieceKind::Staircase: {
        std::vector<Rect> out;
        const auto& c = stairs.corners;
        for (size_t j = 0; j < c.size(); ++j)
            out.push_back({c[j].x, c[j].y, j + 1 < c.size() ? c[j + 1].x : kInf, kInf});
        return out;
    }
    case PieceKind::Ffdp: throw Error("polygon pieces have no rect decomposition");
    default: return {rects.at(0)};
    }
}

Rect Piece::bbox() const {
    if (kind == PieceKind::Ffdp) {
        Rect b{kInf, kInf, -kInf, -kInf};
        for (const auto& p : poly) {
            b.x0 = std::min(b.x0, p.x);
            b.y0 = std::min(b.y0, p.y);
            b.x1 = std::max(b.x1, p.x);
            b.y1 = std::max(b.y1, p.y);
        }
        return b;
    }
    if (kind == PieceKind::Staircase) {
        const auto& c = stairs.corners;
        return {c.front().x, c.back().y, kInf, kInf};
    }
    if (kind == PieceKind::SquarePair) {
        const auto &a = rects[0], &b = rects[1];
        return {std::min(a.x0, b.x0), std::min(a.y0, b.y0), std::max(a.x1, b.x1),
                std::max(a.y1, b.y1)};
    }
    return rects.at(0);
}

double Piece::area() const {
    if (kind == PieceKind::Ffdp) return polygon_area(poly);
    double a = 0;
    for (const auto& r : decompose()) a += r.area();
    return a;
}

// ---------------- CakeDomain ----------------

CakeDomain CakeDomain::square(double side) { return rectangle({0, 0, side, side}); }

CakeDomain CakeDomain::rectangle(const Rect& r, unsigned walls) {
    CakeDomain d;
    d.base = Base::Rect;
    d.rect = r;
    d.walls = walls;
    if (!std::isfinite(r.x0) && (walls & kLeft)) throw Error("left wall on unbounded side");
    if (!std::isfinite(r.x1) && (walls & kRight)) throw Error("right wall on unbounded side");
    if (!std::isfinite(r.y0) && (walls & kBottom)) throw Error("bottom wall on unbounded side");
    if (!std::isfinite(r.y1) && (walls & kTop)) throw Error("top wall on unbounded side");
    return d;
}

CakeDomain CakeDomain::quarter_plane() { return rectangle({0, 0, kInf, kInf}, kLeft | kBottom); }
CakeDomain CakeDomain::half_plane() { return rectangle({-kInf, 0, kInf, kInf}, kBottom); }
CakeDomain CakeDomain::plane() { return rectangle({-kInf, -kInf, kInf, kInf}, 0); }

CakeDomain CakeDomain::staircase(Staircase s) {
    s.validate();
    CakeDomain d;
    d.base = Base::Staircase;
    d.stairs = std::move(s);
    d.walls = kLeft | kBottom;
    return d;
}

CakeDomain CakeDomain::grid(std::vector<Rect> cells) {
    if (cells.empty()) throw Error("grid cake needs at least one cell");
    CakeDomain d;
    d.base = Base::Grid;
    d.cells = std::move(cells);
    d.walls = kAllWalls;
    return d;
}

CakeDomain CakeDomain::rait(Point c, double leg) {
    if (!(leg > 0)) throw Error("triangle leg must be positive");
    CakeDomain d;
    d.base = Base::Polygon;
    d.polygon = {c, {c.x + leg, c.y}, {c.x, c.y + leg}};
    d.rect = {c.x, c.y, c.x + leg, c.y + leg};
    d.walls = kAllWalls;
    return d;
}

Rect CakeDomain::allowed_rect() const {
    Rect r = bbox();
    if (base == Base::Rect) {
        if (!(walls & kLeft)) r.x0 = -kInf;
        if (!(walls & kRight)) r.x1 = kInf;
        if (!(walls & kBottom)) r.y0 = -kInf;
        if (!(walls & kTop)) r.y1 = kInf;
    }
    return r;
}

Rect CakeDomain::bbox() const {
    switch (base) {
    case Base::Rect: return rect;
    case Base::Staircase: return {stairs.corners.front().x, stairs.corners.back().y, kInf, kInf};
    case Base::Grid: {
        Rect b{kInf, kInf, -kInf, -kInf};
        for (const auto& c : cells) {
            b.x0 = std::min(b.x0, c.x0);
            b.y0 = std::min(b.y0, c.y0);
            b.x1 = std::max(b.x1, c.x1);
            b.y1 = std::max(b.y1, c.y1);
        }
        return b;
    }
    case Base::Polygon: return Piece::ffdp(polygon).bbox();
    }
    return rect;
}

int CakeDomain::wall_count() const {
    if (base != Base::Rect) return 4;
    int n = 0;
    for (unsigned w : {kLeft, kRight, kBottom, kTop}) n += (walls & w) ? 1 : 0;
    return n;
}

static double union_cover_area(const Rect& r, const std::vector<Rect>& cells) {
    double a = 0;
    for (const auto& c : cells) a += intersect(r, c).area();
    return a;
}

bool CakeDomain::piece_inside(const Piece& p, double tol) const {
    if (p.kind == PieceKind::Ffdp) {
        if (base == Base::Polygon) {
            double inside = polygon_area(p.poly);
            std::vector<Point> clipped = p.poly;
            for (size_t i = 0; i < polygon.size(); ++i) {
                const Point& a = polygon[i];
                const Point& b = polygon[(i + 1) % polygon.size()];
                // keep left side of a->b for a counter-clockwise polygon
                double nx = b.y - a.y, ny = a.x - b.x;
                clipped = clip_halfplane(clipped, nx, ny, nx * a.x + ny * a.y);
            }
            return polygon_area(clipped) >= inside - tol * std::max(1.0, inside);
        }
        Rect b = p.bbox();
        return rect_contains(allowed_rect(), b, tol);
    }
    if (p.kind == PieceKind::Staircase) {
        if (base != Base::Staircase && base != Base::Rect) return false;
    }
    for (const auto& r : p.decompose()) {
        switch (base) {
        case Base::Rect:
            if (!rect_contains(allowed_rect(), r, tol)) return false;
            break;
        case Base::Staircase:
            if (!stairs.contains(r, tol)) return false;
            break;
        case Base::Grid: {
            if (!r.bounded()) return false;
            double a = r.area();
            if (union_cover_area(r, cells) < a - tol * std::max(1.0, a)) return false;
            break;
        }
        case Base::Polygon: {
            if (!r.bounded()) return false;
            std::vector<Point> pr{{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
            if (!piece_inside(Piece::ffdp(pr), tol)) return false;
            break;
        }
        }
    }
    return true;
}

// ---------------- fatness & covers ----------------

double fatness(const Rect& r) {
    if (!r.bounded()) throw Error("unbounded");
    double w = r.width(), h = r.height();
    if (!(w > 0) || !(h > 0)) throw Error("degenerate rect");
    return std::max(w, h) / std::min(w, h);
}

static bool cover_is_exact(const std::vector<Rect>& region, const std::vector<Rect>& cover) {
    const double tol = tolerances().geo;
    for (const auto& c : cover) {
        double a = c.area();
        if (union_cover_area(c, region) < a - tol * std::max(1.0, a)) return false;
    }
    std::vector<double> xs, ys;
    for (const auto* list : {&region, &cover})
        for (const auto& r : *list) {
            xs.insert(xs.end(), {r.x0, r.x1});
            ys.insert(ys.end(), {r.y0, r.y1});
        }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        for (size_t j = 0; j + 1 < ys.size(); ++j) {
            if (!(xs[i + 1] - xs[i] > tol) || !(ys[j + 1] - ys[j] > tol)) continue;
            Point mid{(xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2};
            auto inside = [&](const Rect& r) {
                return mid.x > r.x0 && mid.x < r.x1 && mid.y > r.y0 && mid.y < r.y1;
            };
            if (std::any_of(region.begin(), region.end(), inside) &&
                !std::any_of(cover.begin(), cover.end(), inside))
                return false;
        }
    return true;
}

static std::vector<Rect> rect_square_cover(const Rect& r) {
    double w = r.width(), h = r.height();
    std::vector<Rect> out;
    if (w >= h) {
        int k = static_cast<int>(std::ceil(w / h - tolerances().geo));
        for (int i = 0; i < k; ++i) {
            double x = std::min(r.x0 + i * h, r.x1 - h);
            out.push_back({x, r.y0, x + h, r.y1});
        }
    } else {
        int k = static_cast<int>(std::ceil(h / w - tolerances().geo));
        for (int i = 0; i < k; ++i) {
            double y = std::min(r.y0 + i * w, r.y1 - w);
            out.push_back({r.x0, y, r.x1, y + w});
        }
    }
    return out;
}

// Three squares for a square minus a corner square of at most half its side.
static std::vector<Rect> lshape_square_cover(const Rect& o, const Rect& c) {
    double a = o.width();
    if (!is_square(o, tolerances().geo)) return {};
    double s = c.width();
    double t = a - s;
    bool left = std::fabs(c.x0 - o.x0) <= tolerances().geo;
    bool bottom = std::fabs(c.y0 - o.y0) <= tolerances().geo;
    // The three squares of side a-s hugging the corners other than the cut one.
    double xn = left ? o.x1 - t : o.x0;   // far from the cut horizontally
    double yn = bottom ? o.y1 - t : o.y0; // far vertically
    double xc = left ? o.x0 : o.x1 - t;   // on the cut's side
    double yc = bottom ? o.y0 : o.y1 - t;
    return {make_square(xc, yn, t), make_square(xn, yc, t), make_square(xn, yn, t)};
}

std::vector<Piece> cover_witness(const Piece& p, bool by_rects) {
    std::vector<Piece> out;
    switch (p.kind) {
    case PieceKind::Square:
    case PieceKind::Rect: {
        const Rect& r = p.rects[0];
        if (!r.bounded()) throw Error("no closed form");
        if (by_rects) return {Piece::rect(r)};
        for (const auto& s : rect_square_cover(r)) out.push_back(Piece::square(s));
        return out;
    }
    case PieceKind::LShape: {
        if (by_rects) {
            // Two overlapping rects: each strip extended across the cut's side.
            const Rect &o = p.rects[0], &c = p.rects[1];
            Rect a = o, b = o;
            if (c.x0 > o.x0) a.x1 = c.x0; else a.x0 = c.x1;
            if (c.y0 > o.y0) b.y1 = c.y0; else b.y0 = c.y1;
            return {Piece::rect(a), Piece::rect(b)};
        }
        auto sq = lshape_square_cover(p.rects[0], p.rects[1]);
        if (sq.empty() || !cover_is_exact(p.decompose(), sq)) throw Error("no closed form");
        for (const auto& s : sq) out.push_back(Piece::square(s));
        return out;
    }
    case PieceKind::Staircase:
        for (const auto& c : p.stairs.corners)
            out.push_back(Piece::quarter_plane({c.x, c.y, kInf, kInf}));
        return out;
    case PieceKind::QuarterPlane: return {p};
    default: throw Error("no closed form");
    }
}

int cover_number(const Piece& p, bool by_rects) {
    return static_cast<int>(cover_witness(p, by_rects).size());
}

// ---------------- disjointness ----------------

bool pieces_overlap(const Piece& a, const Piece& b, double tol) {
    if (a.kind == PieceKind::Ffdp || b.kind == PieceKind::Ffdp) {
        auto as_poly = [](const Piece& p) {
            if (p.kind == PieceKind::Ffdp) return p.poly;
            const Rect& r = p.rects.at(0);
            return std::vector<Point>{{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
        };
        return polygons_overlap(as_poly(a), as_poly(b), tol);
    }
    for (const auto& ra : a.decompose())
        for (const auto& rb : b.decompose())
            if (interiors_overlap(ra, rb, tol)) return true;
    return false;
}

bool interior_disjoint(const std::vector<Piece>& pieces, double tol) {
    tol = pick_tol(tol);
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j)
            if (pieces_overlap(pieces[i], pieces[j], tol)) return false;
    return true;
}

OverlapCount overlap_bound_check(const Rect& base, const std::vector<Rect>& others, double tol) {
    tol = pick_tol(tol);
    for (size_t i = 0; i < others.size(); ++i) {
        if (others[i].width() < base.width() - tol) throw Error("square smaller than base");
        for (size_t j = i + 1; j < others.size(); ++j)
            if (interiors_overlap(others[i], others[j], tol))
                throw Error("squares not interior-disjoint");
    }
    int count = 0;
    for (const auto& o : others) count += interiors_overlap(base, o, tol) ? 1 : 0;
    return {count <= 4, count};
}

// ---------------- staircase shadow ----------------

int shadow_corner_count(const Staircase& c, const Rect& w) {
    int m = 0;
    for (const auto& p : c.corners) m += (p.x <= w.x1 && p.y <= w.y1) ? 1 : 0;
    return m;
}

Staircase remove_shadow(const Staircase& c, const Rect& w, double tol) {
    tol = pick_tol(tol);
    bool anchored = false;
    for (const auto& p : c.corners)
        if (std::fabs(p.x - w.x0) <= tol && std::fabs(p.y - w.y0) <= tol) anchored = true;
    if (!anchored) throw Error("winner not corner-anchored");
    if (!w.bounded()) throw Error("winner square must be finite");
    const double X = w.x1, Y = w.y1;
    std::vector<Point> pts;
    double min_x = kInf, min_y = kInf;
    for (const auto& p : c.corners) {
        if (p.y > Y || p.x > X) pts.push_back(p);
        if (p.y <= Y) min_x = std::min(min_x, p.x);
        if (p.x <= X) min_y = std::min(min_y, p.y);
    }
    pts.push_back({min_x, Y});
    pts.push_back({X, min_y});
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    Staircase out;
    for (const auto& p : pts) {
        if (!out.corners.empty() && p.y >= out.corners.back().y - tol) continue;
        if (!out.corners.empty() && p.x <= out.corners.back().x + tol) {
            out.corners.back().y = p.y;
            continue;
        }
        out.corners.push_back(p);
    }
    return out;
}

// ---------------- scaling ----------------

static void check_factor(double f) {
    if (!(f > 0) || !std::isfinite(f)) throw Error("scale factor must be finite and positive");
}

Rect scale_axis(const Rect& r, Axis a, double f) {
    check_factor(f);
    Rect o = r;
    if (a == Axis::X) {
        o.x0 *= f;
        o.x1 *= f;
    } else {
        o.y0 *= f;
        o.y1 *= f;
    }
    return o;
}

Piece scale_axis(const Piece& p, Axis a, double f) {
    check_factor(f);
    Piece o = p;
    for (auto& r : o.rects) r = scale_axis(r, a, f);
    for (auto& q : o.poly) (a == Axis::X ? q.x : q.y) *= f;
    for (auto& q : o.stairs.corners) (a == Axis::X ? q.x : q.y) *= f;
    if (f != 1 && o.kind == PieceKind::Square) o.kind = PieceKind::Rect;
    return o;
}

CakeDomain scale_axis(const CakeDomain& d, Axis a, double f) {
    check_factor(f);
    CakeDomain o = d;
    o.rect = scale_axis(d.rect, a, f);
    for (auto& c : o.cells) c = scale_axis(c, a, f);
    for (auto& q : o.polygon) (a == Axis::X ? q.x : q.y) *= f;
    for (auto& q : o.stairs.corners) (a == Axis::X ? q.x : q.y) *= f;
    return o;
}

// ---------------- polygons ----------------

double polygon_area(const std::vector<Point>& p) {
    double s = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % p.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return std::fabs(s) / 2;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& poly, double a, double b, double c) {
    std::vector<Point> out;
    if (poly.empty()) return out;
    out.reserve(poly.size() + 2);
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        double fp = a * p.x + b * p.y - c;
        double fq = a * q.x + b * q.y - c;
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

std::vector<Point> clip_polygon(const std::vector<Point>& poly, const Rect& r) {
    std::vector<Point> out = poly;
    if (std::isfinite(r.x0)) out = clip_halfplane(out, -1, 0, -r.x0);
    if (std::isfinite(r.x1)) out = clip_halfplane(out, 1, 0, r.x1);
    if (std::isfinite(r.y0)) out = clip_halfplane(out, 0, -1, -r.y0);
    if (std::isfinite(r.y1)) out = clip_halfplane(out, 0, 1, r.y1);
    return out;
}

bool polygon_is_45(const std::vector<Point>& poly, double tol) {
    if (poly.size() < 3) return false;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        double dx = std::fabs(b.x - a.x), dy = std::fabs(b.y - a.y);
        double len = std::max(dx, dy);
        if (len <= tol) continue;
        if (dx > tol * len * 10 && dy > tol * len * 10 && std::fabs(dx - dy) > tol * 10 * len)
            return false;
    }
    return true;
}

bool polygons_overlap(const std::vector<Point>& a, const std::vector<Point>& b, double tol) {
    // b is convex; orient its edges so that the interior is on the kept side.
    double sgn = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        const Point& p = b[i];
        const Point& q = b[(i + 1) % b.size()];
        sgn += p.x * q.y - q.x * p.y;
    }
    sgn = sgn >= 0 ? 1 : -1;
    std::vector<Point> c = a;
    for (size_t i = 0; i < b.size() && !c.empty(); ++i) {
        const Point& p = b[i];
        const Point& q = b[(i + 1) % b.size()];
        double nx = sgn * (q.y - p.y), ny = sgn * (p.x - q.x);
        c = clip_halfplane(c, nx, ny, nx * p.x + ny * p.y);
    }
    Rect ba = Piece::ffdp(a).bbox();
    double scale = std::max(ba.width(), ba.height());
    return polygon_area(c) > tol * std::max(1.0, scale);
}

namespace {

struct HalfPlane {
    double a, b, c; // a x + b y <= c
};

std::vector<HalfPlane> convex_halfplanes(const std::vector<Point>& p) {
    double sgn = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        const Point& u = p[i];
        const Point& v = p[(i + 1) % p.size()];
        sgn += u.x * v.y - v.x * u.y;
    }
    sgn = sgn >= 0 ? 1 : -1;
    std::vector<HalfPlane> hs;
    for (size_t i = 0; i < p.size(); ++i) {
        const Point& u = p[i];
        const Point& v = p[(i + 1) % p.size()];
        double a = sgn * (v.y - u.y), b = sgn * (u.x - v.x);
        double n = std::hypot(a, b);
        if (n == 0) continue;
        hs.push_back({a / n, b / n, (a * u.x + b * u.y) / n});
    }
    return hs;
}

// Largest half-side of an axis-parallel square centred at (x, y).
double half_side_at(const std::vector<HalfPlane>& hs, double x, double y) {
    double r = kInf;
    for (const auto& h : hs) r = std::min(r, (h.c - h.a * x - h.b * y) / (std::fabs(h.a) + std::fabs(h.b)));
    return r;
}

template <class F>
double ternary_max(F f, double lo, double hi, int iters = 80) {
    for (int i = 0; i < iters; ++i) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (f(m1) < f(m2)) lo = m1;
        else hi = m2;
    }
    return f((lo + hi) / 2);
}

double fatness_at(const std::vector<Point>& poly, double th) {
    double c = std::cos(th), s = std::sin(th);
    std::vector<Point> q;
    for (const auto& p : poly) q.push_back({c * p.x + s * p.y, -s * p.x + c * p.y});
    Rect b = Piece::ffdp(q).bbox();
    double outer = std::max(b.width(), b.height());
    auto hs = convex_halfplanes(q);
    double inner = 2 * ternary_max(
                           [&](double x) {
                               return ternary_max([&](double y) { return half_side_at(hs, x, y); },
                                                  b.y0, b.y1, 60);
                           },
                           b.x0, b.x1, 60);
    if (!(inner > 0)) return kInf;
    return outer / inner;
}

} // namespace

bool polygon_is_fat(const std::vector<Point>& poly, double R, double tol) {
    const double quarter = std::acos(-1.0) / 4;
    if (fatness_at(poly, 0) <= R + tol || fatness_at(poly, quarter) <= R + tol) return true;
    return polygon_fatness(poly) <= R + tol;
}

double polygon_fatness(const std::vector<Point>& poly) {
    const int steps = 90;
    const double period = std::acos(-1.0) / 2;
    double best = kInf, best_th = 0;
    for (int i = 0; i < steps; ++i) {
        double th = period * i / steps;
        double f = fatness_at(poly, th);
        if (f < best) {
            best = f;
            best_th = th;
        }
    }
    double lo = best_th - period / steps, hi = best_th + period / steps;
    for (int i = 0; i < 40; ++i) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (fatness_at(poly, m1) > fatness_at(poly, m2)) lo = m1;
        else hi = m2;
    }
    return std::min(best, fatness_at(poly, (lo + hi) / 2));
}

} // namespace fsq
