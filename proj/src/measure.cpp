#include "fairsquare/measure.hpp"

#include <algorithm>
#include <cmath>

namespace fsq {

namespace {

void check_cuts(const std::vector<double>& v, const char* name) {
    if (v.size() < 2) throw Error(std::string(name) + ": need at least two cut positions");
    for (size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) throw Error(std::string(name) + ": cut positions must be finite");
        if (i > 0 && !(v[i] > v[i - 1])) throw Error(std::string(name) + ": cuts must be increasing");
    }
}

void locate(const std::vector<double>& v, double x, int& i, double& a) {
    const int n = static_cast<int>(v.size()) - 1;
    if (!(x > v.front())) {
        i = 0;
        a = 0;
    } else if (!(x < v.back())) {
        i = n - 1;
        a = 1;
    } else {
        i = static_cast<int>(std::upper_bound(v.begin(), v.end(), x) - v.begin()) - 1;
        a = (x - v[i]) / (v[i + 1] - v[i]);
    }
}

} // namespace

GridDensity::GridDensity(std::vector<double> xs, std::vector<double> ys,
                         const std::vector<std::vector<double>>& cells)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    check_cuts(xs_, "xs");
    check_cuts(ys_, "ys");
    if (static_cast<int>(cells.size()) != ny()) throw Error("cells: row count must equal len(ys)-1");
    std::vector<double> masses;
    masses.reserve(static_cast<size_t>(nx()) * ny());
    for (int iy = 0; iy < ny(); ++iy) {
        if (static_cast<int>(cells[iy].size()) != nx())
            throw Error("cells: column count must equal len(xs)-1");
        for (int ix = 0; ix < nx(); ++ix) {
            double v = cells[iy][ix];
            if (!std::isfinite(v) || v < 0) throw Error("cells: densities must be finite and >= 0");
            masses.push_back(v * (xs_[ix + 1] - xs_[ix]) * (ys_[iy + 1] - ys_[iy]));
        }
    }
    build(masses);
    for (int iy = 0; iy < ny(); ++iy)
        for (int ix = 0; ix < nx(); ++ix) dens_[static_cast<size_t>(iy) * nx() + ix] = cells[iy][ix];
}

GridDensity GridDensity::from_masses(std::vector<double> xs, std::vector<double> ys,
                                     const std::vector<std::vector<double>>& masses) {
    GridDensity d;
    d.xs_ = std::move(xs);
    d.ys_ = std::move(ys);
    check_cuts(d.xs_, "xs");
    check_cuts(d.ys_, "ys");
    if (static_cast<int>(masses.size()) != d.ny()) throw Error("masses: row count mismatch");
    std::vector<double> flat;
    for (const auto& row : masses) {
        if (static_cast<int>(row.size()) != d.nx()) throw Error("masses: column count mismatch");
        for (double m : row) {
            if (!std::isfinite(m) || m < 0) throw Error("masses must be finite and >= 0");
            flat.push_back(m);
        }
    }
    d.build(flat);
    return d;
}

GridDensity GridDensity::uniform(const Rect& r, double density) {
    return GridDensity({r.x0, r.x1}, {r.y0, r.y1}, {{density}});
}

void GridDensity::build(const std::vector<double>& masses) {
    mass_ = masses;
    dens_.resize(mass_.size());
    for (int iy = 0; iy < ny(); ++iy)
        for (int ix = 0; ix < nx(); ++ix)
            dens_[static_cast<size_t>(iy) * nx() + ix] =
                mass(ix, iy) / ((xs_[ix + 1] - xs_[ix]) * (ys_[iy + 1] - ys_[iy]));
    const int w = nx() + 1;
    prefix_.assign(static_cast<size_t>(w) * (ny() + 1), 0.0);
    for (int iy = 0; iy < ny(); ++iy) {
        double row = 0;
        for (int ix = 0; ix < nx(); ++ix) {
            row += mass(ix, iy);
            prefix_[(iy + 1) * w + ix + 1] = prefix_[iy * w + ix + 1] + row;
        }
    }
    total_ = prefix_.back();
}

double GridDensity::density(int ix, int iy) const { return dens_[static_cast<size_t>(iy) * nx() + ix]; }

double GridDensity::density_at(double x, double y) const {
    if (xs_.empty() || !(x >= xs_.front() && x < xs_.back() && y >= ys_.front() && y < ys_.back()))
        return 0;
    int ix = static_cast<int>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin()) - 1;
    int iy = static_cast<int>(std::upper_bound(ys_.begin(), ys_.end(), y) - ys_.begin()) - 1;
    return density(ix, iy);
}

std::vector<std::vector<double>> GridDensity::cell_densities() const {
    std::vector<std::vector<double>> out(ny(), std::vector<double>(nx()));
    for (int iy = 0; iy < ny(); ++iy)
        for (int ix = 0; ix < nx(); ++ix) out[iy][ix] = density(ix, iy);
    return out;
}

double GridDensity::cumulative(double x, double y) const {
    if (xs_.empty() || !(x > xs_.front()) || !(y > ys_.front())) return 0;
    int i, j;
    double a, b;
    locate(xs_, x, i, a);
    locate(ys_, y, j, b);
    const int w = nx() + 1;
    auto P = [&](int ix, int iy) { return prefix_[iy * w + ix]; };
    double p = P(i, j);
    return p + a * (P(i + 1, j) - p) + b * (P(i, j + 1) - p) + a * b * mass(i, j);
}

double GridDensity::rect_value(const Rect& r) const {
    if (xs_.empty() || !(r.x1 > r.x0) || !(r.y1 > r.y0)) return 0;
    double v = cumulative(r.x1, r.y1) - cumulative(r.x0, r.y1) - cumulative(r.x1, r.y0) +
               cumulative(r.x0, r.y0);
    return v > 0 ? v : 0;
}

double GridDensity::polygon_value(const std::vector<Point>& poly) const {
    if (xs_.empty() || poly.size() < 3) return 0;
    Rect b = Piece::ffdp(poly).bbox();
    int i0, i1, j0, j1;
    double a;
    locate(xs_, b.x0, i0, a);
    locate(xs_, b.x1, i1, a);
    locate(ys_, b.y0, j0, a);
    locate(ys_, b.y1, j1, a);
    double v = 0;
    for (int iy = j0; iy <= j1; ++iy)
        for (int ix = i0; ix <= i1; ++ix) {
            double m = mass(ix, iy);
            if (m <= 0) continue;
            Rect cell{xs_[ix], ys_[iy], xs_[ix + 1], ys_[iy + 1]};
            double part = polygon_area(clip_polygon(poly, cell));
            if (part > 0) v += m * std::min(1.0, part / cell.area());
        }
    return v;
}

double GridDensity::piece_value(const Piece& p) const {
    if (p.kind == PieceKind::Ffdp) return polygon_value(p.poly);
    double v = 0;
    for (const auto& r : p.decompose()) v += rect_value(r);
    return v;
}

Rect GridDensity::support() const {
    Rect s{kInf, kInf, -kInf, -kInf};
    for (int iy = 0; iy < ny(); ++iy)
        for (int ix = 0; ix < nx(); ++ix)
            if (mass(ix, iy) > 0) {
                s.x0 = std::min(s.x0, xs_[ix]);
                s.x1 = std::max(s.x1, xs_[ix + 1]);
                s.y0 = std::min(s.y0, ys_[iy]);
                s.y1 = std::max(s.y1, ys_[iy + 1]);
            }
    if (s.x0 > s.x1) return {0, 0, 0, 0};
    return s;
}

GridDensity GridDensity::scaled(double f) const {
    if (!(f >= 0) || !std::isfinite(f)) throw Error("scale must be finite and >= 0");
    GridDensity d = *this;
    std::vector<double> m = mass_;
    for (auto& x : m) x *= f;
    d.build(m);
    return d;
}

GridDensity combine_densities(const std::vector<const GridDensity*>& ds,
                              const std::function<double(const std::vector<double>&)>& op) {
    std::vector<double> xs, ys;
    for (const auto* d : ds) {
        xs.insert(xs.end(), d->xs().begin(), d->xs().end());
        ys.insert(ys.end(), d->ys().begin(), d->ys().end());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::vector<std::vector<double>> cells(ys.size() - 1, std::vector<double>(xs.size() - 1));
    std::vector<double> vals(ds.size());
    for (size_t iy = 0; iy + 1 < ys.size(); ++iy)
        for (size_t ix = 0; ix + 1 < xs.size(); ++ix) {
            double cx = (xs[ix] + xs[ix + 1]) / 2, cy = (ys[iy] + ys[iy + 1]) / 2;
            for (size_t k = 0; k < ds.size(); ++k) vals[k] = ds[k]->density_at(cx, cy);
            cells[iy][ix] = op(vals);
        }
    return GridDensity(xs, ys, cells);
}

// ---------------- families ----------------

static Rect square_at(Point a, int sx, int sy, double t) {
    Rect r;
    if (sx > 0) { r.x0 = a.x; r.x1 = a.x + t; } else { r.x0 = a.x - t; r.x1 = a.x; }
    if (sy > 0) { r.y0 = a.y; r.y1 = a.y + t; } else { r.y0 = a.y - t; r.y1 = a.y; }
    return r;
}

static Rect cut_rect(const MonotoneFamily& f, double t) {
    Rect r = f.clip;
    if (f.kind == FamilyKind::VerticalCut) {
        if (f.sx > 0) r.x1 = std::min(r.x1, f.anchor.x + t);
        else r.x0 = std::max(r.x0, f.anchor.x - t);
    } else {
        if (f.sy > 0) r.y1 = std::min(r.y1, f.anchor.y + t);
        else r.y0 = std::max(r.y0, f.anchor.y - t);
    }
    return r;
}

Piece MonotoneFamily::piece(double t) const {
    switch (kind) {
    case FamilyKind::CornerSquare: return Piece::square(square_at(anchor, sx, sy, t));
    case FamilyKind::VerticalCut:
    case FamilyKind::HorizontalCut: {
        Rect r = cut_rect(*this, t);
        return r.bounded() ? Piece::rect(r) : Piece::half_plane(r);
    }
    case FamilyKind::Diagonal45:
        return Piece::ffdp(clip_polygon(clip_halfplane(region, sx, sy, offset + t), clip));
    case FamilyKind::CornerSquarePair:
        return Piece::pair(square_at(anchor, sx, sy, t), square_at(anchor2, -sx, -sy, t));
    }
    return {};
}

double family_value(const GridDensity& d, const MonotoneFamily& f, double t) {
    if (f.kind == FamilyKind::Diagonal45 && t < 0) t = 0;
    if (!(t > 0) && f.kind != FamilyKind::Diagonal45) return 0;
    switch (f.kind) {
    case FamilyKind::CornerSquare:
        return d.rect_value(intersect(square_at(f.anchor, f.sx, f.sy, t), f.clip));
    case FamilyKind::VerticalCut:
    case FamilyKind::HorizontalCut: return d.rect_value(cut_rect(f, t));
    case FamilyKind::Diagonal45:
        return d.polygon_value(clip_polygon(clip_halfplane(f.region, f.sx, f.sy, f.offset + t), f.clip));
    case FamilyKind::CornerSquarePair: {
        Rect a = intersect(square_at(f.anchor, f.sx, f.sy, t), f.clip);
        Rect b = intersect(square_at(f.anchor2, -f.sx, -f.sy, t), f.clip);
        double v = d.rect_value(a) + d.rect_value(b) - d.rect_value(intersect(a, b));
        return v > 0 ? v : 0;
    }
    }
    return 0;
}

std::vector<double> family_breakpoints(const GridDensity& d, const MonotoneFamily& f) {
    std::vector<double> bp{0.0};
    auto add = [&](double t) {
        if (t > 0 && std::isfinite(t)) bp.push_back(t);
    };
    auto add_axis = [&](const std::vector<double>& cuts, double lo, double hi, double a, int s) {
        for (double c : cuts) add(s * (c - a));
        add(s * (lo - a));
        add(s * (hi - a));
    };
    const Rect& c = f.clip;
    switch (f.kind) {
    case FamilyKind::CornerSquare:
        add_axis(d.xs(), c.x0, c.x1, f.anchor.x, f.sx);
        add_axis(d.ys(), c.y0, c.y1, f.anchor.y, f.sy);
        break;
    case FamilyKind::VerticalCut: add_axis(d.xs(), c.x0, c.x1, f.anchor.x, f.sx); break;
    case FamilyKind::HorizontalCut: add_axis(d.ys(), c.y0, c.y1, f.anchor.y, f.sy); break;
    case FamilyKind::Diagonal45: {
        auto at = [&](double x, double y) { add(f.sx * x + f.sy * y - f.offset); };
        for (double x : d.xs())
            for (double y : d.ys()) at(x, y);
        for (size_t k = 0; k < f.region.size(); ++k) {
            const Point& p = f.region[k];
            const Point& q = f.region[(k + 1) % f.region.size()];
            at(p.x, p.y);
            for (double x : d.xs())
                if ((x - p.x) * (x - q.x) < 0) at(x, p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x));
            for (double y : d.ys())
                if ((y - p.y) * (y - q.y) < 0) at(p.x + (q.x - p.x) * (y - p.y) / (q.y - p.y), y);
        }
        for (double x : {c.x0, c.x1})
            for (double y : {c.y0, c.y1})
                if (std::isfinite(x) && std::isfinite(y)) at(x, y);
        break;
    }
    case FamilyKind::CornerSquarePair:
        add_axis(d.xs(), c.x0, c.x1, f.anchor.x, f.sx);
        add_axis(d.ys(), c.y0, c.y1, f.anchor.y, f.sy);
        add_axis(d.xs(), c.x0, c.x1, f.anchor2.x, -f.sx);
        add_axis(d.ys(), c.y0, c.y1, f.anchor2.y, -f.sy);
        add(f.sx * (f.anchor2.x - f.anchor.x));
        add(f.sy * (f.anchor2.y - f.anchor.y));
        add(f.sx * (f.anchor2.x - f.anchor.x) / 2);
        add(f.sy * (f.anchor2.y - f.anchor.y) / 2);
        break;
    }
    if (std::isfinite(f.tmax)) {
        bp.erase(std::remove_if(bp.begin(), bp.end(), [&](double t) { return t > f.tmax; }), bp.end());
        bp.push_back(f.tmax);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

// Smallest u in [0, h] with q(u) = v, q the quadratic through (0,f0), (h/2,fm), (h,f1).
static double segment_root(double f0, double fm, double f1, double h, double v) {
    double A = 2 * (f0 - 2 * fm + f1) / (h * h);
    double B = (f1 - f0) / h - A * h;
    double C = f0 - v;
    double scale = std::max({std::fabs(f0), std::fabs(f1), std::fabs(v), 1e-300});
    double u;
    if (std::fabs(A) * h * h <= 1e-14 * scale) {
        u = B != 0 ? -C / B : 0;
    } else {
        double disc = B * B - 4 * A * C;
        if (disc < 0) disc = 0;
        double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
        double r1 = q != 0 ? q / A : -B / (2 * A);
        double r2 = q != 0 ? C / q : r1;
        auto dist = [&](double r) { return r < 0 ? -r : (r > h ? r - h : 0.0); };
        u = dist(r1) < dist(r2) ? r1 : (dist(r2) < dist(r1) ? r2 : std::min(r1, r2));
    }
    return std::clamp(u, 0.0, h);
}

MarkResult mark(const GridDensity& d, const MonotoneFamily& f, double v) {
    if (v < 0) throw Error("mark target must be >= 0");
    MarkResult res;
    if (v == 0) {
        res.piece = f.piece(0);
        return res;
    }
    std::vector<double> bp = family_breakpoints(d, f);
    double T = bp.back();
    if (family_value(d, f, T) < v) {
        res.t = kInf;
        res.infinite = true;
        res.piece = f.piece(kInf);
        return res;
    }
    // first breakpoint whose value reaches v
    size_t lo = 0, hi = bp.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (family_value(d, f, bp[mid]) >= v) hi = mid;
        else lo = mid;
    }
    double a = bp[lo], b = bp[hi];
    double fa = family_value(d, f, a);
    if (fa >= v) {
        res.t = a;
    } else {
        double h = b - a;
        double fm = family_value(d, f, a + h / 2), fb = family_value(d, f, b);
        res.t = a + segment_root(fa, fm, fb, h, v);
    }
    res.piece = f.piece(res.t);
    return res;
}

double mark_bisect(const GridDensity& d, const MonotoneFamily& f, double v, double tol) {
    if (v <= 0) return 0;
    double hi = family_breakpoints(d, f).back();
    if (family_value(d, f, hi) < v) return kInf;
    double lo = 0;
    while (hi - lo > tol) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (family_value(d, f, mid) >= v) hi = mid;
        else lo = mid;
    }
    return hi;
}

// ---------------- evaluation ----------------

double piece_value(const GridDensity& d, const Piece& p) { return d.piece_value(p); }

std::vector<double> eval_partition(const GridDensity& d, const std::vector<Piece>& rooms,
                                   const Piece* cake) {
    const double tol = tolerances().geo;
    if (rooms.empty()) throw Error("rooms not a partition: empty");
    if (!interior_disjoint(rooms, tol)) throw Error("rooms not a partition: overlapping rooms");
    std::vector<double> vals;
    double sum = 0;
    for (const auto& r : rooms) {
        vals.push_back(d.piece_value(r));
        sum += vals.back();
    }
    if (cake) {
        double area = 0;
        for (const auto& r : rooms) area += r.area();
        double ca = cake->area();
        if (std::isfinite(ca) && std::fabs(area - ca) > tol * std::max(1.0, ca))
            throw Error("rooms not a partition: area mismatch");
        double total = d.piece_value(*cake);
        if (std::fabs(sum - total) > tolerances().value * std::max(1.0, total))
            throw Error("rooms not a partition: value mismatch");
    }
    return vals;
}

UtilityResult best_covered_piece(const GridDensity& d, const std::vector<Piece>& cover) {
    if (cover.empty()) throw Error("cover must be nonempty");
    UtilityResult best{cover[0], d.piece_value(cover[0])};
    for (size_t i = 1; i < cover.size(); ++i) {
        double v = d.piece_value(cover[i]);
        if (v > best.value) best = {cover[i], v};
    }
    return best;
}

namespace {

double region_overlap(const Rect& r, const std::vector<Rect>& region) {
    double a = 0;
    for (const auto& c : region) a += intersect(r, c).area();
    return a;
}

bool fits(const Rect& sq, const std::vector<Rect>& region) {
    double a = sq.area();
    if (!(a > 0)) return true;
    return region_overlap(sq, region) >= a * (1 - 1e-12);
}

// Largest side s for the square from (x,y) in direction (sx,sy) that fits.
double max_side_lattice(Point p, int sx, int sy, const std::vector<double>& sides,
                        const std::vector<Rect>& region) {
    size_t lo = 0, hi = sides.size();
    // sides sorted ascending; find the last fitting one
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (fits(square_at(p, sx, sy, sides[mid]), region)) lo = mid + 1;
        else hi = mid;
    }
    return lo == 0 ? 0 : sides[lo - 1];
}

double max_side_continuous(Point p, double cap, const std::vector<Rect>& region) {
    if (!fits(square_at(p, 1, 1, 1e-12 * std::max(1.0, cap)), region)) return 0;
    double lo = 0, hi = cap;
    if (fits(square_at(p, 1, 1, hi), region)) return hi;
    for (int i = 0; i < 60; ++i) {
        double mid = (lo + hi) / 2;
        if (fits(square_at(p, 1, 1, mid), region)) lo = mid;
        else hi = mid;
    }
    return lo;
}

} // namespace

std::vector<UtilityResult> lattice_squares(const GridDensity& d, const std::vector<Rect>& region) {
    Rect bb{kInf, kInf, -kInf, -kInf};
    for (const auto& r : region) {
        bb.x0 = std::min(bb.x0, r.x0);
        bb.y0 = std::min(bb.y0, r.y0);
        bb.x1 = std::max(bb.x1, r.x1);
        bb.y1 = std::max(bb.y1, r.y1);
    }
    std::vector<double> X, Y;
    for (const auto& r : region) {
        X.insert(X.end(), {r.x0, r.x1});
        Y.insert(Y.end(), {r.y0, r.y1});
    }
    for (double x : d.xs())
        if (x > bb.x0 && x < bb.x1) X.push_back(x);
    for (double y : d.ys())
        if (y > bb.y0 && y < bb.y1) Y.push_back(y);
    auto uniq = [](std::vector<double>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(X);
    uniq(Y);
    std::vector<UtilityResult> out;
    for (double x : X)
        for (double y : Y)
            for (int sx : {1, -1})
                for (int sy : {1, -1}) {
                    std::vector<double> sides;
                    for (double x2 : X)
                        if (sx * (x2 - x) > 0) sides.push_back(sx * (x2 - x));
                    for (double y2 : Y)
                        if (sy * (y2 - y) > 0) sides.push_back(sy * (y2 - y));
                    uniq(sides);
                    double s = max_side_lattice({x, y}, sx, sy, sides, region);
                    if (!(s > 0)) continue;
                    Rect sq = square_at({x, y}, sx, sy, s);
                    out.push_back({Piece::square(sq), d.rect_value(sq)});
                }
    return out;
}

UtilityResult best_square(const GridDensity& d, const std::vector<Rect>& region, double tol) {
    std::vector<Rect> cells;
    for (const auto& r : region)
        if (r.area() > 0) cells.push_back(r);
    for (const auto& r : cells)
        if (!r.bounded()) throw Error("best_square: region must be bounded");
    if (cells.empty()) {
        Point p = region.empty() ? Point{} : Point{region[0].x0, region[0].y0};
        return {Piece::square({p.x, p.y, p.x, p.y}), 0};
    }
    auto cands = lattice_squares(d, cells);
    std::sort(cands.begin(), cands.end(),
              [](const UtilityResult& a, const UtilityResult& b) { return a.value > b.value; });
    UtilityResult best = cands.front();
    if (best.value >= d.total() * (1 - tol)) return best;
    // local refinement from the strongest candidates
    Rect bb = cands.front().piece.rects[0];
    for (const auto& r : cells) {
        bb.x0 = std::min(bb.x0, r.x0);
        bb.y0 = std::min(bb.y0, r.y0);
        bb.x1 = std::max(bb.x1, r.x1);
        bb.y1 = std::max(bb.y1, r.y1);
    }
    const double cap = std::max(bb.width(), bb.height());
    auto eval = [&](double x, double y, Rect& sq) {
        double s = max_side_continuous({x, y}, cap, cells);
        sq = square_at({x, y}, 1, 1, s);
        return s > 0 ? d.rect_value(sq) : -1.0;
    };
    const size_t seeds = std::min<size_t>(3, cands.size());
    for (size_t k = 0; k < seeds; ++k) {
        Rect cur = cands[k].piece.rects[0];
        double x = cur.x0, y = cur.y0, h = cur.width();
        Rect sq;
        double val = eval(x, y, sq);
        for (int round = 0; round < 4 && h > 1e-12; ++round, h /= 2) {
            for (int axis = 0; axis < 2; ++axis) {
                double lo = (axis == 0 ? x : y) - h, hi = (axis == 0 ? x : y) + h;
                auto f = [&](double c) {
                    Rect tmp;
                    return axis == 0 ? eval(c, y, tmp) : eval(x, c, tmp);
                };
                for (int it = 0; it < 30; ++it) {
                    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                    if (f(m1) < f(m2)) lo = m1;
                    else hi = m2;
                }
                double c = (lo + hi) / 2;
                Rect cand;
                double cv = axis == 0 ? eval(c, y, cand) : eval(x, c, cand);
                if (cv > val) {
                    val = cv;
                    (axis == 0 ? x : y) = c;
                    sq = cand;
                }
            }
        }
        if (val > best.value) best = {Piece::square(sq), val};
    }
    return best;
}

UtilityResult best_square(const GridDensity& d, const Piece& region, double tol) {
    if (region.kind == PieceKind::Ffdp) throw Error("best_square: polygon regions unsupported");
    return best_square(d, region.decompose(), tol);
}

} // namespace fsq
