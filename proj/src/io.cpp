// JSON documents and SVG output.

#include "fairsquare/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fsq {

using json = nlohmann::json;

namespace {

json num(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) throw Error("cannot write NaN");
    return x > 0 ? "inf" : "-inf";
}

double get_num(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
    }
    throw Error(std::string("expected a number for ") + what);
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json rect_json(const Rect& r) { return json::array({num(r.x0), num(r.y0), num(r.x1), num(r.y1)}); }

Rect rect_of(const json& j) {
    if (!j.is_array() || j.size() != 4) throw Error("a rectangle is [x0, y0, x1, y1]");
    Rect r{get_num(j[0], "x0"), get_num(j[1], "y0"), get_num(j[2], "x1"), get_num(j[3], "y1")};
    if (!(r.x1 >= r.x0) || !(r.y1 >= r.y0)) throw Error("rectangle corners out of order");
    return r;
}

json point_json(const Point& p) { return json::array({num(p.x), num(p.y)}); }

Point point_of(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("a point is [x, y]");
    return {get_num(j[0], "x"), get_num(j[1], "y")};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

void check_schema(const json& j) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != kSchema)
        throw Error("unsupported schema: " + j.at("schema").dump());
}

json density_json(const GridDensity& d) {
    json xs = json::array(), ys = json::array();
    for (double x : d.xs()) xs.push_back(x);
    for (double y : d.ys()) ys.push_back(y);
    return {{"xs", xs}, {"ys", ys}, {"cells", d.cell_densities()}};
}

GridDensity density_of(const json& j) {
    auto vec = [&](const char* key) {
        const json& a = field(j, key);
        if (!a.is_array()) throw Error(std::string("\"") + key + "\" must be an array");
        std::vector<double> v;
        for (const auto& e : a) {
            if (!e.is_number()) throw Error(std::string("\"") + key + "\" must hold numbers");
            v.push_back(e.get<double>());
        }
        return v;
    };
    std::vector<double> xs = vec("xs"), ys = vec("ys");
    const json& c = field(j, "cells");
    if (!c.is_array()) throw Error("\"cells\" must be an array of rows");
    std::vector<std::vector<double>> cells;
    for (const auto& row : c) {
        if (!row.is_array()) throw Error("\"cells\" must be an array of rows");
        std::vector<double> r;
        for (const auto& e : row) {
            if (!e.is_number()) throw Error("cell densities must be numbers");
            r.push_back(e.get<double>());
        }
        cells.push_back(r);
    }
    return GridDensity(xs, ys, cells);
}

const char* wall_names[4] = {"left", "right", "bottom", "top"};
const unsigned wall_bits[4] = {kLeft, kRight, kBottom, kTop};

json cake_json(const CakeDomain& c) {
    json j;
    switch (c.base) {
    case CakeDomain::Base::Rect: {
        j["kind"] = "rect";
        j["rect"] = rect_json(c.rect);
        json w = json::array();
        for (int k = 0; k < 4; ++k)
            if (c.walls & wall_bits[k]) w.push_back(wall_names[k]);
        j["walls"] = w;
        break;
    }
    case CakeDomain::Base::Staircase: {
        j["kind"] = "staircase";
        json cs = json::array();
        for (const auto& p : c.stairs.corners) cs.push_back(point_json(p));
        j["corners"] = cs;
        break;
    }
    case CakeDomain::Base::Grid: {
        j["kind"] = "grid";
        json cs = json::array();
        for (const auto& r : c.cells) cs.push_back(rect_json(r));
        j["cells"] = cs;
        break;
    }
    case CakeDomain::Base::Polygon: {
        j["kind"] = "polygon";
        json ps = json::array();
        for (const auto& p : c.polygon) ps.push_back(point_json(p));
        j["points"] = ps;
        break;
    }
    }
    return j;
}

unsigned walls_of(const json& j) {
    if (j.is_number_integer()) {
        int w = j.get<int>();
        // a count: 4 all, 3 open right, 2 left and bottom, 1 bottom, 0 none
        switch (w) {
        case 4: return kAllWalls;
        case 3: return kLeft | kBottom | kTop;
        case 2: return kLeft | kBottom;
        case 1: return kBottom;
        case 0: return 0;
        default: throw Error("wall count must be 0..4");
        }
    }
    if (!j.is_array()) throw Error("\"walls\" must be a list of sides or a count");
    unsigned w = 0;
    for (const auto& e : j) {
        std::string s = e.is_string() ? e.get<std::string>() : "";
        bool found = false;
        for (int k = 0; k < 4; ++k)
            if (s == wall_names[k]) {
                w |= wall_bits[k];
                found = true;
            }
        if (!found) throw Error("unknown wall: " + e.dump());
    }
    return w;
}

CakeDomain cake_of(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    CakeDomain c;
    if (kind == "rect" || kind == "rectangle") {
        c = CakeDomain::rectangle(rect_of(field(j, "rect")), j.contains("walls") ? walls_of(j["walls"]) : kAllWalls);
    } else if (kind == "square") {
        double s = j.contains("side") ? get_num(j["side"], "side") : 1.0;
        Point o = j.contains("origin") ? point_of(j["origin"]) : Point{0, 0};
        if (!(s > 0) || !std::isfinite(s)) throw Error("square side must be positive");
        c = CakeDomain::rectangle({o.x, o.y, o.x + s, o.y + s}, j.contains("walls") ? walls_of(j["walls"]) : kAllWalls);
    } else if (kind == "quarter-plane") {
        c = CakeDomain::quarter_plane();
    } else if (kind == "half-plane") {
        c = CakeDomain::half_plane();
    } else if (kind == "plane") {
        c = CakeDomain::plane();
    } else if (kind == "staircase") {
        Staircase s;
        for (const auto& p : field(j, "corners")) s.corners.push_back(point_of(p));
        s.validate();
        c = CakeDomain::staircase(s);
    } else if (kind == "grid") {
        std::vector<Rect> cells;
        for (const auto& r : field(j, "cells")) cells.push_back(rect_of(r));
        if (cells.empty()) throw Error("grid cake needs cells");
        c = CakeDomain::grid(cells);
    } else if (kind == "rait") {
        Point o = j.contains("corner") ? point_of(j["corner"]) : Point{0, 0};
        c = CakeDomain::rait(o, get_num(field(j, "leg"), "leg"));
    } else if (kind == "polygon") {
        c.base = CakeDomain::Base::Polygon;
        for (const auto& p : field(j, "points")) c.polygon.push_back(point_of(p));
        if (c.polygon.size() < 3) throw Error("polygon cake needs three points");
    } else {
        throw Error("unknown cake kind: " + kind);
    }
    return c;
}

json piece_json(const Piece& p) {
    json j{{"kind", kind_name(p.kind)}};
    switch (p.kind) {
    case PieceKind::Ffdp: {
        json ps = json::array();
        for (const auto& q : p.poly) ps.push_back(point_json(q));
        j["points"] = ps;
        break;
    }
    case PieceKind::Staircase: {
        json cs = json::array();
        for (const auto& q : p.stairs.corners) cs.push_back(point_json(q));
        j["corners"] = cs;
        break;
    }
    default: {
        json rs = json::array();
        for (const auto& r : p.rects) rs.push_back(rect_json(r));
        j["rects"] = rs;
    }
    }
    return j;
}

Piece piece_of(const json& j) {
    Piece p;
    p.kind = kind_from_name(field(j, "kind").get<std::string>());
    switch (p.kind) {
    case PieceKind::Ffdp:
        for (const auto& q : field(j, "points")) p.poly.push_back(point_of(q));
        break;
    case PieceKind::Staircase:
        for (const auto& q : field(j, "corners")) p.stairs.corners.push_back(point_of(q));
        break;
    default: {
        for (const auto& r : field(j, "rects")) p.rects.push_back(rect_of(r));
        size_t need = p.kind == PieceKind::LShape || p.kind == PieceKind::SquarePair ? 2 : 1;
        if (p.rects.size() != need) throw Error(std::string("wrong rectangle count for ") + kind_name(p.kind));
    }
    }
    return p;
}

json agents_json(const std::vector<Agent>& agents) {
    json a = json::array();
    for (const auto& ag : agents) a.push_back({{"id", ag.id}, {"density", density_json(ag.density)}});
    return a;
}

} // namespace

std::string density_to_json(const GridDensity& d) {
    json j = density_json(d);
    j["schema"] = kSchema;
    return j.dump(1);
}

GridDensity density_from_json(const std::string& text) {
    json j = parse(text);
    check_schema(j);
    if (j.is_object() && j.contains("density")) return density_of(j["density"]);
    return density_of(j);
}

std::string cake_to_json(const CakeDomain& cake) {
    json j = cake_json(cake);
    j["schema"] = kSchema;
    return j.dump(1);
}

CakeDomain cake_from_json(const std::string& text) {
    json j = parse(text);
    check_schema(j);
    return cake_of(j);
}

std::string piece_to_json(const Piece& p) { return piece_json(p).dump(); }

Piece piece_from_json(const std::string& text) { return piece_of(parse(text)); }

std::string report_to_json(const DivisionReport& rep, const CakeDomain& cake) {
    json alloc = json::array();
    for (const auto& a : rep.allocation)
        alloc.push_back({{"agent", a.agent}, {"piece", piece_json(a.piece)}, {"value", num(a.value)},
                         {"fraction", num(a.fraction)}});
    json qs = json::array();
    for (const auto& q : rep.queries) {
        json args = json::array(), resp = json::array();
        for (double x : q.args) args.push_back(num(x));
        for (double x : q.response) resp.push_back(num(x));
        qs.push_back({{"kind", q.kind}, {"label", q.label}, {"agent", q.agent}, {"args", args}, {"response", resp}});
    }
    json j{{"schema", kSchema},
           {"procedure", rep.procedure},
           {"n", rep.n},
           {"bound", {{"num", rep.bound.num}, {"den", rep.bound.den}}},
           {"E", rep.E},
           {"F", rep.F},
           {"relative", rep.relative},
           {"min_fraction", num(rep.allocation.empty() ? 0 : rep.min_fraction())},
           {"cake", cake_json(cake)},
           {"allocation", alloc},
           {"notes", rep.notes},
           {"queries", qs}};
    if (rep.procedure == "ratio") j["ratio_r"] = rep.ratio_r;
    if (rep.procedure == "greedy-compact" || rep.procedure == "compact-same") j["max_removals"] = rep.max_removals;
    if (!rep.case_b.empty()) {
        json cb = json::array();
        for (const auto& c : rep.case_b)
            cb.push_back({{"n", c.n},
                          {"width", c.width},
                          {"hawk_sum_low", c.hawk_sum_low},
                          {"hawk_sum_high", c.hawk_sum_high},
                          {"count_before", c.count_before},
                          {"removed", rect_json(c.removed)}});
        j["case_b"] = cb;
    }
    return j.dump(1);
}

DivisionReport report_from_json(const std::string& text, CakeDomain* cake) {
    json j = parse(text);
    check_schema(j);
    DivisionReport rep;
    try {
        rep.procedure = field(j, "procedure").get<std::string>();
        rep.n = field(j, "n").get<int>();
        const json& b = field(j, "bound");
        rep.bound = {get_num(field(b, "num"), "bound"), get_num(field(b, "den"), "bound")};
        rep.E = j.value("E", 0.0);
        rep.F = j.value("F", 0.0);
        rep.relative = j.value("relative", false);
        for (const auto& a : field(j, "allocation"))
            rep.allocation.push_back({field(a, "agent").get<int>(), piece_of(field(a, "piece")),
                                      get_num(field(a, "value"), "value"), get_num(field(a, "fraction"), "fraction")});
        if (j.contains("notes"))
            for (const auto& s : j["notes"]) rep.notes.push_back(s.get<std::string>());
        if (j.contains("queries"))
            for (const auto& q : j["queries"]) {
                QueryRecord r{field(q, "kind").get<std::string>(), q.value("label", ""), q.value("agent", 0), {}, {}};
                for (const auto& x : q.value("args", json::array())) r.args.push_back(get_num(x, "args"));
                for (const auto& x : q.value("response", json::array())) r.response.push_back(get_num(x, "response"));
                rep.queries.push_back(r);
            }
        rep.ratio_r = j.value("ratio_r", 1.0);
        rep.max_removals = j.value("max_removals", 0);
        if (cake) *cake = cake_of(field(j, "cake"));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    return rep;
}

std::string instance_to_json(const Instance& in) {
    json j{{"schema", kSchema}, {"cake", cake_json(in.cake)}, {"agents", agents_json(in.agents)},
           {"procedure", in.procedure}};
    return j.dump(1);
}

namespace {

std::vector<Agent> agents_of(const json& list, int first_id) {
    std::vector<Agent> out;
    int next = first_id;
    for (const auto& a : list) {
        int id = a.is_object() && a.contains("id") ? a["id"].get<int>() : next;
        next = id + 1;
        out.push_back({id, density_of(a.is_object() && a.contains("density") ? a["density"] : a)});
    }
    return out;
}

} // namespace

std::vector<Agent> agents_from_json(const std::string& text, int first_id) {
    json j = parse(text);
    check_schema(j);
    try {
        if (j.is_array()) return agents_of(j, first_id);
        if (j.is_object() && j.contains("agents")) return agents_of(j["agents"], first_id);
        return agents_of(json::array({j}), first_id);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed agents: ") + e.what());
    }
}

Instance instance_from_json(const std::string& text) {
    json j = parse(text);
    check_schema(j);
    Instance in;
    try {
        in.cake = cake_of(field(j, "cake"));
        in.agents = agents_of(field(j, "agents"), 1);
        in.procedure = j.value("procedure", std::string("auto"));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed instance: ") + e.what());
    }
    if (in.agents.empty()) throw Error("instance needs at least one agent");
    return in;
}

std::string pools_to_json(const PoolArrangement& a) {
    json pools = json::array();
    for (size_t k = 0; k < a.pools.size(); ++k)
        pools.push_back({{"rect", rect_json(a.pools[k])}, {"level", a.level[k]}});
    json j = density_json(a.density);
    j["schema"] = kSchema;
    j["arrangement"] = {{"kind", pool_kind_name(a.kind)}, {"n", a.n},       {"eps", a.eps},
                        {"delta", a.delta},                {"pools", pools}, {"pool_value", a.pool_value},
                        {"cake", cake_json(a.cake)}};
    return j.dump(1);
}

// ---------------- SVG ----------------

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::fabs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

std::string colour(int k) {
    static const char* base[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                                 "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    if (k < 10) return base[k];
    char buf[32];
    std::snprintf(buf, sizeof buf, "hsl(%d,55%%,60%%)", (k * 137) % 360);
    return buf;
}

struct Canvas {
    Rect view;
    double scale = 1;
    double margin = 20;
    std::ostringstream out;

    double X(double x) const { return margin + (std::clamp(x, view.x0, view.x1) - view.x0) * scale; }
    double Y(double y) const { return margin + (view.y1 - std::clamp(y, view.y0, view.y1)) * scale; }

    void rect(const Rect& r, const std::string& fill) {
        Rect c = intersect(r, view);
        if (!(c.x1 > c.x0) || !(c.y1 > c.y0)) return;
        out << "<rect x=\"" << fmt(X(c.x0)) << "\" y=\"" << fmt(Y(c.y1)) << "\" width=\"" << fmt((c.x1 - c.x0) * scale)
            << "\" height=\"" << fmt((c.y1 - c.y0) * scale) << "\" fill=\"" << fill
            << "\" fill-opacity=\"0.6\" stroke=\"" << fill << "\"/>\n";
    }
    void polygon(const std::vector<Point>& ps, const std::string& fill, bool outline) {
        out << "<polygon points=\"";
        for (size_t k = 0; k < ps.size(); ++k) out << (k ? " " : "") << fmt(X(ps[k].x)) << "," << fmt(Y(ps[k].y));
        if (outline) out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        else out << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"" << fill << "\"/>\n";
    }
    void line(double x0, double y0, double x1, double y1, bool wall) {
        out << "<line x1=\"" << fmt(X(x0)) << "\" y1=\"" << fmt(Y(y0)) << "\" x2=\"" << fmt(X(x1)) << "\" y2=\""
            << fmt(Y(y1)) << "\" stroke=\"black\" stroke-width=\"2\"";
        if (!wall) out << " stroke-dasharray=\"2,4\"";
        out << "/>\n";
    }
};

void extend(Rect& b, double x, double y) {
    if (std::isfinite(x)) {
        b.x0 = std::min(b.x0, x);
        b.x1 = std::max(b.x1, x);
    }
    if (std::isfinite(y)) {
        b.y0 = std::min(b.y0, y);
        b.y1 = std::max(b.y1, y);
    }
}

Rect drawing_box(const DivisionReport& rep, const CakeDomain& cake) {
    Rect b{kInf, kInf, -kInf, -kInf};
    auto add_rect = [&](const Rect& r) {
        extend(b, r.x0, r.y0);
        extend(b, r.x1, r.y1);
    };
    switch (cake.base) {
    case CakeDomain::Base::Rect: add_rect(cake.rect); break;
    case CakeDomain::Base::Staircase:
        for (const auto& p : cake.stairs.corners) extend(b, p.x, p.y);
        break;
    case CakeDomain::Base::Grid:
        for (const auto& r : cake.cells) add_rect(r);
        break;
    case CakeDomain::Base::Polygon:
        for (const auto& p : cake.polygon) extend(b, p.x, p.y);
        break;
    }
    for (const auto& a : rep.allocation) {
        for (const auto& r : a.piece.rects) add_rect(r);
        for (const auto& p : a.piece.poly) extend(b, p.x, p.y);
        for (const auto& p : a.piece.stairs.corners) extend(b, p.x, p.y);
    }
    if (!(b.x1 >= b.x0)) b.x0 = 0, b.x1 = 1;
    if (!(b.y1 >= b.y0)) b.y0 = 0, b.y1 = 1;
    double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-9});
    // room past open sides so unbounded parts show
    const Rect a = cake.base == CakeDomain::Base::Rect ? cake.allowed_rect() : cake.bbox();
    double pad = 0.15 * span;
    if (!std::isfinite(a.x0)) b.x0 -= pad;
    if (!std::isfinite(a.x1)) b.x1 += pad;
    if (!std::isfinite(a.y0)) b.y0 -= pad;
    if (!std::isfinite(a.y1)) b.y1 += pad;
    if (b.x1 - b.x0 < 1e-12) b.x1 = b.x0 + span;
    if (b.y1 - b.y0 < 1e-12) b.y1 = b.y0 + span;
    return b;
}

} // namespace

std::string render_svg(const DivisionReport& rep, const CakeDomain& cake) {
    Canvas c;
    c.view = drawing_box(rep, cake);
    const double size = 480;
    c.scale = size / std::max(c.view.width(), c.view.height());
    const double w = c.view.width() * c.scale + 2 * c.margin;
    const double h = c.view.height() * c.scale + 2 * c.margin;
    const double legend_h = 18.0 * static_cast<double>(rep.allocation.size()) + 10;
    c.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h + legend_h)
          << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h + legend_h) << "\">\n"
          << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h + legend_h)
          << "\" fill=\"white\"/>\n";

    for (size_t k = 0; k < rep.allocation.size(); ++k) {
        const Piece& p = rep.allocation[k].piece;
        std::string col = colour(static_cast<int>(k));
        if (p.kind == PieceKind::Ffdp) c.polygon(p.poly, col, false);
        else if (p.kind == PieceKind::SquarePair) {
            c.rect(p.rects[0], col);
            c.rect(p.rects[1], col);
        } else {
            for (const auto& r : p.decompose()) c.rect(r, col);
        }
    }

    const Rect& v = c.view;
    switch (cake.base) {
    case CakeDomain::Base::Rect: {
        const Rect& r = cake.rect;
        if (std::isfinite(r.x0)) c.line(r.x0, r.y0, r.x0, r.y1, cake.walls & kLeft);
        if (std::isfinite(r.x1)) c.line(r.x1, r.y0, r.x1, r.y1, cake.walls & kRight);
        if (std::isfinite(r.y0)) c.line(r.x0, r.y0, r.x1, r.y0, cake.walls & kBottom);
        if (std::isfinite(r.y1)) c.line(r.x0, r.y1, r.x1, r.y1, cake.walls & kTop);
        break;
    }
    case CakeDomain::Base::Staircase: {
        const auto& cs = cake.stairs.corners;
        c.line(cs.front().x, v.y1, cs.front().x, cs.front().y, true);
        for (size_t k = 0; k < cs.size(); ++k) {
            double next_x = k + 1 < cs.size() ? cs[k + 1].x : v.x1;
            c.line(cs[k].x, cs[k].y, next_x, cs[k].y, true);
            if (k + 1 < cs.size()) c.line(next_x, cs[k].y, next_x, cs[k + 1].y, true);
        }
        break;
    }
    case CakeDomain::Base::Grid: {
        // outer edges of the union of cells
        auto covered = [&](double x, double y) {
            for (const auto& q : cake.cells)
                if (x > q.x0 && x < q.x1 && y > q.y0 && y < q.y1) return true;
            return false;
        };
        for (const auto& q : cake.cells) {
            double e = 1e-7 * std::max(1.0, std::max(q.width(), q.height()));
            double mx = (q.x0 + q.x1) / 2, my = (q.y0 + q.y1) / 2;
            if (!covered(q.x0 - e, my)) c.line(q.x0, q.y0, q.x0, q.y1, true);
            if (!covered(q.x1 + e, my)) c.line(q.x1, q.y0, q.x1, q.y1, true);
            if (!covered(mx, q.y0 - e)) c.line(q.x0, q.y0, q.x1, q.y0, true);
            if (!covered(mx, q.y1 + e)) c.line(q.x0, q.y1, q.x1, q.y1, true);
        }
        break;
    }
    case CakeDomain::Base::Polygon: c.polygon(cake.polygon, "none", true); break;
    }

    double y = h + 4;
    for (size_t k = 0; k < rep.allocation.size(); ++k) {
        const auto& a = rep.allocation[k];
        char buf[96];
        std::snprintf(buf, sizeof buf, "agent %d: %.4f", a.agent, a.fraction);
        c.out << "<rect x=\"" << fmt(c.margin) << "\" y=\"" << fmt(y) << "\" width=\"12\" height=\"12\" fill=\""
              << colour(static_cast<int>(k)) << "\"/>\n"
              << "<text x=\"" << fmt(c.margin + 18) << "\" y=\"" << fmt(y + 11)
              << "\" font-family=\"monospace\" font-size=\"12\">" << buf << "</text>\n";
        y += 18;
    }
    c.out << "</svg>\n";
    return c.out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot write " + path);
        f << text;
        if (!f) throw Error("cannot write " + path);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot write " + path);
    }
}

} // namespace fsq
