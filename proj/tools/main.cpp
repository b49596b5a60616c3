// fairsquare command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 2 invalid input or incompatible request, 3 a
// guarantee or verification check failed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairsquare.h"

namespace {

constexpr int kOk = 0, kInvalid = 2, kFailed = 3;

struct Exit {
    int code;
    std::string msg;
};

int code_for(fsq_status s) {
    return s == FSQ_ERR_GUARANTEE || s == FSQ_ERR_INTERNAL ? kFailed : kInvalid;
}

void check(fsq_status s, const std::string& what) {
    if (s != FSQ_OK) throw Exit{code_for(s), what + ": " + fsq_last_error()};
}

struct Str {
    char* p = nullptr;
    ~Str() { fsq_string_free(p); }
    std::string get() const { return p ? p : ""; }
};

template <class T, void (*F)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { F(p); }
};
using InstanceH = Handle<fsq_instance, fsq_instance_free>;
using ReportH = Handle<fsq_report, fsq_report_free>;
using PoolsH = Handle<fsq_pools, fsq_pools_free>;

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Exit{kInvalid, "cannot read " + path};
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!(f << text)) throw Exit{kInvalid, "cannot write " + path};
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Exit{kInvalid, "cannot write " + path};
    }
}

std::string walls_json(const std::string& w) {
    if (w.empty()) return "";
    if (w.find_first_not_of("0123456789") == std::string::npos) return ", \"walls\": " + w;
    std::string out = ", \"walls\": [";
    std::stringstream ss(w);
    std::string item;
    bool first = true;
    while (std::getline(ss, item, ',')) {
        out += (first ? "\"" : ", \"") + item + "\"";
        first = false;
    }
    return out + "]";
}

struct CakeOpts {
    std::string kind;
    double side = 1;
    std::string rect, walls, corners;
    double leg = 1;
};

// Cake document from flags, or the file itself when the kind names a file.
std::string cake_json(const CakeOpts& c) {
    const std::string& k = c.kind;
    if (k.size() > 5 && k.substr(k.size() - 5) == ".json") return slurp(k);
    std::ostringstream o;
    o.precision(17);
    if (k == "square") o << "{\"kind\": \"square\", \"side\": " << c.side << walls_json(c.walls) << "}";
    else if (k == "rect") o << "{\"kind\": \"rect\", \"rect\": [" << c.rect << "]" << walls_json(c.walls) << "}";
    else if (k == "quarter-plane" || k == "half-plane" || k == "plane") o << "{\"kind\": \"" << k << "\"}";
    else if (k == "rait") o << "{\"kind\": \"rait\", \"leg\": " << c.leg << "}";
    else if (k == "staircase") {
        o << "{\"kind\": \"staircase\", \"corners\": [";
        std::stringstream ss(c.corners);
        std::string pt;
        bool first = true;
        while (std::getline(ss, pt, ';')) {
            o << (first ? "[" : ", [") << pt << "]";
            first = false;
        }
        o << "]}";
    } else {
        throw Exit{kInvalid, "unknown cake kind: " + k};
    }
    return o.str();
}

void add_cake_flags(CLI::App* app, CakeOpts& c, bool required) {
    auto* opt = app->add_option("--cake", c.kind,
                                "square, rect, quarter-plane, half-plane, plane, staircase, rait, or a cake .json file");
    if (required) opt->required();
    app->add_option("--side", c.side, "side of a square cake");
    app->add_option("--rect", c.rect, "x0,y0,x1,y1 of a rect cake");
    app->add_option("--walls", c.walls, "wall count (4, 3, 2, 1, 0) or sides such as left,bottom");
    app->add_option("--corners", c.corners, "staircase corners as x,y;x,y;...");
    app->add_option("--leg", c.leg, "leg of a triangle cake");
}

void print_summary(const fsq_report* r) {
    std::fprintf(stderr, "bound %.6f  min fraction %.6f\n", fsq_report_bound(r), fsq_report_min_fraction(r));
    for (int k = 0; k < fsq_report_agent_count(r); ++k)
        std::fprintf(stderr, "  agent %d: %.6f\n", fsq_report_agent_id(r, k), fsq_report_fraction(r, k));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair division of land into squares and other fat pieces"};
    app.require_subcommand(1);
    std::string tol;
    app.add_option("--tol", tol, "tolerances, e.g. geo=1e-9,value=1e-9,guarantee=1e-6 (overrides FAIRSQUARE_TOL)");

    // divide
    auto* divide = app.add_subcommand("divide", "divide a cake among agents");
    CakeOpts dcake;
    std::string instance_path, procedure = "auto", pieces, out_path, svg_path;
    std::vector<std::string> agent_paths;
    add_cake_flags(divide, dcake, false);
    divide->add_option("--instance", instance_path, "instance .json with cake and agents");
    divide->add_option("--agents", agent_paths, "density files (one agent each, or a list)");
    divide->add_option("--procedure", procedure, "procedure name or auto");
    divide->add_option("--pieces", pieces, "squares, fat-rects, pairs or ffdp");
    divide->add_option("--out,-o", out_path, "report .json (default stdout)");
    divide->add_option("--svg", svg_path, "also render the allocation");

    // adversary
    auto* adv = app.add_subcommand("adversary", "pool arrangement behind an impossibility bound");
    std::string adv_kind;
    int adv_n = 2, adv_probe = 0;
    double adv_eps = 0.01;
    std::uint64_t seed = 1;
    std::string adv_out;
    adv->add_option("--cake", adv_kind, "quarter-plane, square or half-plane")->required();
    adv->add_option("-n", adv_n, "number of agents")->required();
    adv->add_option("--eps", adv_eps, "pool side, at most 0.01");
    adv->add_option("--probe", adv_probe, "probe trials (0 skips the probe)");
    adv->add_option("--seed", seed, "probe seed");
    adv->add_option("--out,-o", adv_out, "write the pool density .json");

    // probe
    auto* probe = app.add_subcommand("probe", "search for n disjoint squares beating a bound");
    CakeOpts pcake;
    std::string density_path;
    int probe_n = 2, trials = 1000;
    double claim = -1;
    add_cake_flags(probe, pcake, true);
    probe->add_option("--density", density_path, "density .json (identical agents)")->required();
    probe->add_option("-n", probe_n, "number of agents")->required();
    probe->add_option("--trials", trials, "random trials");
    probe->add_option("--seed", seed, "random seed");
    probe->add_option("--bound", claim, "fail with exit 3 if the probe beats this share");

    // render
    auto* render = app.add_subcommand("render", "draw a report as SVG");
    std::string report_path, render_out;
    render->add_option("--report", report_path, "report .json")->required();
    render->add_option("--out,-o", render_out, "SVG file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "re-check a report");
    std::string verify_report, verify_instance;
    std::vector<std::string> verify_agents;
    verify->add_option("--report", verify_report, "report .json")->required();
    verify->add_option("--instance", verify_instance, "instance .json to recompute values");
    verify->add_option("--agents", verify_agents, "density files to recompute values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }
    if (!tol.empty()) setenv("FAIRSQUARE_TOL", tol.c_str(), 1);

    try {
        if (*divide) {
            InstanceH in;
            if (!instance_path.empty()) {
                check(fsq_instance_from_json(slurp(instance_path).c_str(), &in.p), "instance");
            } else {
                if (dcake.kind.empty()) throw Exit{kInvalid, "divide needs --instance or --cake"};
                check(fsq_instance_new(cake_json(dcake).c_str(), &in.p), "cake");
            }
            for (const auto& a : agent_paths) check(fsq_instance_add_agents(in.p, slurp(a).c_str()), a);
            if (fsq_instance_agent_count(in.p) == 0) throw Exit{kInvalid, "no agents given"};
            ReportH rep;
            const char* proc = procedure == "auto" && !instance_path.empty() ? nullptr : procedure.c_str();
            check(fsq_divide(in.p, proc, pieces.empty() ? nullptr : pieces.c_str(), &rep.p), "divide");
            Str js;
            check(fsq_report_to_json(rep.p, &js.p), "report");
            emit(out_path, js.get());
            if (!svg_path.empty()) {
                Str svg;
                check(fsq_report_svg(rep.p, &svg.p), "svg");
                emit(svg_path, svg.get());
            }
            print_summary(rep.p);
            Str problems;
            if (fsq_report_verify(rep.p, in.p, &problems.p) != FSQ_OK) {
                std::cerr << "guarantee check failed:\n" << problems.get();
                return kFailed;
            }
            return kOk;
        }
        if (*adv) {
            PoolsH pools;
            check(fsq_pools_new(adv_kind.c_str(), adv_n, adv_eps, &pools.p), "adversary");
            std::printf("pools %d\n", fsq_pools_count(pools.p));
            std::printf("bound %.6f\n", fsq_pools_bound(pools.p));
            if (!adv_out.empty()) {
                Str js;
                check(fsq_pools_to_json(pools.p, &js.p), "pools");
                emit(adv_out, js.get());
            }
            if (adv_probe > 0) {
                double best = 0;
                check(fsq_pools_probe(pools.p, adv_n, adv_probe, seed, &best), "probe");
                std::printf("probe max %.6f\n", best);
                if (best > fsq_pools_bound(pools.p) + 1e-3) {
                    std::fprintf(stderr, "probe beat the bound\n");
                    return kFailed;
                }
            }
            return kOk;
        }
        if (*probe) {
            double best = 0;
            check(fsq_probe(slurp(density_path).c_str(), cake_json(pcake).c_str(), probe_n, trials, seed, &best),
                  "probe");
            std::printf("probe max %.6f\n", best);
            if (claim >= 0 && best > claim + 1e-3) return kFailed;
            return kOk;
        }
        if (*render) {
            ReportH rep;
            check(fsq_report_from_json(slurp(report_path).c_str(), &rep.p), "report");
            Str svg;
            check(fsq_report_svg(rep.p, &svg.p), "svg");
            emit(render_out, svg.get());
            return kOk;
        }
        if (*verify) {
            ReportH rep;
            check(fsq_report_from_json(slurp(verify_report).c_str(), &rep.p), "report");
            InstanceH in;
            if (!verify_instance.empty()) {
                check(fsq_instance_from_json(slurp(verify_instance).c_str(), &in.p), "instance");
            } else if (!verify_agents.empty()) {
                check(fsq_instance_new("{\"kind\": \"plane\"}", &in.p), "agents");
                for (const auto& a : verify_agents) check(fsq_instance_add_agents(in.p, slurp(a).c_str()), a);
            }
            Str problems;
            fsq_status s = fsq_report_verify(rep.p, in.p, &problems.p);
            if (s == FSQ_OK) {
                std::printf("ok\n");
                return kOk;
            }
            if (s != FSQ_ERR_GUARANTEE) throw Exit{kInvalid, std::string("verify: ") + fsq_last_error()};
            std::printf("failed\n%s", problems.get().c_str());
            return kFailed;
        }
    } catch (const Exit& e) {
        std::cerr << "error: " << e.msg << "\n";
        return e.code;
    }
    return kOk;
}
