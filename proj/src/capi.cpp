// extern "C" wrapper over the C++ core.

#include "fairsquare.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fairsquare/io.hpp"

struct fsq_instance {
    fsq::Instance in;
};

struct fsq_report {
    fsq::DivisionReport rep;
    fsq::CakeDomain cake;
};

struct fsq_pools {
    fsq::PoolArrangement a;
};

namespace {

thread_local std::string last_error;

fsq_status fail(fsq_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class F>
fsq_status guarded(F&& f) {
    try {
        return f();
    } catch (const fsq::Error& e) {
        std::string m = e.what();
        return fail(m.rfind("internal:", 0) == 0 ? FSQ_ERR_INTERNAL : FSQ_ERR_INVALID, m);
    } catch (const std::bad_alloc&) {
        return fail(FSQ_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FSQ_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

#define FSQ_NEED(p)                                                                                        \
    do {                                                                                                   \
        if (!(p)) return fail(FSQ_ERR_INVALID, "null argument: " #p);                                      \
    } while (0)

} // namespace

extern "C" {

const char* fsq_version(void) { return "1.0.0"; }
const char* fsq_last_error(void) { return last_error.c_str(); }
void fsq_string_free(char* s) { std::free(s); }

fsq_status fsq_instance_from_json(const char* json, fsq_instance** out) {
    FSQ_NEED(json);
    FSQ_NEED(out);
    return guarded([&] {
        *out = new fsq_instance{fsq::instance_from_json(json)};
        return FSQ_OK;
    });
}

fsq_status fsq_instance_new(const char* cake_json, fsq_instance** out) {
    FSQ_NEED(cake_json);
    FSQ_NEED(out);
    return guarded([&] {
        auto* h = new fsq_instance;
        try {
            h->in.cake = fsq::cake_from_json(cake_json);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return FSQ_OK;
    });
}

fsq_status fsq_instance_add_agent(fsq_instance* in, int id, const char* density_json) {
    FSQ_NEED(in);
    FSQ_NEED(density_json);
    return guarded([&] {
        in->in.agents.push_back({id, fsq::density_from_json(density_json)});
        return FSQ_OK;
    });
}

fsq_status fsq_instance_add_agents(fsq_instance* in, const char* json) {
    FSQ_NEED(in);
    FSQ_NEED(json);
    return guarded([&] {
        int next = 1;
        for (const auto& a : in->in.agents) next = std::max(next, a.id + 1);
        for (auto& a : fsq::agents_from_json(json, next)) in->in.agents.push_back(std::move(a));
        return FSQ_OK;
    });
}

int fsq_instance_agent_count(const fsq_instance* in) { return in ? static_cast<int>(in->in.agents.size()) : 0; }

fsq_status fsq_instance_to_json(const fsq_instance* in, char** out) {
    FSQ_NEED(in);
    FSQ_NEED(out);
    return guarded([&] {
        *out = dup(fsq::instance_to_json(in->in));
        return FSQ_OK;
    });
}

void fsq_instance_free(fsq_instance* in) { delete in; }

fsq_status fsq_procedure_names(char** out) {
    FSQ_NEED(out);
    return guarded([&] {
        std::string s;
        for (const auto& n : fsq::procedure_names()) s += n + "\n";
        *out = dup(s);
        return FSQ_OK;
    });
}

fsq_status fsq_divide(const fsq_instance* in, const char* procedure, const char* pieces, fsq_report** out) {
    FSQ_NEED(in);
    FSQ_NEED(out);
    return guarded([&] {
        std::string proc = procedure ? procedure : "auto";
        if (proc == "auto" && procedure == nullptr && in->in.procedure != "auto") proc = in->in.procedure;
        fsq::Family fam = pieces ? fsq::family_from_name(pieces) : fsq::Family::Squares;
        if (proc == "auto") proc = fsq::procedure_for(in->in.cake, fam);
        else if (!pieces) fam = fsq::procedure_family(proc);
        fsq::check_compatible(proc, in->in.cake, fam);
        auto* h = new fsq_report{fsq::run_procedure(proc, in->in.agents, in->in.cake), in->in.cake};
        *out = h;
        return FSQ_OK;
    });
}

fsq_status fsq_report_from_json(const char* json, fsq_report** out) {
    FSQ_NEED(json);
    FSQ_NEED(out);
    return guarded([&] {
        auto* h = new fsq_report;
        try {
            h->rep = fsq::report_from_json(json, &h->cake);
        } catch (...) {
            delete h;
            throw;
        }
        *out = h;
        return FSQ_OK;
    });
}

fsq_status fsq_report_to_json(const fsq_report* r, char** out) {
    FSQ_NEED(r);
    FSQ_NEED(out);
    return guarded([&] {
        *out = dup(fsq::report_to_json(r->rep, r->cake));
        return FSQ_OK;
    });
}

fsq_status fsq_report_svg(const fsq_report* r, char** out) {
    FSQ_NEED(r);
    FSQ_NEED(out);
    return guarded([&] {
        *out = dup(fsq::render_svg(r->rep, r->cake));
        return FSQ_OK;
    });
}

int fsq_report_agent_count(const fsq_report* r) { return r ? static_cast<int>(r->rep.allocation.size()) : 0; }
double fsq_report_bound(const fsq_report* r) { return r ? r->rep.bound.value() : 0; }
double fsq_report_min_fraction(const fsq_report* r) {
    return r && !r->rep.allocation.empty() ? r->rep.min_fraction() : 0;
}
double fsq_report_fraction(const fsq_report* r, int k) {
    if (!r || k < 0 || k >= static_cast<int>(r->rep.allocation.size())) return 0;
    return r->rep.allocation[static_cast<size_t>(k)].fraction;
}
int fsq_report_agent_id(const fsq_report* r, int k) {
    if (!r || k < 0 || k >= static_cast<int>(r->rep.allocation.size())) return 0;
    return r->rep.allocation[static_cast<size_t>(k)].agent;
}

fsq_status fsq_report_verify(const fsq_report* r, const fsq_instance* agents, char** problems) {
    FSQ_NEED(r);
    return guarded([&] {
        fsq::Verification v = fsq::verify_report(r->rep, r->cake, fsq::procedure_family(r->rep.procedure),
                                                 agents ? &agents->in.agents : nullptr);
        std::string s;
        for (const auto& p : v.problems) s += p + "\n";
        if (problems) *problems = dup(s);
        if (!v.ok()) return fail(FSQ_ERR_GUARANTEE, v.problems.empty() ? "verification failed" : v.problems[0]);
        return FSQ_OK;
    });
}

void fsq_report_free(fsq_report* r) { delete r; }

fsq_status fsq_pools_new(const char* kind, int n, double eps, fsq_pools** out) {
    FSQ_NEED(kind);
    FSQ_NEED(out);
    return guarded([&] {
        *out = new fsq_pools{fsq::gen_pools(fsq::parse_pool_kind(kind), n, eps)};
        return FSQ_OK;
    });
}

int fsq_pools_count(const fsq_pools* p) { return p ? static_cast<int>(p->a.pools.size()) : 0; }
double fsq_pools_bound(const fsq_pools* p) { return p ? p->a.bound() : 0; }

fsq_status fsq_pools_to_json(const fsq_pools* p, char** out) {
    FSQ_NEED(p);
    FSQ_NEED(out);
    return guarded([&] {
        *out = dup(fsq::pools_to_json(p->a));
        return FSQ_OK;
    });
}

fsq_status fsq_pools_instance(const fsq_pools* p, int n, fsq_instance** out) {
    FSQ_NEED(p);
    FSQ_NEED(out);
    if (n < 1) return fail(FSQ_ERR_INVALID, "need at least one agent");
    return guarded([&] {
        auto* h = new fsq_instance;
        h->in.cake = p->a.cake;
        for (int i = 0; i < n; ++i) h->in.agents.push_back({i + 1, p->a.density});
        *out = h;
        return FSQ_OK;
    });
}

fsq_status fsq_pools_probe(const fsq_pools* p, int n, int trials, uint64_t seed, double* best) {
    FSQ_NEED(p);
    FSQ_NEED(best);
    return guarded([&] {
        *best = fsq::probe_upper_bound(p->a.density, p->a.cake, n, trials, seed).best_min_fraction;
        return FSQ_OK;
    });
}

void fsq_pools_free(fsq_pools* p) { delete p; }

fsq_status fsq_probe(const char* density_json, const char* cake_json, int n, int trials, uint64_t seed,
                     double* best) {
    FSQ_NEED(density_json);
    FSQ_NEED(cake_json);
    FSQ_NEED(best);
    return guarded([&] {
        auto d = fsq::density_from_json(density_json);
        auto c = fsq::cake_from_json(cake_json);
        *best = fsq::probe_upper_bound(d, c, n, trials, seed).best_min_fraction;
        return FSQ_OK;
    });
}

} // extern "C"
