/* C interface to the fairsquare library.
 *
 * Objects are opaque handles released with their *_free function. Calls
 * return an fsq_status; on failure fsq_last_error() describes the problem
 * (per thread, valid until the next failing call). Strings handed out by the
 * library are released with fsq_string_free. JSON documents use the schema
 * "fairsquare/1".
 */
#ifndef FAIRSQUARE_H
#define FAIRSQUARE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FSQ_API __declspec(dllexport)
#else
#define FSQ_API __attribute__((visibility("default")))
#endif

typedef enum fsq_status {
    FSQ_OK = 0,
    FSQ_ERR_INVALID = 1,   /* bad argument, malformed input, unmet precondition */
    FSQ_ERR_GUARANTEE = 2, /* an allocation failed its checks */
    FSQ_ERR_INTERNAL = 3,
    FSQ_ERR_IO = 4
} fsq_status;

typedef struct fsq_instance fsq_instance;
typedef struct fsq_report fsq_report;
typedef struct fsq_pools fsq_pools;

FSQ_API const char* fsq_version(void);
FSQ_API const char* fsq_last_error(void);
FSQ_API void fsq_string_free(char* s);

/* Instances: a cake and agents with densities. */
FSQ_API fsq_status fsq_instance_from_json(const char* json, fsq_instance** out);
FSQ_API fsq_status fsq_instance_new(const char* cake_json, fsq_instance** out);
FSQ_API fsq_status fsq_instance_add_agent(fsq_instance* in, int id, const char* density_json);
/* Appends agents from a density document, a list of them, or {"agents": [...]}. */
FSQ_API fsq_status fsq_instance_add_agents(fsq_instance* in, const char* json);
FSQ_API int fsq_instance_agent_count(const fsq_instance* in);
FSQ_API fsq_status fsq_instance_to_json(const fsq_instance* in, char** out);
FSQ_API void fsq_instance_free(fsq_instance* in);

/* Newline-separated procedure names. */
FSQ_API fsq_status fsq_procedure_names(char** out);

/* Runs `procedure` ("auto" or NULL picks by wall count) with piece family
 * `pieces` ("squares", "fat-rects", "pairs", "ffdp"; NULL means the
 * procedure's own). FSQ_ERR_INVALID names the cake row when they do not fit. */
FSQ_API fsq_status fsq_divide(const fsq_instance* in, const char* procedure, const char* pieces,
                              fsq_report** out);

FSQ_API fsq_status fsq_report_from_json(const char* json, fsq_report** out);
FSQ_API fsq_status fsq_report_to_json(const fsq_report* r, char** out);
FSQ_API fsq_status fsq_report_svg(const fsq_report* r, char** out);
FSQ_API int fsq_report_agent_count(const fsq_report* r);
FSQ_API double fsq_report_bound(const fsq_report* r);
FSQ_API double fsq_report_min_fraction(const fsq_report* r);
FSQ_API double fsq_report_fraction(const fsq_report* r, int k);
FSQ_API int fsq_report_agent_id(const fsq_report* r, int k);
/* Re-checks disjointness, shapes and walls; with `agents` also recomputes
 * each value. FSQ_ERR_GUARANTEE on failure; `problems` (optional) receives a
 * newline-separated list. */
FSQ_API fsq_status fsq_report_verify(const fsq_report* r, const fsq_instance* agents, char** problems);
FSQ_API void fsq_report_free(fsq_report* r);

/* Pool arrangements: kind is "quarter-plane", "square" or "half-plane". */
FSQ_API fsq_status fsq_pools_new(const char* kind, int n, double eps, fsq_pools** out);
FSQ_API int fsq_pools_count(const fsq_pools* p);
FSQ_API double fsq_pools_bound(const fsq_pools* p);
FSQ_API fsq_status fsq_pools_to_json(const fsq_pools* p, char** out);
/* n agents sharing the pool density on the arrangement's cake. */
FSQ_API fsq_status fsq_pools_instance(const fsq_pools* p, int n, fsq_instance** out);
FSQ_API fsq_status fsq_pools_probe(const fsq_pools* p, int n, int trials, uint64_t seed, double* best);
FSQ_API void fsq_pools_free(fsq_pools* p);

/* Best smallest share found by the randomized probe. */
FSQ_API fsq_status fsq_probe(const char* density_json, const char* cake_json, int n, int trials, uint64_t seed,
                             double* best);

#ifdef __cplusplus
}
#endif

#endif
