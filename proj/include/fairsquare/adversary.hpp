#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairsquare/geometry.hpp"
#include "fairsquare/measure.hpp"

namespace fsq {

enum class PoolKind { QuarterPlane, Square4Walls, HalfPlane };

PoolKind parse_pool_kind(const std::string& s);
std::string pool_kind_name(PoolKind k);

// Square pools of water in a desert; every pool holds the same value.
struct PoolArrangement {
    PoolKind kind = PoolKind::QuarterPlane;
    int n = 0;
    double eps = 0;
    double delta = 0;       // scale applied per nesting level
    std::vector<Rect> pools;
    std::vector<int> level; // nesting depth of each pool, 0 = outermost
    double pool_value = 0;
    CakeDomain cake;
    GridDensity density;

    // Upper bound on the smallest share any n-agent allocation can give.
    double bound() const { return pool_value; }
};

PoolArrangement gen_pools(PoolKind kind, int n, double eps = 0.01);

struct ProbeResult {
    double best_min_fraction = 0;
    std::vector<Rect> best_allocation;
    int trials = 0;
};

// Randomized greedy search for n disjoint squares in `cake` maximizing the
// smallest value under `d` (identical agents). Sample-based; never a proof.
ProbeResult probe_upper_bound(const GridDensity& d, const CakeDomain& cake, int n, int trials,
                              std::uint64_t seed);

} // namespace fsq
