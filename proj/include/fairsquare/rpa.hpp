#pragma once

#include <vector>

namespace fsq {

// P[i][j]: partner number of agent i for room j (agents and rooms 0-based).
using PartnerMatrix = std::vector<std::vector<int>>;

struct RoomAssignment {
    std::vector<std::vector<int>> groups; // groups[j]: agent indices, ascending
};

// Fills the last room first, taking agents by descending partner number
// (ties by ascending index) while P > |G|, then recurses on the rest.
RoomAssignment room_partition(const PartnerMatrix& pm);

// Same greedy without the row-sum precondition; rooms are filled in `order`.
RoomAssignment room_partition_unchecked(const PartnerMatrix& pm, const std::vector<int>& order);

bool assignment_valid(const PartnerMatrix& pm, const RoomAssignment& ra);

} // namespace fsq
