#include "fairsquare/rpa.hpp"

#include <algorithm>
#include <numeric>

#include "fairsquare/geometry.hpp"

namespace fsq {

RoomAssignment room_partition_unchecked(const PartnerMatrix& pm, const std::vector<int>& order) {
    const int n = static_cast<int>(pm.size());
    const int m = n ? static_cast<int>(pm[0].size()) : 0;
    RoomAssignment ra;
    ra.groups.assign(m, {});
    std::vector<int> left(n);
    std::iota(left.begin(), left.end(), 0);
    for (size_t k = 0; k < order.size() && !left.empty(); ++k) {
        const int j = order[k];
        if (k + 1 == order.size()) {
            ra.groups[j] = left;
            break;
        }
        std::stable_sort(left.begin(), left.end(),
                         [&](int a, int b) { return pm[a][j] > pm[b][j]; });
        auto& g = ra.groups[j];
        size_t taken = 0;
        while (taken < left.size() && pm[left[taken]][j] > static_cast<int>(g.size()))
            g.push_back(left[taken++]);
        left.erase(left.begin(), left.begin() + static_cast<long>(taken));
        std::sort(left.begin(), left.end());
    }
    for (auto& g : ra.groups) std::sort(g.begin(), g.end());
    return ra;
}

RoomAssignment room_partition(const PartnerMatrix& pm) {
    const int n = static_cast<int>(pm.size());
    if (n == 0) throw Error("infeasible partner matrix");
    const int m = static_cast<int>(pm[0].size());
    if (m == 0) throw Error("infeasible partner matrix");
    for (const auto& row : pm) {
        if (static_cast<int>(row.size()) != m) throw Error("infeasible partner matrix");
        long sum = 0;
        for (int p : row) {
            if (p < 0) throw Error("infeasible partner matrix");
            sum += p;
        }
        if (sum < n) throw Error("infeasible partner matrix");
    }
    std::vector<int> order(m);
    for (int j = 0; j < m; ++j) order[j] = m - 1 - j;
    return room_partition_unchecked(pm, order);
}

bool assignment_valid(const PartnerMatrix& pm, const RoomAssignment& ra) {
    std::vector<int> seen(pm.size(), 0);
    for (size_t j = 0; j < ra.groups.size(); ++j)
        for (int i : ra.groups[j]) {
            if (i < 0 || i >= static_cast<int>(pm.size())) return false;
            ++seen[i];
            if (pm[i][j] < static_cast<int>(ra.groups[j].size())) return false;
        }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

} // namespace fsq
