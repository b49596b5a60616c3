#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace fsq::detail {

namespace search_impl {

inline bool augment(int k, const std::vector<std::vector<int>>& adj, std::vector<int>& slot_owner,
                    std::vector<char>& seen) {
    for (int s : adj[k]) {
        if (seen[s]) continue;
        seen[s] = 1;
        if (slot_owner[s] < 0 || augment(slot_owner[s], adj, slot_owner, seen)) {
            slot_owner[s] = k;
            return true;
        }
    }
    return false;
}

} // namespace search_impl

template <class Ok>
std::vector<std::vector<int>> search_rooms(int n, const std::vector<int>& max_size, Ok ok) {
    const int m = static_cast<int>(max_size.size());
    std::vector<int> sizes(m, 0);
    std::vector<std::vector<int>> found;
    std::function<bool(int, int)> rec = [&](int j, int left) -> bool {
        if (j == m - 1) {
            if (left > max_size[j]) return false;
            sizes[j] = left;
            // slots: one per seat; agent k may take a seat of room j if ok(k, j, size)
            std::vector<int> room_of;
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < sizes[r]; ++s) room_of.push_back(r);
            std::vector<std::vector<int>> adj(n);
            for (int k = 0; k < n; ++k)
                for (int s = 0; s < n; ++s)
                    if (ok(k, room_of[s], sizes[room_of[s]])) adj[k].push_back(s);
            std::vector<int> owner(n, -1);
            for (int k = 0; k < n; ++k) {
                std::vector<char> seen(n, 0);
                if (!search_impl::augment(k, adj, owner, seen)) return false;
            }
            found.assign(m, {});
            for (int s = 0; s < n; ++s) found[room_of[s]].push_back(owner[s]);
            for (auto& g : found) std::sort(g.begin(), g.end());
            return true;
        }
        for (int g = 0; g <= std::min(left, max_size[j]); ++g) {
            sizes[j] = g;
            if (rec(j + 1, left - g)) return true;
        }
        return false;
    };
    if (m > 0 && rec(0, n)) return found;
    return {};
}

} // namespace fsq::detail
