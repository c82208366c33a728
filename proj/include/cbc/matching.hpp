#pragma once

// Batch retrieval: assign each requested item (column) to a distinct
// server (row) holding it, via Hopcroft-Karp maximum bipartite matching.
// When the batch is not fully assignable the alternating-reachability cut
// yields a Hall violator.

#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <variant>
#include <vector>

#include "cbc/matrix.hpp"

namespace cbc {

struct Assignment {
    std::map<int, int> pairs;  // item (column) -> server (row)
    bool complete = false;
};

namespace detail {

// Hopcroft-Karp over items[0..L) vs the rows of mat.  Adjacency is scanned
// in ascending row order and left vertices in input order, so the result is
// deterministic.  Returns match_l (item pos -> row, or -1).
inline std::vector<int> hopcroft_karp(const IncidenceMatrix& mat,
                                      const std::vector<int>& items,
                                      std::vector<int>* match_r_out = nullptr) {
    const int L = static_cast<int>(items.size());
    const int R = mat.m;
    std::vector<std::vector<int>> adj(L);
    for (int i = 0; i < L; ++i) adj[i] = mat.columns[items[i]].ones();

    std::vector<int> match_l(L, -1), match_r(R, -1);
    const int INF = std::numeric_limits<int>::max();
    std::vector<int> dist(L);

    auto bfs = [&]() {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < L; ++u) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = INF;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == INF) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = INF;
        return false;
    };

    while (bfs()) {
        for (int u = 0; u < L; ++u)
            if (match_l[u] == -1) dfs(u);
    }
    if (match_r_out) *match_r_out = std::move(match_r);
    return match_l;
}

}  // namespace detail

inline Assignment max_matching(const IncidenceMatrix& mat, const std::vector<int>& items) {
    std::vector<int> match_l = detail::hopcroft_karp(mat, items);
    Assignment a;
    a.complete = true;
    for (size_t i = 0; i < items.size(); ++i) {
        if (match_l[i] == -1)
            a.complete = false;
        else
            a.pairs[items[i]] = match_l[i];
    }
    return a;
}

// Complete assignment, or the Hall violator reachable from the unmatched
// items by alternating paths (its neighborhood is smaller than itself).
inline std::variant<Assignment, DeficiencyWitness> retrieve_batch(
    const IncidenceMatrix& mat, const std::vector<int>& items) {
    std::vector<int> match_r;
    std::vector<int> match_l = detail::hopcroft_karp(mat, items, &match_r);

    Assignment a;
    a.complete = true;
    for (size_t i = 0; i < items.size(); ++i) {
        if (match_l[i] == -1)
            a.complete = false;
        else
            a.pairs[items[i]] = match_l[i];
    }
    if (a.complete) return a;

    const int L = static_cast<int>(items.size());
    std::vector<bool> vis_l(L, false), vis_r(mat.m, false);
    std::queue<int> q;
    for (int u = 0; u < L; ++u)
        if (match_l[u] == -1) {
            vis_l[u] = true;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : mat.columns[items[u]].ones()) {
            if (vis_r[v]) continue;
            vis_r[v] = true;
            int w = match_r[v];
            if (w != -1 && !vis_l[w]) {
                vis_l[w] = true;
                q.push(w);
            }
        }
    }
    DeficiencyWitness wit;
    for (int u = 0; u < L; ++u)
        if (vis_l[u]) wit.column_set.push_back(items[u]);
    for (int v = 0; v < mat.m; ++v)
        if (vis_r[v]) wit.neighborhood.push_back(v);
    return wit;
}

}  // namespace cbc
