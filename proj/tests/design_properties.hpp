#pragma once

// Structural properties of transversal designs used by the proofs, checked
// exhaustively.  Shared between the unit and acceptance suites.

#include <set>
#include <vector>

#include "cbc/design.hpp"

namespace cbc_test {

inline std::set<int> block_set(const cbc::Design& d, int bi) {
    return {d.blocks[bi].begin(), d.blocks[bi].end()};
}

inline bool disjoint(const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
        if (b.count(x)) return false;
    return true;
}

// For classes P1, P2 and a block c of P1: at most one block of P2 is
// disjoint from c, i.e. covered by the remaining q-1 blocks of P1.
inline bool leave_one_out_cover_holds(const cbc::Design& d) {
    for (const auto& p1 : d.parallel_classes)
        for (const auto& p2 : d.parallel_classes) {
            if (&p1 == &p2) continue;
            for (int ci : p1) {
                auto c = block_set(d, ci);
                int covered = 0;
                for (int bi : p2)
                    covered += disjoint(block_set(d, bi), c) ? 1 : 0;
                if (covered > 1) return false;
            }
        }
    return true;
}

// TD(2,q): a 2(q-2)-point set covered by q-2 blocks from each of two
// classes is never covered by q-2 blocks of a third class.
inline bool no_third_class_cover_holds(const cbc::Design& d) {
    const int q = d.q;
    const int nc = static_cast<int>(d.parallel_classes.size());

    std::vector<std::vector<int>> picks;
    {
        std::vector<int> idx(q - 2);
        for (int i = 0; i < q - 2; ++i) idx[i] = i;
        while (true) {
            picks.push_back(idx);
            int i = q - 3;
            while (i >= 0 && idx[i] == q - (q - 2) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < q - 2; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    auto union_of = [&](const std::vector<int>& cls, const std::vector<int>& pick) {
        std::set<int> u;
        for (int i : pick)
            for (int p : d.blocks[cls[i]]) u.insert(p);
        return u;
    };
    auto covers = [&](int ci, const std::set<int>& target) {
        int inside = 0;
        std::set<int> u;
        for (int bi : d.parallel_classes[ci]) {
            auto b = block_set(d, bi);
            bool in = true;
            for (int p : b) in &= target.count(p) > 0;
            if (in) {
                ++inside;
                u.insert(b.begin(), b.end());
            }
        }
        return inside == q - 2 && u == target;
    };
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = c1 + 1; c2 < nc; ++c2)
            for (const auto& s1 : picks)
                for (const auto& s2 : picks) {
                    auto u1 = union_of(d.parallel_classes[c1], s1);
                    if (u1 != union_of(d.parallel_classes[c2], s2)) continue;
                    for (int c3 = 0; c3 < nc; ++c3) {
                        if (c3 == c1 || c3 == c2) continue;
                        if (covers(c3, u1)) return false;
                    }
                }
    return true;
}

// Any 2 blocks of one class and 2 of another intersect in at most 4 points.
inline bool two_plus_two_overlap_holds(const cbc::Design& d) {
    const int nc = static_cast<int>(d.parallel_classes.size());
    for (int c1 = 0; c1 < nc; ++c1)
        for (int c2 = c1 + 1; c2 < nc; ++c2)
            for (int a1 : d.parallel_classes[c1])
                for (int a2 : d.parallel_classes[c1]) {
                    if (a2 <= a1) continue;
                    auto sa = block_set(d, a1);
                    sa.insert(d.blocks[a2].begin(), d.blocks[a2].end());
                    for (int b1 : d.parallel_classes[c2])
                        for (int b2 : d.parallel_classes[c2]) {
                            if (b2 <= b1) continue;
                            auto sb = block_set(d, b1);
                            sb.insert(d.blocks[b2].begin(), d.blocks[b2].end());
                            int inter = 0;
                            for (int x : sa) inter += sb.count(x) ? 1 : 0;
                            if (inter > 4) return false;
                        }
                }
    return true;
}

// TD(q-1,q): for any 3 points in 3 distinct groups, at most three classes
// have q-2 blocks avoiding all of them.
inline bool triple_avoidance_holds(const cbc::Design& d) {
    const int q = d.q;
    const int ell = d.ell;
    for (int g1 = 0; g1 < ell; ++g1)
        for (int g2 = g1 + 1; g2 < ell; ++g2)
            for (int g3 = g2 + 1; g3 < ell; ++g3)
                for (int x1 : d.groups[g1])
                    for (int x2 : d.groups[g2])
                        for (int x3 : d.groups[g3]) {
                            int classes_with_q2 = 0;
                            for (const auto& pc : d.parallel_classes) {
                                int avoiding = 0;
                                for (int bi : pc) {
                                    bool hit = false;
                                    for (int p : d.blocks[bi])
                                        hit |= (p == x1 || p == x2 || p == x3);
                                    avoiding += hit ? 0 : 1;
                                }
                                classes_with_q2 += avoiding >= q - 2 ? 1 : 0;
                            }
                            if (classes_with_q2 > 3) return false;
                        }
    return true;
}

}  // namespace cbc_test
