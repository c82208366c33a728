#pragma once

// Resolvable transversal designs TD(ell, q) and affine planes A(q) over
// GF(q), with an exhaustive validator.

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cbc/errors.hpp"
#include "cbc/field.hpp"

namespace cbc {

struct Point {
    int group = 0;
    int element = 0;
};

struct Design {
    enum class Kind { transversal, affine };

    Kind kind = Kind::transversal;
    int ell = 0;  // block size
    int q = 0;    // group size (transversal) / order (affine)
    int num_points = 0;
    std::vector<std::vector<int>> groups;            // point ids; empty for affine
    std::vector<std::vector<int>> blocks;            // point ids, each of size ell
    std::vector<std::vector<int>> parallel_classes;  // block indices
};

// Canonical resolvable TD(ell, q): alpha_i are the first ell field element
// indices; for (a,b) in GF(q)^2 the block {(i, a*alpha_i + b)}.  Point id
// is group*q + element.  Parallel class a holds the q blocks with that a.
inline Design build_resolvable_td(int ell, int q) {
    FieldTable f = field_new(q);
    if (ell < 2 || ell > q) throw BlockSizeTooLarge(ell, q);

    Design d;
    d.kind = Design::Kind::transversal;
    d.ell = ell;
    d.q = q;
    d.num_points = ell * q;
    d.groups.resize(ell);
    for (int g = 0; g < ell; ++g)
        for (int x = 0; x < q; ++x) d.groups[g].push_back(g * q + x);

    d.parallel_classes.resize(q);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> block(ell);
            for (int i = 0; i < ell; ++i) {
                int y = f.add(f.mul(a, i), b);  // alpha_i = element index i
                block[i] = i * q + y;
            }
            d.parallel_classes[a].push_back(static_cast<int>(d.blocks.size()));
            d.blocks.push_back(std::move(block));
        }
    }
    return d;
}

// Canonical A(q): points are GF(q)^2 with id x*q + y.  Lines y = a*x + b
// ordered by (a,b), then the vertical lines x = c.  Class a holds slope-a
// lines; the last class is the vertical one.
inline Design build_affine_plane(int q) {
    FieldTable f = field_new(q);

    Design d;
    d.kind = Design::Kind::affine;
    d.ell = q;
    d.q = q;
    d.num_points = q * q;

    d.parallel_classes.resize(q + 1);
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> block(q);
            for (int x = 0; x < q; ++x) block[x] = x * q + f.add(f.mul(a, x), b);
            d.parallel_classes[a].push_back(static_cast<int>(d.blocks.size()));
            d.blocks.push_back(std::move(block));
        }
    }
    for (int c = 0; c < q; ++c) {
        std::vector<int> block(q);
        for (int y = 0; y < q; ++y) block[y] = c * q + y;
        d.parallel_classes[q].push_back(static_cast<int>(d.blocks.size()));
        d.blocks.push_back(std::move(block));
    }
    return d;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(const std::string& msg) {
        ok = false;
        violations.push_back(msg);
    }
};

inline ValidationReport validate_design(const Design& d) {
    ValidationReport rep;
    const int P = d.num_points;

    auto pair_count = [&](int u, int v) {
        int c = 0;
        for (const auto& b : d.blocks) {
            bool hu = std::find(b.begin(), b.end(), u) != b.end();
            bool hv = std::find(b.begin(), b.end(), v) != b.end();
            if (hu && hv) ++c;
        }
        return c;
    };

    if (d.kind == Design::Kind::transversal) {
        if (static_cast<int>(d.blocks.size()) != d.q * d.q)
            rep.fail("block count != q^2");
        if (static_cast<int>(d.groups.size()) != d.ell)
            rep.fail("group count != ell");
        std::vector<int> group_of(P, -1);
        for (size_t g = 0; g < d.groups.size(); ++g)
            for (int p : d.groups[g]) {
                if (group_of[p] != -1) rep.fail("point " + std::to_string(p) + " in two groups");
                group_of[p] = static_cast<int>(g);
            }
        for (int p = 0; p < P; ++p)
            if (group_of[p] == -1) rep.fail("point " + std::to_string(p) + " in no group");

        for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
            const auto& b = d.blocks[bi];
            if (static_cast<int>(b.size()) != d.ell)
                rep.fail("block " + std::to_string(bi) + " size != ell");
            std::vector<int> hits(d.groups.size(), 0);
            for (int p : b) ++hits[group_of[p]];
            for (size_t g = 0; g < hits.size(); ++g)
                if (hits[g] != 1)
                    rep.fail("block " + std::to_string(bi) + " meets group " +
                             std::to_string(g) + " " + std::to_string(hits[g]) + " times");
        }
        for (int u = 0; u < P; ++u)
            for (int v = u + 1; v < P; ++v) {
                if (group_of[u] == group_of[v]) continue;
                int c = pair_count(u, v);
                if (c != 1)
                    rep.fail("cross-group pair (" + std::to_string(u) + "," +
                             std::to_string(v) + ") in " + std::to_string(c) + " blocks");
            }
        for (int p = 0; p < P; ++p) {
            int c = 0;
            for (const auto& b : d.blocks)
                if (std::find(b.begin(), b.end(), p) != b.end()) ++c;
            if (c != d.q)
                rep.fail("point " + std::to_string(p) + " in " + std::to_string(c) +
                         " blocks, expected q");
        }
    } else {
        if (static_cast<int>(d.blocks.size()) != d.q * (d.q + 1))
            rep.fail("block count != q(q+1)");
        if (P != d.q * d.q) rep.fail("point count != q^2");
        for (size_t bi = 0; bi < d.blocks.size(); ++bi)
            if (static_cast<int>(d.blocks[bi].size()) != d.q)
                rep.fail("block " + std::to_string(bi) + " size != q");
        for (int u = 0; u < P; ++u)
            for (int v = u + 1; v < P; ++v) {
                int c = pair_count(u, v);
                if (c != 1)
                    rep.fail("pair (" + std::to_string(u) + "," + std::to_string(v) +
                             ") in " + std::to_string(c) + " blocks");
            }
        for (int p = 0; p < P; ++p) {
            int c = 0;
            for (const auto& b : d.blocks)
                if (std::find(b.begin(), b.end(), p) != b.end()) ++c;
            if (c != d.q + 1)
                rep.fail("point " + std::to_string(p) + " in " + std::to_string(c) +
                         " blocks, expected q+1");
        }
    }

    // Resolvability: classes partition the block set, and each class
    // partitions the point set.
    std::vector<int> block_class(d.blocks.size(), -1);
    for (size_t ci = 0; ci < d.parallel_classes.size(); ++ci) {
        std::vector<int> seen(P, 0);
        for (int bi : d.parallel_classes[ci]) {
            if (block_class[bi] != -1)
                rep.fail("block " + std::to_string(bi) + " in two classes");
            block_class[bi] = static_cast<int>(ci);
            for (int p : d.blocks[bi]) ++seen[p];
        }
        for (int p = 0; p < P; ++p)
            if (seen[p] != 1)
                rep.fail("class " + std::to_string(ci) + " covers point " +
                         std::to_string(p) + " " + std::to_string(seen[p]) + " times");
    }
    if (!d.parallel_classes.empty())
        for (size_t bi = 0; bi < d.blocks.size(); ++bi)
            if (block_class[bi] == -1)
                rep.fail("block " + std::to_string(bi) + " in no class");

    return rep;
}

// Export: header line "TD ell q" or "AFFINE q", then one block per line of
// space-separated point ids.
inline std::string design_to_text(const Design& d) {
    std::ostringstream os;
    if (d.kind == Design::Kind::transversal)
        os << "TD " << d.ell << ' ' << d.q << '\n';
    else
        os << "AFFINE " << d.q << '\n';
    for (const auto& b : d.blocks) {
        for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace cbc
