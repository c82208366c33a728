#pragma once

// Batch code constructions from transversal designs and affine planes.
// Rows are the design points ordered by (group, element); block columns
// are grouped by parallel class.

#include <optional>
#include <string>
#include <vector>

#include "cbc/design.hpp"
#include "cbc/errors.hpp"
#include "cbc/matrix.hpp"

namespace cbc {

// C_TD(q): the q^2 blocks of TD(q-1, q) followed by its q-1 groups.
// The group columns form the special (last) class.
inline IncidenceMatrix construct_ctd(int q) {
    if (!is_prime_power(q)) throw NotPrimePower(q);
    if (q < 3) throw QTooSmall(q, 3);
    Design d = build_resolvable_td(q - 1, q);

    IncidenceMatrix mat;
    mat.m = d.num_points;  // q(q-1)
    mat.n = q * q + q - 1;
    mat.label = "ctd(" + std::to_string(q) + ")";
    mat.columns.reserve(mat.n);
    for (const auto& b : d.blocks) {
        DynBits col(mat.m);
        for (int p : b) col.set(p);
        mat.columns.push_back(std::move(col));
    }
    for (const auto& g : d.groups) {
        DynBits col(mat.m);
        for (int p : g) col.set(p);
        mat.columns.push_back(std::move(col));
    }

    std::vector<std::vector<int>> classes(q + 1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) classes[a].push_back(a * q + b);
    for (int g = 0; g < q - 1; ++g) classes[q].push_back(q * q + g);
    mat.class_partition = std::move(classes);
    return mat;
}

// C_A(q): the q(q+1) blocks of the affine plane A(q); q-uniform.
inline IncidenceMatrix construct_affine_cbc(int q) {
    if (!is_prime_power(q)) throw NotPrimePower(q);
    if (q < 3) throw QTooSmall(q, 3);
    Design d = build_affine_plane(q);

    IncidenceMatrix mat;
    mat.m = d.num_points;  // q^2
    mat.n = static_cast<int>(d.blocks.size());
    mat.label = "affine(" + std::to_string(q) + ")";
    for (const auto& b : d.blocks) {
        DynBits col(mat.m);
        for (int p : b) col.set(p);
        mat.columns.push_back(std::move(col));
    }
    std::vector<std::vector<int>> classes;
    for (const auto& pc : d.parallel_classes) classes.push_back(pc);
    mat.class_partition = std::move(classes);
    return mat;
}

// C_1(q): the q^2 block columns of C_TD(q) without the special class.
inline IncidenceMatrix construct_c1(int q) {
    IncidenceMatrix full = construct_ctd(q);
    IncidenceMatrix mat;
    mat.m = full.m;
    mat.n = q * q;
    mat.label = "c1(" + std::to_string(q) + ")";
    mat.columns.assign(full.columns.begin(), full.columns.begin() + mat.n);
    std::vector<std::vector<int>> classes(q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) classes[a].push_back(a * q + b);
    mat.class_partition = std::move(classes);
    return mat;
}

// C_2(q): C_1(q) plus q-3 weight-(q-1) columns; appended column i
// (1-based) has its ones at rows (i-1)q+j for 2 <= j <= q (1-based).
inline IncidenceMatrix construct_c2(int q) {
    if (!is_prime_power(q)) throw NotPrimePower(q);
    if (q < 4) throw QTooSmall(q, 4);
    IncidenceMatrix mat = construct_c1(q);
    mat.label = "c2(" + std::to_string(q) + ")";
    std::vector<int> special;
    for (int i = 1; i <= q - 3; ++i) {
        DynBits col(mat.m);
        for (int j = 2; j <= q; ++j) col.set((i - 1) * q + j - 1);
        special.push_back(mat.n);
        mat.columns.push_back(std::move(col));
        ++mat.n;
    }
    mat.class_partition->push_back(std::move(special));
    return mat;
}

// C_3(q): from C_2(q), delete the first row and every column incident to it.
inline IncidenceMatrix construct_c3(int q) {
    IncidenceMatrix c2 = construct_c2(q);
    IncidenceMatrix mat;
    mat.m = c2.m - 1;
    mat.label = "c3(" + std::to_string(q) + ")";

    std::vector<int> newcol_of(c2.n, -1);
    for (int j = 0; j < c2.n; ++j) {
        if (c2.columns[j].test(0)) continue;
        DynBits col(mat.m);
        for (int r = 1; r < c2.m; ++r)
            if (c2.columns[j].test(r)) col.set(r - 1);
        newcol_of[j] = mat.n;
        mat.columns.push_back(std::move(col));
        ++mat.n;
    }
    std::vector<std::vector<int>> classes;
    for (const auto& cls : *c2.class_partition) {
        std::vector<int> mapped;
        for (int j : cls)
            if (newcol_of[j] != -1) mapped.push_back(newcol_of[j]);
        if (!mapped.empty()) classes.push_back(std::move(mapped));
    }
    mat.class_partition = std::move(classes);
    return mat;
}

inline CodeParams params_of(const IncidenceMatrix& mat,
                            std::optional<long long> k = std::nullopt) {
    CodeParams p;
    p.n = mat.n;
    p.m = mat.m;
    p.N = mat.total_weight();
    if (auto c = mat.uniform_weight()) p.c = *c;
    p.k = k;
    return p;
}

// Closed-form retrievability parameter of each construction.
inline long long theoretical_k(const std::string& family, int q) {
    if (family == "affine") return static_cast<long long>(q) * q;
    return static_cast<long long>(q) * q - q - 1;  // ctd, c1, c2, c3
}

}  // namespace cbc
