#pragma once

// Matrix text format: line 1 is "m n", then m lines of n characters '0'/'1',
// then an optional one-line JSON metadata block with label, class partition
// and declared parameters.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cbc/matrix.hpp"

namespace cbc {

inline nlohmann::json params_to_json(const CodeParams& p) {
    nlohmann::json j;
    j["n"] = p.n;
    j["N"] = p.N;
    j["m"] = p.m;
    if (p.k) j["k"] = *p.k;
    if (p.c) j["c"] = *p.c;
    return j;
}

inline CodeParams params_from_json(const nlohmann::json& j) {
    CodeParams p;
    p.n = j.value("n", 0LL);
    p.N = j.value("N", 0LL);
    p.m = j.value("m", 0LL);
    if (j.contains("k")) p.k = j["k"].get<long long>();
    if (j.contains("c")) p.c = j["c"].get<long long>();
    return p;
}

inline void write_matrix(std::ostream& os, const IncidenceMatrix& mat,
                         const std::optional<CodeParams>& declared = std::nullopt) {
    os << mat.m << ' ' << mat.n << '\n';
    for (int r = 0; r < mat.m; ++r) {
        for (int c = 0; c < mat.n; ++c) os << (mat.get(r, c) ? '1' : '0');
        os << '\n';
    }
    nlohmann::json meta;
    meta["schema"] = 1;
    if (!mat.label.empty()) meta["label"] = mat.label;
    if (mat.class_partition) meta["classes"] = *mat.class_partition;
    if (declared) meta["params"] = params_to_json(*declared);
    os << meta.dump() << '\n';
}

struct MatrixFile {
    IncidenceMatrix matrix;
    std::optional<CodeParams> declared;
};

inline MatrixFile read_matrix(std::istream& is) {
    MatrixFile out;
    IncidenceMatrix& mat = out.matrix;
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty matrix file");
    {
        std::istringstream hs(line);
        if (!(hs >> mat.m >> mat.n) || mat.m <= 0 || mat.n < 0)
            throw ParseError("bad header line: " + line);
    }
    mat.columns.assign(mat.n, DynBits(mat.m));
    for (int r = 0; r < mat.m; ++r) {
        if (!std::getline(is, line)) throw ParseError("truncated matrix: missing row");
        if (static_cast<int>(line.size()) < mat.n)
            throw ParseError("row " + std::to_string(r + 1) + " shorter than n");
        for (int c = 0; c < mat.n; ++c) {
            if (line[c] == '1')
                mat.columns[c].set(r);
            else if (line[c] != '0')
                throw ParseError("bad character in row " + std::to_string(r + 1));
        }
    }
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json meta = nlohmann::json::parse(line, nullptr, false);
        if (meta.is_discarded()) throw ParseError("bad metadata JSON");
        mat.label = meta.value("label", std::string{});
        if (meta.contains("classes"))
            mat.class_partition = meta["classes"].get<std::vector<std::vector<int>>>();
        if (meta.contains("params")) out.declared = params_from_json(meta["params"]);
        break;
    }
    return out;
}

}  // namespace cbc
