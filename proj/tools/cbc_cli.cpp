// cbc: construct, verify and query combinatorial batch codes.
//
// JSON reports go to stdout; a human-readable summary goes to stderr
// unless --quiet is given.  Exit codes: 0 success/proven, 2 refuted
// (witness found), 3 unproven (sampled run without a violation), 64 usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cbc/bounds.hpp"
#include "cbc/codes.hpp"
#include "cbc/design.hpp"
#include "cbc/io.hpp"
#include "cbc/matching.hpp"
#include "cbc/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 2;
constexpr int kExitUnproven = 3;
constexpr int kExitUsage = 64;

bool g_quiet = false;

void human(const std::string& line) {
    if (!g_quiet) std::cerr << line << '\n';
}

cbc::IncidenceMatrix build_family(const std::string& family, int q) {
    if (family == "ctd") return cbc::construct_ctd(q);
    if (family == "affine") return cbc::construct_affine_cbc(q);
    if (family == "c1") return cbc::construct_c1(q);
    if (family == "c2") return cbc::construct_c2(q);
    if (family == "c3") return cbc::construct_c3(q);
    throw cbc::OutOfRange("unknown family: " + family);
}

cbc::MatrixFile load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cbc::ParseError("cannot open " + path);
    return cbc::read_matrix(in);
}

json witness_json(const cbc::DeficiencyWitness& w) {
    return json{{"columns", w.column_set},
                {"rows", w.neighborhood},
                {"size", w.column_set.size()},
                {"neighborhood_size", w.neighborhood.size()}};
}

json verdict_json(const cbc::Verdict& v) {
    json j;
    j["mode"] = v.mode == cbc::Verdict::Mode::exact       ? "exact"
                : v.mode == cbc::Verdict::Mode::exhaustive ? "exhaustive"
                                                           : "sampled";
    if (v.k_max) j["k_max"] = *v.k_max;
    if (v.k_lower) j["k_lower"] = *v.k_lower;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    if (v.mode == cbc::Verdict::Mode::sampled) {
        j["checked_k"] = v.checked_k;
        j["samples_checked"] = v.samples_checked;
        j["seed"] = v.seed;
        j["violation_found"] = v.violation_found;
    }
    return j;
}

json report_shell(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void emit(json& report, std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["timing_ms"] = ms;
    std::cout << report.dump(2) << '\n';
}

json bound_report_json(const cbc::BoundReport& r) {
    json j;
    j["name"] = r.name;
    j["inputs"] = r.inputs;
    j["bound"] = r.bound.str();
    j["achieved"] = r.achieved.str();
    j["gap"] = r.gap.str();
    j["verdict"] = r.verdict;
    return j;
}

std::vector<int> parse_items(const std::string& csv) {
    std::vector<int> items;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) items.push_back(std::stoi(tok));
    }
    return items;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial batch codes: construction, verification, retrieval, bounds"};
    app.require_subcommand(1);
    app.add_flag("--quiet", g_quiet, "suppress the human-readable summary on stderr");

    // construct
    std::string family, out_path;
    int q = 0;
    auto* construct = app.add_subcommand("construct", "build a code family incidence matrix");
    construct->add_option("--family", family, "ctd|affine|c1|c2|c3")->required();
    construct->add_option("--q", q, "prime power")->required();
    construct->add_option("--out", out_path, "output file (default: stdout)");

    // design export
    std::string design_kind;
    int design_ell = 0, design_q = 0;
    std::string design_out;
    auto* design = app.add_subcommand("design", "export a design block list");
    design->add_option("--kind", design_kind, "td|affine")->required();
    design->add_option("--ell", design_ell, "block size (td only)");
    design->add_option("--q", design_q, "prime power")->required();
    design->add_option("--out", design_out, "output file (default: stdout)");

    // verify
    std::string verify_in, verify_mode = "exact";
    std::optional<long long> verify_k;
    std::uint64_t samples = 100000, seed = 0;
    std::optional<int> cap;
    auto* verify = app.add_subcommand("verify", "compute/verify k of a matrix file");
    verify->add_option("--in", verify_in, "matrix file")->required();
    verify->add_option("--mode", verify_mode, "exact|exhaustive|sampled");
    verify->add_option("--k", verify_k, "claimed k (required for sampled)");
    verify->add_option("--samples", samples, "sampled mode: number of random subsets");
    verify->add_option("--seed", seed, "sampled mode: PRNG seed");
    verify->add_option("--cap", cap, "exact mode: restrict row subsets to size <= cap");

    // retrieve
    std::string retrieve_in, items_csv;
    auto* retrieve = app.add_subcommand("retrieve", "assign a batch of items to servers");
    retrieve->add_option("--in", retrieve_in, "matrix file")->required();
    retrieve->add_option("--items", items_csv, "comma-separated column indices")->required();

    // bounds
    std::string b_family;
    int b_q = 0;
    bool b_uniform = false, b_table = false, b_lower = false, b_newrange = false,
         b_johnson = false;
    long long b_n = 0, b_k = 0, b_m = 0, b_c = 0, b_w = 0;
    auto* bounds = app.add_subcommand("bounds", "evaluate bounds and optimality gaps");
    bounds->add_option("--family", b_family, "report optimality of a construction");
    bounds->add_option("--q", b_q, "prime power for --family / --newrange");
    bounds->add_flag("--uniform", b_uniform, "uniform upper bound for --m --c --k");
    bounds->add_flag("--table", b_table, "exact N(n,k,m) table lookup for --n --k --m");
    bounds->add_flag("--lower", b_lower, "storage lower bound for --n --k --m");
    bounds->add_flag("--newrange", b_newrange, "range check for C_TD(q), needs --q");
    bounds->add_flag("--johnson", b_johnson, "Johnson bound A(m,4,w) for --m --w");
    bounds->add_option("--n", b_n, "items");
    bounds->add_option("--k", b_k, "batch size");
    bounds->add_option("--m", b_m, "servers");
    bounds->add_option("--c", b_c, "uniform replication");
    bounds->add_option("--w", b_w, "constant weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (construct->parsed()) {
            cbc::IncidenceMatrix mat = build_family(family, q);
            cbc::CodeParams declared = cbc::params_of(mat, cbc::theoretical_k(family, q));
            if (out_path.empty()) {
                cbc::write_matrix(std::cout, mat, declared);
            } else {
                std::ofstream out(out_path);
                if (!out) throw cbc::ParseError("cannot write " + out_path);
                cbc::write_matrix(out, mat, declared);
            }
            human(mat.label + ": " + std::to_string(mat.m) + "x" + std::to_string(mat.n) +
                  ", N=" + std::to_string(mat.total_weight()) +
                  ", k=" + std::to_string(cbc::theoretical_k(family, q)));
            return kExitOk;
        }

        if (design->parsed()) {
            cbc::Design d = design_kind == "affine"
                                ? cbc::build_affine_plane(design_q)
                                : cbc::build_resolvable_td(design_ell, design_q);
            std::string txt = cbc::design_to_text(d);
            if (design_out.empty()) {
                std::cout << txt;
            } else {
                std::ofstream out(design_out);
                if (!out) throw cbc::ParseError("cannot write " + design_out);
                out << txt;
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            cbc::MatrixFile file = load_matrix(verify_in);
            json report = report_shell("verify");
            report["inputs"] = {{"file", verify_in}, {"mode", verify_mode}};
            cbc::Verdict v;
            if (verify_mode == "exact") {
                try {
                    v = cbc::max_k_dual(file.matrix, cap);
                } catch (const cbc::TooLarge& e) {
                    human(std::string(e.what()) + " (try --mode sampled --k <k>)");
                    std::cerr << e.what() << '\n';
                    return kExitUsage;
                }
            } else if (verify_mode == "exhaustive") {
                v = cbc::max_k_exhaustive(file.matrix);
            } else if (verify_mode == "sampled") {
                if (!verify_k) throw CLI::ValidationError("--k is required for sampled mode");
                v = cbc::sampled_check(file.matrix, *verify_k, samples, seed);
            } else {
                throw CLI::ValidationError("unknown mode " + verify_mode);
            }
            report["verdict"] = verdict_json(v);
            int rc = kExitOk;
            if (v.mode == cbc::Verdict::Mode::sampled) {
                rc = v.violation_found ? kExitRefuted : kExitUnproven;
            } else if (verify_k && v.k_max && *v.k_max < *verify_k) {
                rc = kExitRefuted;
            }
            if (v.k_max)
                human("k_max = " + std::to_string(*v.k_max));
            else if (v.k_lower)
                human("k_max >= " + std::to_string(*v.k_lower));
            emit(report, start);
            return rc;
        }

        if (retrieve->parsed()) {
            cbc::MatrixFile file = load_matrix(retrieve_in);
            std::vector<int> items = parse_items(items_csv);
            for (int j : items)
                if (j < 0 || j >= file.matrix.n)
                    throw cbc::OutOfRange("item " + std::to_string(j) + " out of range");
            json report = report_shell("retrieve");
            report["inputs"] = {{"file", retrieve_in}, {"items", items}};
            auto res = cbc::retrieve_batch(file.matrix, items);
            int rc;
            if (std::holds_alternative<cbc::Assignment>(res)) {
                const auto& a = std::get<cbc::Assignment>(res);
                json pairs = json::object();
                for (auto [item, server] : a.pairs)
                    pairs[std::to_string(item)] = server;
                report["assignment"] = pairs;
                human("complete assignment of " + std::to_string(items.size()) + " items");
                rc = kExitOk;
            } else {
                const auto& w = std::get<cbc::DeficiencyWitness>(res);
                report["violator"] = witness_json(w);
                human("Hall violator: " + std::to_string(w.column_set.size()) +
                      " items on " + std::to_string(w.neighborhood.size()) + " servers");
                rc = kExitRefuted;
            }
            emit(report, start);
            return rc;
        }

        if (bounds->parsed()) {
            json report = report_shell("bounds");
            json reports = json::array();
            if (!b_family.empty()) {
                cbc::IncidenceMatrix mat = build_family(b_family, b_q);
                for (const auto& r :
                     cbc::optimality_report(mat, cbc::theoretical_k(b_family, b_q)))
                    reports.push_back(bound_report_json(r));
            }
            if (b_uniform) {
                cbc::BigInt u = cbc::uniform_upper(b_m, b_c, b_k);
                reports.push_back(
                    {{"name", "uniform_upper"},
                     {"inputs", {{"m", b_m}, {"c", b_c}, {"k", b_k}}},
                     {"bound", u.str()}});
            }
            if (b_lower) {
                cbc::BigInt lo = cbc::storage_lower(b_n, b_k, b_m);
                reports.push_back({{"name", "storage_lower"},
                                   {"inputs", {{"n", b_n}, {"k", b_k}, {"m", b_m}}},
                                   {"s", cbc::minimal_s(b_n, b_k, b_m)},
                                   {"bound", lo.str()}});
            }
            if (b_table) {
                auto v = cbc::table_exact_N(b_n, b_k, b_m);
                json j{{"name", "table_exact_N"},
                       {"inputs", {{"n", b_n}, {"k", b_k}, {"m", b_m}}}};
                j["value"] = v ? json(v->str()) : json("inapplicable");
                reports.push_back(j);
            }
            if (b_newrange)
                reports.push_back(bound_report_json(cbc::new_range_check(b_q)));
            if (b_johnson) {
                reports.push_back({{"name", "johnson_upper_A"},
                                   {"inputs", {{"m", b_m}, {"w", b_w}}},
                                   {"bound", cbc::johnson_upper_A(b_m, b_w).str()}});
            }
            if (reports.empty())
                throw CLI::ValidationError(
                    "pick one of --family/--uniform/--lower/--table/--newrange/--johnson");
            report["reports"] = reports;
            for (const auto& r : reports) {
                std::string line = r["name"].get<std::string>();
                if (r.contains("bound")) line += "  bound=" + r["bound"].get<std::string>();
                if (r.contains("value")) line += "  value=" + r["value"].get<std::string>();
                if (r.contains("gap")) line += "  gap=" + r["gap"].get<std::string>();
                if (r.contains("verdict")) line += "  " + r["verdict"].get<std::string>();
                human(line);
            }
            emit(report, start);
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
