// Command-line front end: set generation, graph construction, counting,
// solvers, certificates, and CSV sweeps.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tri/ap3.hpp"
#include "tri/certify.hpp"
#include "tri/counterexample.hpp"
#include "tri/extremal.hpp"
#include "tri/multigraph.hpp"
#include "tri/rs.hpp"

using namespace tri;

namespace {

SetMethod parse_method(const std::string& m) {
    if (m == "behrend") return SetMethod::behrend;
    if (m == "exact") return SetMethod::exact;
    if (m == "greedy") return SetMethod::greedy;
    throw CLI::ValidationError("--method", "expected behrend|exact|greedy");
}

SolveMode parse_mode(const std::string& m) {
    if (m == "exact") return SolveMode::exact;
    if (m == "greedy") return SolveMode::greedy;
    throw CLI::ValidationError("--mode", "expected exact|greedy");
}

nlohmann::json cover_json(const CoverSolution& sol) {
    nlohmann::json j;
    j["cost"] = sol.cost;
    j["optimal"] = sol.optimal;
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t i = 0; i < sol.pairs.size(); ++i)
        pairs.push_back({{"u", sol.pairs[i].first},
                         {"v", sol.pairs[i].second},
                         {"weight", sol.weights[i]}});
    j["pairs"] = pairs;
    return j;
}

nlohmann::json packing_json(const PackingSolution& sol) {
    nlohmann::json j;
    j["count"] = sol.count;
    j["optimal"] = sol.optimal;
    nlohmann::json tris = nlohmann::json::array();
    for (const auto& [t, copies] : sol.triangles)
        tris.push_back({{"triangle", {t[0], t[1], t[2]}}, {"copies", copies}});
    j["triangles"] = tris;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal multigraph triangle toolkit"};
    app.require_subcommand(1);

    // gen-ap3
    auto* gen_ap3 = app.add_subcommand("gen-ap3", "generate a progression-free set");
    u64 ga_n = 0;
    std::string ga_method = "behrend", ga_out;
    gen_ap3->add_option("--n", ga_n, "universe bound")->required();
    gen_ap3->add_option("--method", ga_method, "behrend|exact|greedy");
    gen_ap3->add_option("--out", ga_out, "output file")->required();

    // verify-ap3
    auto* verify_ap3_cmd = app.add_subcommand("verify-ap3", "check a set file for progressions");
    std::string va_in;
    verify_ap3_cmd->add_option("--in", va_in, "set file")->required();

    // gen-rs
    auto* gen_rs = app.add_subcommand("gen-rs", "build the tripartite packing graph from a set");
    int gr_n = 0;
    std::string gr_set, gr_out, gr_tris;
    gen_rs->add_option("--n", gr_n, "base parameter")->required();
    gen_rs->add_option("--set", gr_set, "set file")->required();
    gen_rs->add_option("--out", gr_out, "graph output file")->required();
    gen_rs->add_option("--triangles", gr_tris, "optional sidecar with intended triangles");

    // blowup
    auto* blowup_cmd = app.add_subcommand("blowup", "multiply all multiplicities by k");
    std::string bl_in, bl_out;
    u64 bl_k = 1;
    blowup_cmd->add_option("--in", bl_in)->required();
    blowup_cmd->add_option("--k", bl_k)->required();
    blowup_cmd->add_option("--out", bl_out)->required();

    // count
    auto* count_cmd = app.add_subcommand("count", "exact triangle count");
    std::string ct_in, ct_algo = "enumerate";
    count_cmd->add_option("--in", ct_in)->required();
    count_cmd->add_option("--algo", ct_algo, "enumerate|trace");

    // removal
    auto* removal_cmd = app.add_subcommand("removal", "triangle-removal distance");
    std::string rm_in, rm_mode = "exact";
    bool rm_json = false;
    removal_cmd->add_option("--in", rm_in)->required();
    removal_cmd->add_option("--mode", rm_mode, "exact|greedy");
    removal_cmd->add_flag("--json", rm_json, "emit the solution as JSON");

    // packing
    auto* packing_cmd = app.add_subcommand("packing", "edge-disjoint triangle packing");
    std::string pk_in, pk_mode = "exact";
    bool pk_json = false;
    packing_cmd->add_option("--in", pk_in)->required();
    packing_cmd->add_option("--mode", pk_mode, "exact|greedy");
    packing_cmd->add_flag("--json", pk_json, "emit the solution as JSON");

    // counterexample
    auto* ce_cmd = app.add_subcommand("counterexample", "build a blow-up counterexample instance");
    int ce_n = 0;
    std::string ce_method = "behrend", ce_out;
    std::optional<u64> ce_k;
    bool ce_verify = false;
    ce_cmd->add_option("--n", ce_n)->required();
    ce_cmd->add_option("--set-method", ce_method, "behrend|exact|greedy");
    ce_cmd->add_option("--k", ce_k, "blow-up factor (default floor(n/|S|))");
    ce_cmd->add_flag("--verify", ce_verify, "verify predictions before reporting");
    ce_cmd->add_option("--out", ce_out, "write the multigraph to this file");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "emit a triangle-count lower bound");
    std::string cf_in, cf_report;
    u64 cf_t = 0;
    certify_cmd->add_option("--in", cf_in)->required();
    certify_cmd->add_option("--threshold", cf_t)->required();
    certify_cmd->add_option("--report", cf_report, "write the certificate JSON here");

    // recheck
    auto* recheck_cmd = app.add_subcommand("recheck", "independently verify a certificate");
    std::string rc_in, rc_cert;
    recheck_cmd->add_option("--in", rc_in)->required();
    recheck_cmd->add_option("--cert", rc_cert)->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "scaling experiment, CSV output");
    std::string sw_list, sw_method = "exact", sw_csv;
    std::optional<u64> sw_t;
    unsigned sw_workers = 1;
    sweep_cmd->add_option("--n-list", sw_list, "comma-separated n values")->required();
    sweep_cmd->add_option("--set-method", sw_method, "behrend|exact|greedy");
    sweep_cmd->add_option("--threshold", sw_t, "override the default threshold rule");
    sweep_cmd->add_option("--workers", sw_workers, "parallel rows");
    sweep_cmd->add_option("--csv", sw_csv, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen_ap3) {
            Ap3Set s = make_set(ga_n, parse_method(ga_method));
            write_ap3_file(ga_out, s);
            std::cout << "n=" << s.n << " size=" << s.elements.size() << '\n';
        } else if (*verify_ap3_cmd) {
            Ap3Set s = read_ap3_file(va_in);
            if (auto w = find_3ap(s)) {
                std::cout << "progression found: " << (*w)[0] << ' ' << (*w)[1] << ' ' << (*w)[2]
                          << '\n';
                return 1;
            }
            std::cout << "3AP-free (n=" << s.n << ", size=" << s.elements.size() << ")\n";
        } else if (*gen_rs) {
            Ap3Set s = read_ap3_file(gr_set);
            RsGraph rs = build_rs(gr_n, s);
            write_multigraph_file(gr_out, to_multigraph(rs));
            if (!gr_tris.empty()) {
                std::ofstream f(gr_tris);
                if (!f) throw std::runtime_error("cannot open " + gr_tris);
                write_intended_triangles(f, rs);
            }
            RsReport rep = verify_rs(rs);
            std::cout << "vertices=" << rs.graph.order() << " edges=" << rs.graph.edge_count()
                      << " triangles=" << to_string_u128(rep.triangle_count)
                      << " extra=" << rep.extra_triangles.size() << '\n';
            if (!rep.all_clear()) return 1;
        } else if (*blowup_cmd) {
            write_multigraph_file(bl_out, blow_up(read_multigraph_file(bl_in), bl_k));
        } else if (*count_cmd) {
            CountAlgo algo;
            if (ct_algo == "enumerate") algo = CountAlgo::enumerate;
            else if (ct_algo == "trace") algo = CountAlgo::trace;
            else throw CLI::ValidationError("--algo", "expected enumerate|trace");
            std::cout << to_string_u128(count_triangles(read_multigraph_file(ct_in), algo)) << '\n';
        } else if (*removal_cmd) {
            CoverSolution sol = removal_distance(read_multigraph_file(rm_in), parse_mode(rm_mode));
            if (rm_json)
                std::cout << cover_json(sol).dump(2) << '\n';
            else
                std::cout << "cost=" << sol.cost << " pairs=" << sol.pairs.size()
                          << " optimal=" << (sol.optimal ? "yes" : "no") << '\n';
        } else if (*packing_cmd) {
            PackingSolution sol = max_packing(read_multigraph_file(pk_in), parse_mode(pk_mode));
            if (pk_json)
                std::cout << packing_json(sol).dump(2) << '\n';
            else
                std::cout << "count=" << sol.count
                          << " optimal=" << (sol.optimal ? "yes" : "no") << '\n';
        } else if (*ce_cmd) {
            Counterexample ce = build_counterexample(ce_n, parse_method(ce_method), ce_k);
            std::cout << "n=" << ce_n << " set_size=" << ce.set.elements.size() << " k=" << ce.k
                      << " vertices=" << ce.graph.order()
                      << " predicted_triangles=" << to_string_u128(ce.predicted_triangles)
                      << " predicted_removal=" << ce.predicted_removal << '\n';
            if (!ce_out.empty()) write_multigraph_file(ce_out, ce.graph);
            if (ce_verify) {
                u128 tri_count = count_triangles(ce.graph);
                u64 removal = ce.base.intended.size() <= kExactTriangleGuard
                                  ? removal_distance(ce.graph, SolveMode::exact).cost
                                  : structural_removal_distance(ce);
                std::cout << "verified_triangles=" << to_string_u128(tri_count)
                          << " verified_removal=" << removal << '\n';
                if (tri_count != ce.predicted_triangles || removal != ce.predicted_removal) {
                    std::cout << "verification FAILED\n";
                    return 1;
                }
            }
        } else if (*certify_cmd) {
            Multigraph g = read_multigraph_file(cf_in);
            Certificate cert = certify(g, cf_t);
            nlohmann::json j = to_json(cert);
            if (!cf_report.empty()) {
                std::ofstream f(cf_report);
                if (!f) throw std::runtime_error("cannot open " + cf_report);
                f << j.dump(2) << '\n';
            }
            std::cout << "case=" << to_string(cert.case_taken) << " R=" << cert.R
                      << " bound=" << to_string_u128(cert.bound) << '\n';
        } else if (*recheck_cmd) {
            Multigraph g = read_multigraph_file(rc_in);
            std::ifstream f(rc_cert);
            if (!f) throw std::runtime_error("cannot open " + rc_cert);
            nlohmann::json j;
            f >> j;
            Certificate cert = certificate_from_json(j);
            RecheckResult r = recheck(cert, g);
            if (!r.ok) {
                std::cout << "REJECTED: " << r.failure << '\n';
                return 1;
            }
            std::cout << "certificate verified (case=" << to_string(cert.case_taken)
                      << ", bound=" << to_string_u128(cert.bound) << ")\n";
        } else if (*sweep_cmd) {
            std::vector<int> ns;
            std::stringstream ss(sw_list);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) ns.push_back(std::stoi(tok));
            auto rows = sweep(ns, parse_method(sw_method), sw_t, sw_workers);
            std::ofstream f(sw_csv);
            if (!f) throw std::runtime_error("cannot open " + sw_csv);
            write_sweep_csv(f, rows);
            bool any_error = false;
            for (const auto& r : rows)
                if (!r.error.empty()) {
                    std::cerr << "row n=" << r.n << " failed: " << r.error << '\n';
                    any_error = true;
                }
            std::cout << rows.size() << " rows written to " << sw_csv << '\n';
            if (any_error) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
