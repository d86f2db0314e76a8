// jrt: exact toolkit for intersection-constrained uniform hypergraphs.
//
// Exit codes: 0 success, 1 verification/certificate failure (JSON
// diagnostic on stdout), 2 usage or input errors.

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "jrt/constructions.hpp"
#include "jrt/decomposition.hpp"
#include "jrt/errors.hpp"
#include "jrt/extraction.hpp"
#include "jrt/json_io.hpp"
#include "jrt/parallel.hpp"
#include "jrt/search.hpp"
#include "jrt/structure.hpp"
#include "jrt/sunflower.hpp"

namespace {

using jrt::io::ordered_json;

struct Output {
    std::string path;  // empty: artifact goes to stdout, echo to stderr

    /// Artifact bytes are bit-stable; the echo documents the resolved run.
    void deliver(const std::string& artifact, const ordered_json& echo) const {
        if (path.empty()) {
            std::cout << artifact;
            std::cerr << jrt::io::dump(echo);
        } else {
            jrt::io::write_file(path, artifact);
            ordered_json note = echo;
            note["out"] = path;
            std::cout << jrt::io::dump(note);
        }
    }
};

jrt::Hypergraph load_hypergraph(const std::string& path) {
    return jrt::io::hypergraph_from_json(jrt::io::parse_file(path));
}

jrt::VertexSet parse_vertex_list(const std::string& text) {
    jrt::VertexSet s;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            s.set(std::stoi(cur));
            cur.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ')
            flush();
        else
            cur += c;
    }
    flush();
    return s;
}

int fail_with_diagnostic(const std::string& kind, const std::string& detail) {
    ordered_json j;
    j["error"] = kind;
    j["detail"] = detail;
    std::cout << jrt::io::dump(j);
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of intersection-constrained uniform hypergraphs"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker pool size (default: JRT_THREADS or hardware)");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a named construction as hypergraph JSON");
    std::string kind, gen_out;
    int gn = 0, gk = 0, gt = 0, gs = 0, gr = 1, gu = 0, gm = 0;
    std::uint64_t gseed = 0;
    gen_cmd->add_option("--kind", kind, "thick | star | gadget | random")->required();
    gen_cmd->add_option("--n", gn, "vertex count");
    gen_cmd->add_option("--k", gk, "edge size");
    gen_cmd->add_option("--t", gt, "team size");
    gen_cmd->add_option("--s", gs, "star centre size");
    gen_cmd->add_option("--r", gr, "profile parameter r");
    gen_cmd->add_option("--u", gu, "gadget ground size");
    gen_cmd->add_option("--m", gm, "target edge count (random)");
    gen_cmd->add_option("--seed", gseed, "random seed");
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "family membership of a hypergraph file");
    std::string vin, vout;
    int vr = 1, vt = 2;
    verify_cmd->add_option("--r", vr, "profile parameter r")->required();
    verify_cmd->add_option("--t", vt, "profile parameter t")->required();
    verify_cmd->add_option("--in", vin, "hypergraph JSON file")->required();
    verify_cmd->add_option("--out", vout, "report file (default stdout)");

    // sunflower
    auto* sun_cmd = app.add_subcommand("sunflower", "maximum sunflower with a kernel, or search");
    std::string sin, sout, skernel;
    bool sauto = false;
    int sa = 2, sb = 0, sbudget = jrt::default_exact_budget;
    sun_cmd->add_option("--in", sin, "set system JSON file")->required();
    sun_cmd->add_option("--kernel", skernel, "comma-separated kernel vertices");
    sun_cmd->add_flag("--auto", sauto, "search for a sunflower with more than --a petals");
    sun_cmd->add_option("--a", sa, "petal threshold for --auto");
    sun_cmd->add_option("--b", sb, "member size bound for --auto (default: largest member)");
    sun_cmd->add_option("--budget", sbudget, "exact packing budget (candidate count)");
    sun_cmd->add_option("--out", sout, "output file (default stdout)");

    // decompose-lemma
    auto* dec_cmd = app.add_subcommand("decompose-lemma", "saturate and decompose a divisible pair");
    std::string dfile, gfile, dout;
    int dq = 2, dk = 0;
    dec_cmd->add_option("--q", dq, "divisibility modulus")->required();
    dec_cmd->add_option("--f", dfile, "F system JSON file")->required();
    dec_cmd->add_option("--g", gfile, "G system JSON file (absent means empty G)");
    dec_cmd->add_option("--k", dk, "size bound (default: largest member)");
    dec_cmd->add_option("--out", dout, "output file (default stdout)");

    // core
    auto* core_cmd = app.add_subcommand("core", "peel a star to its heavy core");
    std::string cin_path, cout_path;
    int cr = 1, ct = 2;
    core_cmd->add_option("--r", cr, "profile parameter r")->required();
    core_cmd->add_option("--t", ct, "profile parameter t")->required();
    core_cmd->add_option("--in", cin_path, "star JSON file")->required();
    core_cmd->add_option("--out", cout_path, "output file (default stdout)");

    // extract
    auto* ext_cmd = app.add_subcommand("extract", "iterated star extraction");
    std::string ein, eout;
    int er = 1, et = 2;
    ext_cmd->add_option("--r", er, "profile parameter r")->required();
    ext_cmd->add_option("--t", et, "profile parameter t")->required();
    ext_cmd->add_option("--in", ein, "hypergraph JSON file")->required();
    ext_cmd->add_option("--out", eout, "output file (default stdout)");

    // structure
    auto* str_cmd = app.add_subcommand("structure", "decomposition certificate for a member");
    std::string stin, stout, assert_level = "soft";
    int str_r = 1, str_t = 2;
    str_cmd->add_option("--r", str_r, "profile parameter r")->required();
    str_cmd->add_option("--t", str_t, "profile parameter t")->required();
    str_cmd->add_option("--in", stin, "hypergraph JSON file")->required();
    str_cmd->add_option("--assert-level", assert_level, "soft | hard (soft checks fatal)")
        ->check(CLI::IsMember({"soft", "hard"}));
    str_cmd->add_option("--out", stout, "output file (default stdout)");

    // search
    auto* search_cmd = app.add_subcommand("search", "minimum maximum degree at (n, m)");
    int qr = 1, qt = 2, qn = 0, qm = 0;
    long long qnodes = 50'000'000;
    long long qsecs = 0;
    std::string qout;
    search_cmd->add_option("--r", qr, "profile parameter r")->required();
    search_cmd->add_option("--t", qt, "profile parameter t")->required();
    search_cmd->add_option("--n", qn, "vertex count")->required();
    search_cmd->add_option("--m", qm, "edge count")->required();
    search_cmd->add_option("--budget-nodes", qnodes, "node cap (0 = unlimited)");
    search_cmd->add_option("--budget-secs", qsecs,
                           "wall-clock cap (0 = unlimited; hitting it breaks determinism)");
    search_cmd->add_option("--out", qout, "output file (default stdout)");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "phase table across vertex counts (CSV)");
    int zr = 1, zt = 2;
    std::string zn, zstrategy = "none", zout;
    long long znodes = 50'000'000;
    long long zsecs = 0;
    scan_cmd->add_option("--r", zr, "profile parameter r")->required();
    scan_cmd->add_option("--t", zt, "profile parameter t")->required();
    scan_cmd->add_option("--n", zn, "comma-separated vertex counts")->required();
    scan_cmd->add_option("--m-strategy", zstrategy, "none | around")
        ->check(CLI::IsMember({"none", "around"}));
    scan_cmd->add_option("--budget-nodes", znodes, "node cap per searched point");
    scan_cmd->add_option("--budget-secs", zsecs, "wall-clock cap per searched point");
    scan_cmd->add_option("--out", zout, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    jrt::exec::set_thread_count(threads);

    try {
        if (*gen_cmd) {
            ordered_json config;
            config["verb"] = "generate";
            config["kind"] = kind;
            jrt::Hypergraph h;
            if (kind == "thick") {
                config["n"] = gn;
                config["k"] = gk;
                config["t"] = gt;
                h = jrt::thick_clique(gn, gk, gt).h;
            } else if (kind == "star") {
                config["n"] = gn;
                config["k"] = gk;
                config["s"] = gs;
                h = jrt::full_star(gn, gk, gs).h;
            } else if (kind == "gadget") {
                config["r"] = gr;
                config["t"] = gt;
                config["u"] = gu;
                h = jrt::two_star_gadget(gr, gt, gu).h;
            } else if (kind == "random") {
                config["r"] = gr;
                config["t"] = gt;
                config["n"] = gn;
                config["m"] = gm;
                config["seed"] = gseed;
                auto r = jrt::random_jrt(jrt::JrtParams(gr, gt), gn, gm, gseed);
                config["reached_target"] = r.reached_target;
                if (!r.reached_target)
                    std::cerr << "note: only " << r.h.edge_count() << " of " << gm
                              << " edges were placed\n";
                h = r.h;
            } else {
                std::cerr << "usage error: --kind must be thick|star|gadget|random\n";
                return 2;
            }
            Output{gen_out}.deliver(jrt::io::dump(jrt::io::to_json(h)), config);
            return 0;
        }

        if (*verify_cmd) {
            jrt::JrtParams p(vr, vt);
            auto h = load_hypergraph(vin);
            auto rep = jrt::is_jrt_member(p, h);
            ordered_json j;
            j["config"] = {{"verb", "verify"}, {"r", vr}, {"t", vt}, {"in", vin}};
            j["member"] = rep.member;
            j["violation"] = rep.violation
                                 ? ordered_json::array({jrt::io::to_json(rep.violation->first),
                                                        jrt::io::to_json(rep.violation->second)})
                                 : ordered_json(nullptr);
            j["k"] = p.edge_size();
            j["r"] = p.r;
            j["t"] = p.t;
            j["reason"] = rep.member ? ordered_json(nullptr)
                          : rep.non_uniform_edge ? ordered_json("uniformity")
                                                 : ordered_json("intersection");
            j["non_uniform_edge"] = rep.non_uniform_edge ? jrt::io::to_json(*rep.non_uniform_edge)
                                                         : ordered_json(nullptr);
            Output{vout}.deliver(jrt::io::dump(j), j["config"]);
            return rep.member ? 0 : 1;
        }

        if (*sun_cmd) {
            auto h = load_hypergraph(sin);
            ordered_json j;
            j["config"] = {{"verb", "sunflower"}, {"in", sin}, {"auto", sauto},
                           {"kernel", skernel},   {"a", sa},   {"b", sb},
                           {"budget", sbudget}};
            if (sauto) {
                int bound = sb;
                if (bound <= 0)
                    for (const auto& e : h.edges) bound = std::max(bound, e.count());
                auto r = jrt::find_sunflower(h, sa, std::max(bound, 1));
                j["found"] = r.found;
                j["exact"] = r.exact;
                j["sunflower"] = r.found ? jrt::io::to_json(r.sunflower) : ordered_json(nullptr);
            } else {
                auto s = jrt::max_sunflower_with_kernel(h, parse_vertex_list(skernel), sbudget);
                j["found"] = s.size() > 0;
                j["exact"] = s.exact;
                j["sunflower"] = jrt::io::to_json(s);
            }
            Output{sout}.deliver(jrt::io::dump(j), j["config"]);
            return 0;
        }

        if (*dec_cmd) {
            auto f = load_hypergraph(dfile);
            jrt::Hypergraph g(f.n, {});
            if (!gfile.empty()) g = load_hypergraph(gfile);
            int bound = dk;
            if (bound <= 0) {
                bound = 1;
                for (const auto& e : f.edges) bound = std::max(bound, e.count());
                for (const auto& e : g.edges) bound = std::max(bound, e.count());
            }
            auto result = jrt::decompose(jrt::DivisiblePairParams(dq, bound), f, g);
            ordered_json j;
            j["config"] = {{"verb", "decompose-lemma"},
                           {"q", dq},
                           {"k", bound},
                           {"f", dfile},
                           {"g", gfile}};
            auto body = jrt::io::to_json(result);
            for (auto& [key, value] : body.items()) j[key] = value;
            Output{dout}.deliver(jrt::io::dump(j), j["config"]);
            return 0;
        }

        if (*core_cmd) {
            jrt::JrtParams p(cr, ct);
            auto star = jrt::io::star_from_json(jrt::io::parse_file(cin_path));
            auto result = jrt::core(p, star);
            ordered_json j;
            j["config"] = {{"verb", "core"}, {"r", cr}, {"t", ct}, {"in", cin_path}};
            j["star"] = jrt::io::to_json(star);
            auto body = jrt::io::to_json(result);
            for (auto& [key, value] : body.items()) j[key] = value;
            j["heavy"] = jrt::is_heavy(p, result.core);
            Output{cout_path}.deliver(jrt::io::dump(j), j["config"]);
            return 0;
        }

        if (*ext_cmd) {
            jrt::JrtParams p(er, et);
            auto h = load_hypergraph(ein);
            auto result = jrt::extract_stars(p, h);
            ordered_json j;
            j["config"] = {{"verb", "extract"}, {"r", er}, {"t", et}, {"in", ein}};
            auto body = jrt::io::to_json(result);
            for (auto& [key, value] : body.items()) j[key] = value;
            Output{eout}.deliver(jrt::io::dump(j), j["config"]);
            return 0;
        }

        if (*str_cmd) {
            jrt::JrtParams p(str_r, str_t);
            auto h = load_hypergraph(stin);
            auto result = jrt::build_structure(p, h);
            if (assert_level == "hard")
                for (const auto& soft : result.trace.soft_checks)
                    if (!soft.holds)
                        return fail_with_diagnostic("soft-check:" + soft.name, soft.detail);
            ordered_json j;
            j["config"] = {{"verb", "structure"},
                           {"r", str_r},
                           {"t", str_t},
                           {"in", stin},
                           {"assert_level", assert_level}};
            j["certificate"] = jrt::io::to_json(result.cert);
            j["trace"] = jrt::io::to_json(result.trace);
            Output{stout}.deliver(jrt::io::dump(j), j["config"]);
            return 0;
        }

        if (*search_cmd) {
            jrt::JrtParams p(qr, qt);
            jrt::SearchBudget budget{qnodes, qsecs};
            auto rep = jrt::min_max_degree(p, qn, qm, budget);
            ordered_json j;
            j["config"] = {{"verb", "search"}, {"r", qr},
                           {"t", qt},          {"n", qn},
                           {"m", qm},          {"budget_nodes", qnodes},
                           {"budget_secs", qsecs}};
            auto body = jrt::io::to_json(rep);
            for (auto& [key, value] : body.items()) j[key] = value;
            Output{qout}.deliver(jrt::io::dump(j), j["config"]);
            return 0;
        }

        if (*scan_cmd) {
            jrt::JrtParams p(zr, zt);
            std::vector<int> ns;
            {
                std::string cur;
                for (char ch : zn + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) ns.push_back(std::stoi(cur));
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
            }
            auto rows = jrt::phase_scan(
                p, ns,
                zstrategy == "around" ? jrt::MStrategy::around_transition : jrt::MStrategy::none,
                jrt::SearchBudget{znodes, zsecs});
            ordered_json config = {{"verb", "scan"},          {"r", zr},
                                   {"t", zt},                 {"n", zn},
                                   {"m_strategy", zstrategy}, {"budget_nodes", znodes},
                                   {"budget_secs", zsecs}};
            Output{zout}.deliver(jrt::scan_csv(rows), config);
            return 0;
        }
    } catch (const jrt::check_failure& e) {
        return fail_with_diagnostic(e.check_id, e.detail);
    } catch (const jrt::capacity_error& e) {
        return fail_with_diagnostic("capacity", e.what());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
