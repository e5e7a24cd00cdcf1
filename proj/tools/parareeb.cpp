// parareeb: exact Poincare-Reeb graphs of parabola/circle-bounded plane
// regions, tree realization, the periodic two-family window, raster
// cross-checking and the numeric lift verification.
//
// Exit codes: 0 ok, 1 parse/validation error, 2 not realizable,
//             3 oracle disagreement, 4 lift verification failure.

#include <CLI11.hpp>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "parareeb/emit.hpp"
#include "parareeb/lift.hpp"
#include "parareeb/oracle.hpp"
#include "parareeb/realize.hpp"

using namespace parareeb;
namespace fs = std::filesystem;

namespace {

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << content;
    }
    fs::rename(tmp, path);
}

Arrangement load_arrangement(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    Json j = Json::parse(is);
    return arrangement_from_json(j);
}

struct EmitFlags {
    bool dot = false, json = false, svg = false;
};

void emit_artifacts(const ReebGraph& g, const Arrangement& arr, const std::string& prefix,
                    const EmitFlags& em) {
    if (em.json) atomic_write(prefix + ".graph.json", emit_graph_json(g));
    if (em.dot) atomic_write(prefix + ".dot", emit_dot(g));
    if (em.svg) atomic_write(prefix + ".svg", emit_svg(g, arr));
}

void log_graph(const ReebGraph& g) {
    std::cout << "critical x:";
    Scalar last(Rational(0));
    bool first = true;
    for (const auto& v : g.vertices) {
        if (first || !scalar_eq(last, v.x)) {
            if (is_rational(v.x))
                std::cout << " " << rat_to_string(as_rational(v.x));
            else
                std::cout << " ~" << scalar_to_double(v.x);
            last = v.x;
            first = false;
        }
    }
    int kinds[5] = {0, 0, 0, 0, 0};
    for (const auto& v : g.vertices) ++kinds[static_cast<int>(v.kind)];
    std::cout << "\nvertices=" << g.vertices.size() << " edges=" << g.edges.size()
              << " components=" << g.component_count << " (leaf=" << kinds[0]
              << " split=" << kinds[1] << " merge=" << kinds[2] << " corner_pass=" << kinds[3]
              << " tangency_pass=" << kinds[4] << ")\n";
}

int worker_count() {
    if (const char* env = std::getenv("PARAREEB_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare-Reeb graphs of parabola- and circle-bounded plane regions"};
    app.set_config("--config", "", "key=value config file");
    app.require_subcommand(1);

    // ---- compute -----------------------------------------------------------
    auto* cmd_compute = app.add_subcommand("compute", "Poincare-Reeb graph of an arrangement");
    std::string in_path, out_prefix = "out";
    EmitFlags em;
    cmd_compute->add_option("-i,--input", in_path, "arrangement JSON")->required();
    cmd_compute->add_option("-o,--output", out_prefix, "artifact path prefix");
    cmd_compute->add_flag("--dot", em.dot, "emit DOT");
    cmd_compute->add_flag("--json", em.json, "emit graph JSON");
    cmd_compute->add_flag("--svg", em.svg, "emit SVG");

    // ---- realize -----------------------------------------------------------
    auto* cmd_realize = app.add_subcommand("realize", "realize a tree as a region");
    std::vector<std::string> tree_specs;
    std::string family = "parabola";
    std::string klass_str = "1", a0_str = "0";
    int all_upto = 0;
    unsigned seed = 0;
    cmd_realize->add_option("--tree", tree_specs, "edge list, e.g. \"1-2,2-3,2-4\"");
    cmd_realize->add_option("--family", family, "parabola | circle")
        ->check(CLI::IsMember({"parabola", "circle"}));
    cmd_realize->add_option("--a", klass_str, "parabola class |a| (rational)");
    cmd_realize->add_option("--a0", a0_str, "initial second-class parameter (rational)");
    cmd_realize->add_option("--all-upto", all_upto, "realize every tree on 2..N vertices");
    cmd_realize->add_option("--seed", seed, "plan seed");
    cmd_realize->add_option("-o,--output", out_prefix, "artifact path prefix");
    cmd_realize->add_flag("--dot", em.dot, "emit DOT");
    cmd_realize->add_flag("--json", em.json, "emit graph + arrangement JSON");
    cmd_realize->add_flag("--svg", em.svg, "emit SVG");

    // ---- theorem2 ----------------------------------------------------------
    auto* cmd_t2 = app.add_subcommand("theorem2", "periodic two-family window");
    int K = 2;
    std::string r_str = "1";
    bool literal = false;
    cmd_t2->add_option("-K", K, "window half-width in periods");
    cmd_t2->add_option("-r", r_str, "x-stretch (rational)");
    cmd_t2->add_flag("--literal-theorem2", literal, "families exactly as written (unbounded)");
    cmd_t2->add_option("-o,--output", out_prefix, "artifact path prefix");
    cmd_t2->add_flag("--dot", em.dot, "emit DOT");
    cmd_t2->add_flag("--json", em.json, "emit JSON");
    cmd_t2->add_flag("--svg", em.svg, "emit SVG");

    // ---- lift --------------------------------------------------------------
    auto* cmd_lift = app.add_subcommand("lift", "numeric verification of the lifted map");
    int m = 3, samples = 10000, liftK = 2;
    double fd_step = 1e-5;
    unsigned lift_seed = 0;
    cmd_lift->add_option("--m", m, "fiber dimension (>= 3)");
    cmd_lift->add_option("--samples", samples, "zero-set sample count");
    cmd_lift->add_option("--seed", lift_seed, "RNG seed");
    cmd_lift->add_option("--fd-step", fd_step, "finite-difference step");
    cmd_lift->add_option("-K", liftK, "window half-width");
    cmd_lift->add_option("-o,--output", out_prefix, "report path prefix");

    // ---- oracle-check ------------------------------------------------------
    auto* cmd_oracle = app.add_subcommand("oracle-check", "exact engine vs raster oracle");
    int nx = 256, ny = 256;
    std::string oracle_in;
    cmd_oracle->add_option("-i,--input", oracle_in, "arrangement JSON")->required();
    cmd_oracle->add_option("--nx", nx, "raster columns");
    cmd_oracle->add_option("--ny", ny, "raster rows");

    // ---- render ------------------------------------------------------------
    auto* cmd_render = app.add_subcommand("render", "emit DOT/SVG for an arrangement");
    std::string render_in;
    cmd_render->add_option("-i,--input", render_in, "arrangement JSON")->required();
    cmd_render->add_option("-o,--output", out_prefix, "artifact path prefix");
    cmd_render->add_flag("--dot", em.dot, "emit DOT");
    cmd_render->add_flag("--svg", em.svg, "emit SVG");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_compute) {
            Arrangement arr = load_arrangement(in_path);
            ReebGraph g = build_reeb(arr);
            log_graph(g);
            if (!em.dot && !em.json && !em.svg) em.json = true;
            emit_artifacts(g, arr, out_prefix, em);
            return 0;
        }

        if (*cmd_realize) {
            Family fam = family == "circle" ? Family::Circle : Family::Parabola;
            Rational klass = rat_from_string(klass_str);
            Rational a0 = rat_from_string(a0_str);
            if (all_upto > 0) {
                std::vector<Tree> todo;
                for (int n = 2; n <= all_upto; ++n)
                    for (const auto& t : all_trees(n)) todo.push_back(t);
                std::atomic<size_t> next{0};
                std::atomic<int> certified{0}, unreachable{0};
                int workers = worker_count();
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w) {
                    pool.emplace_back([&] {
                        for (;;) {
                            size_t i = next.fetch_add(1);
                            if (i >= todo.size()) return;
                            try {
                                auto res = realize_tree(todo[i], fam, klass, 12, seed, a0);
                                if (res.certified) ++certified;
                            } catch (const NotRealizable&) {
                                ++unreachable;
                            }
                        }
                    });
                }
                for (auto& th : pool) th.join();
                std::cout << "certified " << certified << "/" << todo.size() << ", not realizable "
                          << unreachable << "\n";
                return unreachable > (fam == Family::Parabola && all_upto >= 2 ? 1 : 0) ? 2 : 0;
            }
            if (tree_specs.empty()) {
                std::cerr << "realize: need --tree or --all-upto\n";
                return 1;
            }
            int rc = 0;
            for (size_t i = 0; i < tree_specs.size(); ++i) {
                Tree t = parse_tree_edges(tree_specs[i]);
                std::string prefix =
                    tree_specs.size() == 1 ? out_prefix : out_prefix + "." + std::to_string(i);
                try {
                    auto res = realize_tree(t, fam, klass, 12, seed, a0);
                    std::cout << "tree " << canonical_code(t) << ": certified in " << res.attempts
                              << " attempt(s), " << res.arrangement.halves.size() << " curves\n";
                    log_graph(res.graph);
                    if (em.json) {
                        atomic_write(prefix + ".arrangement.json",
                                     arrangement_to_json(res.arrangement).dump(2) + "\n");
                    }
                    if (!em.dot && !em.json && !em.svg) em.json = true;
                    emit_artifacts(res.graph, res.arrangement, prefix, em);
                } catch (const NotRealizable& e) {
                    std::cerr << "not realizable: " << e.what() << "\n";
                    rc = 2;
                }
            }
            return rc;
        }

        if (*cmd_t2) {
            Rational r = rat_from_string(r_str);
            Arrangement arr = theorem2_arrangement(K, r, literal);
            atomic_write(out_prefix + ".arrangement.json", arrangement_to_json(arr).dump(2) + "\n");
            if (literal) {
                std::cout << "literal-sign family written (region unbounded as written; compute "
                             "will refuse)\n";
                return 0;
            }
            ReebGraph g = build_reeb(arr);
            log_graph(g);
            emit_artifacts(g, arr, out_prefix, em);
            return 0;
        }

        if (*cmd_lift) {
            LiftReport rep = verify_lift(m, samples, lift_seed, fd_step, liftK);
            Json j;
            j["samples"] = rep.samples;
            j["rank2_fraction"] = rep.rank2_fraction;
            j["membership_fraction"] = rep.membership_fraction;
            j["coverage"] = rep.coverage;
            j["skip_rate"] = rep.skip_rate;
            j["seed"] = rep.seed;
            j["max_residual"] = rep.max_residual;
            j["negative_control_flagged"] = rep.negative_control_flagged;
            atomic_write(out_prefix + ".lift.json", j.dump(2) + "\n");
            std::cout << j.dump(2) << "\n";
            bool ok = rep.max_residual < 1e-10 && rep.rank2_fraction >= 0.999 &&
                      rep.membership_fraction == 1.0 && rep.coverage >= 0.99 &&
                      rep.negative_control_flagged;
            return ok ? 0 : 4;
        }

        if (*cmd_oracle) {
            Arrangement arr = load_arrangement(oracle_in);
            ReebGraph g = build_reeb(arr);
            RasterGraph r = raster_reeb_stable(arr, nx, ny);
            auto v = agree(g, r);
            if (v.agree) {
                std::cout << "agree (stable at " << r.stable_at << "x" << r.stable_at << ")\n";
                return 0;
            }
            std::cerr << "disagree: " << v.diagnostics << "\n";
            return 3;
        }

        if (*cmd_render) {
            Arrangement arr = load_arrangement(render_in);
            ReebGraph g = build_reeb(arr);
            if (!em.dot && !em.svg) em.svg = true;
            emit_artifacts(g, arr, out_prefix, em);
            return 0;
        }
    } catch (const NotRealizable& e) {
        std::cerr << "not realizable: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
