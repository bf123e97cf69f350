#include "indy3/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "indy3/attractor.hpp"
#include "indy3/classify.hpp"
#include "indy3/cubic.hpp"
#include "indy3/enumerate.hpp"
#include "indy3/graph.hpp"
#include "indy3/parallel.hpp"

namespace indy3 {

namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kVerifyFailure = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(Complex z) {
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string profile_string(const IndependenceProfile& p) {
    std::string s = "(";
    for (unsigned k = 0; k < p.d; ++k) s += (k ? ", " : "") + std::to_string(p.coeffs[k]);
    return s + ")";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
}

void print_report(std::ostream& out, const Cubic& p, const ClassificationReport& rep) {
    out << "P(z) = " << p.a1 << "z + " << p.a2 << "z^2 + " << p.a3 << "z^3\n";
    out << "taxonomy:    " << to_string(rep.taxonomy) << "\n";
    out << "subcase:     " << rep.subcase << "\n";
    out << "verdict:     " << to_string(rep.verdict);
    if (rep.verdict == Verdict::ExplicitSet)
        out << "  (disconnected but not totally disconnected)";
    out << "\n";
    if (rep.explicit_description) out << "attractor:   " << *rep.explicit_description << "\n";
    out << "composition: " << to_string(rep.attractor_composition) << "\n";
    out << "realizable:  " << to_string(rep.realizable) << "\n";
    out << "evidence:    " << to_string(rep.evidence) << "\n";
    const StructureReport& s = rep.structure;
    out << "critical pts:  c1 = " << fmt(s.c1) << ", c2 = " << fmt(s.c2) << "\n";
    out << "crit. values:  P(c1) = " << fmt(s.value_c1) << ", P(c2) = " << fmt(s.value_c2) << "\n";
    out << "fixed points:  0, delta1 = " << fmt(s.delta1) << ", delta2 = " << fmt(s.delta2) << "\n";
    out << "multipliers:   P'(0) = " << fmt(s.mult_zero) << ", P'(delta1) = " << fmt(s.mult_delta1)
        << ", P'(delta2) = " << fmt(s.mult_delta2) << "\n";
    out << "critical disk: center " << fmt(s.critical_disk.center) << ", radius "
        << fmt(s.critical_disk.radius) << "\n";
}

struct PointSetReport {
    // returns kVerifyFailure when flagged points exist
    static int finish(const PointSet& s, const std::string& path, std::ostream& out,
                      std::ostream& err) {
        std::ostringstream csv;
        write_point_csv(s, csv);
        write_file(path, csv.str());
        out << s.entries.size() << " distinct points (" << s.total() << " with multiplicity) -> "
            << path << "\n";
        out << "max residual " << fmt(s.max_residual) << "\n";
        if (s.flagged) {
            err << s.flagged << " points exceed the 1e-6 residual bound\n";
            return kVerifyFailure;
        }
        return kOk;
    }
};

int cmd_classify(const Cubic& p, const std::string& json_path, std::ostream& out) {
    ClassificationReport rep = classify(p);
    print_report(out, p, rep);
    if (!json_path.empty()) {
        write_file(json_path, classification_json(p, rep) + "\n");
        out << "report -> " << json_path << "\n";
    }
    return kOk;
}

int cmd_verify_tables(int table, std::ostream& out) {
    bool all_pass = true;
    for (int id = 1; id <= 5; ++id) {
        if (table != 0 && table != id) continue;
        TableReport rep = reproduce_table(id);
        for (const auto& row : rep.rows) {
            out << "Table " << id << " row (" << row.cubic.a1 << "," << row.cubic.a2 << ","
                << row.cubic.a3 << "):";
            for (const auto& cell : row.cells) {
                out << " " << cell.label << (cell.pass ? " PASS" : " FAIL");
                if (!cell.pass)
                    out << " [computed " << fmt(cell.computed) << ", expected "
                        << fmt(cell.expected) << ", tol " << fmt(cell.tol) << "]";
            }
            out << (row.pass ? "  => PASS" : "  => FAIL") << "\n";
            all_pass = all_pass && row.pass;
        }
    }
    out << (all_pass ? "all table rows PASS" : "table verification FAILED") << "\n";
    return all_pass ? kOk : kVerifyFailure;
}

int cmd_product(const std::string& graph_path, bool verify, std::ostream& out) {
    std::vector<std::string> warnings;
    Graph g = load_graph_file(graph_path, &warnings);
    for (const auto& w : warnings) out << "warning: " << w << "\n";
    IndependenceProfile p = independence_profile(g);
    out << "profile of G: " << profile_string(p) << ", independence number " << p.d << "\n";
    Graph gg = lexicographic_product(g, g);
    IndependenceProfile pp = independence_profile(gg);
    out << "profile of G*G (counted): " << profile_string(pp) << "\n";
    if (!verify) return kOk;
    std::vector<std::uint64_t> composed = composed_profile(p);
    std::string comp = "(";
    for (std::size_t i = 0; i < composed.size(); ++i)
        comp += (i ? ", " : "") + std::to_string(composed[i]);
    out << "composition coefficients:  " << comp << ")\n";
    if (composed == pp.coeffs) {
        out << "composition identity holds integer-exactly\n";
        return kOk;
    }
    out << "composition identity VIOLATED\n";
    return kVerifyFailure;
}

int cmd_family(const std::string& name, unsigned n, const std::string& emit_path,
               std::ostream& out) {
    Family fam = parse_family(name);
    Graph g = make_family(fam, n);
    IndependenceProfile p = independence_profile(g);
    out << name << "(" << n << "): " << g.size() << " vertices, " << g.edge_count()
        << " edges, profile " << profile_string(p) << "\n";
    if (p.d == 3) {
        Cubic cubic = cubic_from_profile(p);
        StructureReport s = structure_report(cubic);
        ClassificationReport rep = classify(cubic);
        out << "P(z) = " << cubic.a1 << "z + " << cubic.a2 << "z^2 + " << cubic.a3 << "z^3, "
            << to_string(rep.taxonomy) << ", verdict " << to_string(rep.verdict) << "\n";
        out << "non-zero fixed points: " << fmt(s.delta1) << ", " << fmt(s.delta2) << "\n";
    }
    if (!emit_path.empty()) {
        write_file(emit_path, format_graph(g, name + "(" + std::to_string(n) + ")"));
        out << "graph -> " << emit_path << "\n";
    }
    return kOk;
}

int cmd_witness(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::ostream& out) {
    auto g = find_witness(a1, a2, a3);
    if (!g) {
        out << "none (exhaustive over all graphs on " << a1 << " vertices)\n";
        return kOk;
    }
    out << "witness graph:\n" << format_graph(*g);
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"independence polynomials, attractor classification and rendering"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "cap worker threads (INDY3_THREADS)")
        ->envname("INDY3_THREADS");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify a cubic or a graph");
    std::vector<std::int64_t> cls_coeffs;
    std::string cls_graph, cls_json;
    classify_cmd->add_option("coeffs", cls_coeffs, "a1 a2 a3")->expected(0, 3);
    classify_cmd->add_option("--graph", cls_graph, "graph file to profile and classify");
    classify_cmd->add_option("--json", cls_json, "write the JSON report here");

    // attract
    auto* attract_cmd = app.add_subcommand("attract", "approximate the independence attractor");
    std::vector<std::int64_t> att_coeffs;
    unsigned att_depth = 10;
    std::uint64_t att_sample = 0, att_seed = 1;
    std::string att_out;
    attract_cmd->add_option("coeffs", att_coeffs, "a1 a2 a3")->expected(3);
    attract_cmd->add_option("--depth", att_depth, "backward depth (default 10)");
    attract_cmd->add_option("--sample", att_sample, "random walks instead of the full tree");
    attract_cmd->add_option("--seed", att_seed, "sampling seed (default 1)");
    attract_cmd->add_option("--out", att_out, "output CSV")->required();

    // julia
    auto* julia_cmd = app.add_subcommand("julia", "inverse-iteration Julia set sample");
    std::vector<std::int64_t> jul_coeffs;
    unsigned jul_iters = 2000;
    std::uint64_t jul_seed = 1;
    std::string jul_out;
    julia_cmd->add_option("coeffs", jul_coeffs, "a1 a2 a3")->expected(3);
    julia_cmd->add_option("--iters", jul_iters, "walk length (default 2000, min 100)");
    julia_cmd->add_option("--seed", jul_seed, "seed (default 1)");
    julia_cmd->add_option("--out", jul_out, "output CSV")->required();

    // render
    auto* render_cmd = app.add_subcommand("render", "escape-time raster of the basin boundary");
    std::vector<std::int64_t> ren_coeffs;
    std::vector<double> ren_window;
    std::string ren_size = "512x512", ren_out;
    unsigned ren_max_iter = 100;
    render_cmd->add_option("coeffs", ren_coeffs, "a1 a2 a3")->expected(3);
    render_cmd->add_option("--window", ren_window, "cx cy width height")->expected(4);
    render_cmd->add_option("--size", ren_size, "WxH (default 512x512)");
    render_cmd->add_option("--max-iter", ren_max_iter, "iteration cap (default 100)");
    render_cmd->add_option("--out", ren_out, "output PGM")->required();

    // hausdorff / diameter
    auto* haus_cmd = app.add_subcommand("hausdorff", "Hausdorff distance of two point CSVs");
    std::string haus_a, haus_b;
    haus_cmd->add_option("a", haus_a, "first CSV")->required();
    haus_cmd->add_option("b", haus_b, "second CSV")->required();

    auto* diam_cmd = app.add_subcommand("diameter", "diameter of a point CSV");
    std::string diam_a;
    diam_cmd->add_option("a", diam_a, "CSV")->required();

    // product
    auto* prod_cmd = app.add_subcommand("product", "lexicographic square of a graph");
    std::string prod_graph;
    bool prod_verify = false;
    prod_cmd->add_option("--graph", prod_graph, "graph file")->required();
    prod_cmd->add_flag("--verify", prod_verify, "check the composition identity exactly");

    // family
    auto* fam_cmd = app.add_subcommand("family", "construct a G1/G2/G3 family member");
    std::string fam_name, fam_emit;
    unsigned fam_n = 0;
    fam_cmd->add_option("name", fam_name, "G1, G2 or G3")->required();
    fam_cmd->add_option("n", fam_n, "family parameter")->required();
    fam_cmd->add_option("--emit-graph", fam_emit, "write the graph file here");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "catalog of realizable (a2, a3) per n");
    unsigned enum_n = 0;
    bool enum_n8 = false;
    std::string enum_out;
    enum_cmd->add_option("n", enum_n, "vertex count, 3..8")->required();
    enum_cmd->add_flag("--n8", enum_n8, "allow the 2^28-graph scan for n = 8");
    enum_cmd->add_option("--out", enum_out, "output CSV")->required();

    // witness
    auto* wit_cmd = app.add_subcommand("witness", "search a graph realizing (a1, a2, a3)");
    std::vector<std::int64_t> wit_coeffs;
    wit_cmd->add_option("coeffs", wit_coeffs, "a1 a2 a3")->expected(3);

    // verify-tables
    auto* tab_cmd = app.add_subcommand("verify-tables", "recompute the built-in reference tables");
    int tab_id = 0;
    tab_cmd->add_option("--table", tab_id, "check a single table (1..5)");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n";
        err << app.help();
        return kUsageError;
    }

    try {
        if (*classify_cmd) {
            if (!cls_graph.empty()) {
                std::vector<std::string> warnings;
                Graph g = load_graph_file(cls_graph, &warnings);
                for (const auto& w : warnings) out << "warning: " << w << "\n";
                IndependenceProfile p = independence_profile(g);
                out << "profile: " << profile_string(p) << ", independence number " << p.d << "\n";
                if (p.d != 3) {
                    err << "classification requires independence number 3\n";
                    return kUsageError;
                }
                return cmd_classify(cubic_from_profile(p), cls_json, out);
            }
            if (cls_coeffs.size() != 3) {
                err << "classify needs either three coefficients or --graph\n";
                return kUsageError;
            }
            return cmd_classify(Cubic(cls_coeffs[0], cls_coeffs[1], cls_coeffs[2]), cls_json, out);
        }
        if (*attract_cmd) {
            Cubic p(att_coeffs[0], att_coeffs[1], att_coeffs[2]);
            PointSet s = att_sample ? approximate_attractor(p, att_depth, {att_sample, att_seed})
                                    : approximate_attractor(p, att_depth);
            return PointSetReport::finish(s, att_out, out, err);
        }
        if (*julia_cmd) {
            Cubic p(jul_coeffs[0], jul_coeffs[1], jul_coeffs[2]);
            PointSet s = julia_inverse_sample(p, jul_iters, jul_seed);
            return PointSetReport::finish(s, jul_out, out, err);
        }
        if (*render_cmd) {
            Cubic p(ren_coeffs[0], ren_coeffs[1], ren_coeffs[2]);
            unsigned w = 0, h = 0;
            if (std::sscanf(ren_size.c_str(), "%ux%u", &w, &h) != 2 || !w || !h) {
                err << "--size must look like 640x480\n";
                return kUsageError;
            }
            Rect window = ren_window.size() == 4
                              ? Rect{ren_window[0], ren_window[1], ren_window[2], ren_window[3]}
                              : default_window(p);
            EscapeGrid grid = escape_time_grid(p, window, w, h, ren_max_iter, threads);
            std::ostringstream pgm;
            write_pgm(grid, pgm);
            write_file(ren_out, pgm.str());
            out << w << "x" << h << " escape grid, max-iter " << ren_max_iter << " -> " << ren_out
                << "\n";
            return kOk;
        }
        if (*haus_cmd) {
            // full precision: scalar results feed back into comparisons
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g\n",
                          hausdorff_distance(load_point_csv(haus_a), load_point_csv(haus_b)));
            out << buf;
            return kOk;
        }
        if (*diam_cmd) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g\n", diameter(load_point_csv(diam_a)));
            out << buf;
            return kOk;
        }
        if (*prod_cmd) return cmd_product(prod_graph, prod_verify, out);
        if (*fam_cmd) return cmd_family(fam_name, fam_n, fam_emit, out);
        if (*enum_cmd) {
            TripleCatalog cat = enumerate_realizable_triples(enum_n, enum_n8, threads);
            std::ostringstream csv;
            write_catalog_csv(cat, csv);
            write_file(enum_out, csv.str());
            out << cat.rows.size() << " distinct (a2, a3) pairs -> " << enum_out << "\n";
            return kOk;
        }
        if (*wit_cmd) return cmd_witness(wit_coeffs[0], wit_coeffs[1], wit_coeffs[2], out);
        if (*tab_cmd) return cmd_verify_tables(tab_id, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "no command\n";
    return kUsageError;
}

}  // namespace indy3
