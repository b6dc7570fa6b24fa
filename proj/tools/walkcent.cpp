// walkcent: walk-based centrality analysis, cospectrality checks,
// interlacing detection, and small-graph searching.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "walkcent/centrality.hpp"
#include "walkcent/enumerate.hpp"
#include "walkcent/graph.hpp"
#include "walkcent/interlacing.hpp"
#include "walkcent/plot.hpp"
#include "walkcent/scan.hpp"
#include "walkcent/spectral.hpp"
#include "walkcent/walks.hpp"

using nlohmann::json;
using namespace walkcent;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // "not walk regular" / "no interlacing found"
constexpr int kExitError = 2;
constexpr int kExitCospectral = 3;  // interlace: pair is cospectral / indistinguishable

std::string fmt12(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Edge-list files start with a bare integer line; graph6 bytes never look
// like decimal digits, so the first token decides.
Graph load_graph(const std::string& input_path, const std::string& g6) {
    if (!g6.empty()) return parse_graph6(g6);
    if (input_path.empty()) throw std::runtime_error("no graph given (use --input or --g6)");
    std::string text = read_file(input_path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        bool digits = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
        if (digits) return parse_edge_list(text);
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        return parse_graph6(line);
    }
    throw std::runtime_error("no graph found in " + input_path);
}

int env_workers() {
    if (const char* env = std::getenv("WALKCENT_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0;  // all available
}

Measure parse_measure(const std::string& name) {
    if (name == "sc") return Measure::SC;
    if (name == "rc") return Measure::RC;
    if (name == "katz") return Measure::Katz;
    if (name == "tc") return Measure::TC;
    throw CLI::ValidationError("--measure", "unknown measure '" + name + "'");
}

std::string classes_text(const std::vector<std::vector<int>>& classes) {
    std::ostringstream os;
    for (const auto& cls : classes) {
        os << '{';
        for (std::size_t k = 0; k < cls.size(); ++k) os << (k ? " " : "") << cls[k] + 1;
        os << "} ";
    }
    return os.str();
}

// ---------------- analyze ----------------

struct AnalyzeArgs {
    std::string input, g6, format = "table";
    double beta = 1.0;
    double alpha = 0.0;  // 0: default 1/(2 rho)
};

int cmd_analyze(const AnalyzeArgs& args) {
    Graph g = load_graph(args.input, args.g6);
    if (g.kind() == GraphKind::GeneralMatrix)
        throw std::runtime_error("analyze handles undirected kinds only");
    const int n = g.order();
    if (n == 0) throw std::runtime_error("empty graph");

    SpectralData sd = analyze_spectrum(g);
    double alpha = args.alpha > 0 ? args.alpha : (sd.rho > 0 ? default_alpha(sd) : 0.5);

    bool exact = g.integral_weights();
    auto classes = exact ? cospectral_classes(g) : cospectral_classes_numerical(sd);
    bool walk_regular = classes.size() == 1;

    CentralityProfile scp = sc_profile(sd, args.beta);
    CentralityProfile rcp = rc_profile(g, alpha);
    Eigen::VectorXd kv = katz(g, alpha);
    Eigen::VectorXd tv = tc(g, args.beta);
    bool connected = is_connected(g);
    Eigen::VectorXd ecv;
    if (connected) ecv = ec(g);
    double entropy = walk_entropy(sd, args.beta);

    if (args.format == "json") {
        json out;
        out["n"] = n;
        out["beta"] = args.beta;
        out["alpha"] = alpha;
        out["sc_rescaled"] = scp.rescaled;
        out["distinct_eigenvalues"] = sd.d();
        for (int h = 0; h < sd.d(); ++h) {
            out["spectrum"].push_back(
                {{"mu", sd.mu(h)}, {"multiplicity", sd.mult[h]}});
        }
        out["spectral_radius"] = sd.rho;
        out["walk_regular"] = walk_regular;
        out["cospectral_verdict"] = exact ? "exact" : "numerical";
        for (const auto& cls : classes) {
            json c = json::array();
            for (int v : cls) c.push_back(v + 1);
            out["cospectral_classes"].push_back(c);
        }
        out["walk_entropy"] = entropy;
        for (int i = 0; i < n; ++i) {
            json row;
            row["vertex"] = i + 1;
            row["degree"] = degree(g, i);
            if (connected) row["ec"] = ecv(i);
            row["sc"] = scp.scores(i);
            row["rc"] = rcp.scores(i);
            row["katz"] = kv(i);
            row["tc"] = tv(i);
            out["vertices"].push_back(row);
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::ostream& os = std::cout;
    const char sep = args.format == "csv" ? ',' : '\t';
    if (args.format == "csv")
        os << "vertex,degree,ec,sc,rc,katz,tc\n";
    else
        os << "vertex\tdegree\tec\tsc(beta=" << fmt12(args.beta) << ")\trc(alpha="
           << fmt12(alpha) << ")\tkatz\ttc\n";
    for (int i = 0; i < n; ++i) {
        os << i + 1 << sep << fmt12(degree(g, i)) << sep << (connected ? fmt12(ecv(i)) : "-")
           << sep << fmt12(scp.scores(i)) << sep << fmt12(rcp.scores(i)) << sep << fmt12(kv(i))
           << sep << fmt12(tv(i)) << "\n";
    }
    if (args.format != "csv") {
        os << "\nspectrum: d = " << sd.d() << ", mu (multiplicity):";
        for (int h = 0; h < sd.d(); ++h)
            os << " " << fmt12(sd.mu(h)) << " (" << sd.mult[h] << ")";
        os << "\nspectral radius: " << fmt12(sd.rho) << "\n";
        if (scp.rescaled) os << "note: SC scores rescaled by e^(-beta*rho)\n";
        os << "cospectral classes (" << (exact ? "exact" : "numerical")
           << "): " << classes_text(classes) << "\n";
        os << "walk regular: " << (walk_regular ? "yes" : "no") << "\n";
        os << "walk entropy (beta = " << fmt12(args.beta) << "): " << fmt12(entropy)
           << "  [ln n = " << fmt12(std::log(double(n))) << "]\n";
    }
    return kExitOk;
}

// ---------------- interlace ----------------

struct InterlaceArgs {
    std::string input, g6, format = "table", plot;
    std::vector<int> pair;
    std::string measure = "sc";
    double beta_max = 50.0;
    double alpha_margin = 1e-6;
    int resolution = 10000;
    double refine_tol = 1e-9;
    int workers = env_workers();
};

json report_json(const InterlacingReport& r) {
    json out;
    out["i"] = r.i + 1;
    out["j"] = r.j + 1;
    out["measure"] = measure_name(r.measure);
    out["interval"] = {r.lo, r.hi};
    out["resolution"] = r.resolution;
    out["status"] = r.status == PairStatus::Ok
                        ? "ok"
                        : (r.status == PairStatus::Cospectral ? "cospectral" : "ill-conditioned");
    out["exact_verdict"] = r.exact_verdict;
    out["count"] = r.count();
    for (const auto& z : r.zeros)
        out["zeros"].push_back({{"value", z.value},
                                {"bracket", {z.bracket_lo, z.bracket_hi}},
                                {"residual", z.residual}});
    for (const auto& t : r.tangencies)
        out["tangencies"].push_back({{"location", t.location}, {"magnitude", t.magnitude}});
    if (r.bounds) {
        out["bounds"]["d_minus_1"] = r.bounds->d_minus_1;
        out["bounds"]["sign_change"] = r.bounds->sign_change;
        if (r.bounds->n_minus_1) out["bounds"]["n_minus_1"] = *r.bounds->n_minus_1;
    }
    return out;
}

int cmd_interlace(const InterlaceArgs& args) {
    Graph g = load_graph(args.input, args.g6);
    if (args.pair.size() != 2) throw std::runtime_error("--pair takes exactly two labels");
    int i = args.pair[0] - 1, j = args.pair[1] - 1;
    if (i < 0 || j < 0 || i >= g.order() || j >= g.order())
        throw std::runtime_error("pair labels out of range 1.." + std::to_string(g.order()));
    if (i == j) throw std::runtime_error("--pair needs two distinct vertices");
    Measure measure = parse_measure(args.measure);

    ScanParams params;
    params.resolution = args.resolution;
    params.refine_tol = args.refine_tol;
    if (measure == Measure::RC || measure == Measure::Katz) {
        double rho = spectral_radius(g);
        if (rho <= 0) throw std::runtime_error("resolvent window undefined: spectral radius is 0");
        params.lo = args.alpha_margin;
        params.hi = (1.0 - args.alpha_margin) / rho;
    } else {
        params.lo = 0.0;
        params.hi = args.beta_max;
    }

    InterlacingReport r = find_interlacings(g, i, j, measure, params, args.workers);

    if (!args.plot.empty() && r.status == PairStatus::Ok) {
        // re-evaluate the mesh for the plot payload
        std::vector<double> xs(params.resolution), ys(params.resolution);
        if (g.kind() == GraphKind::GeneralMatrix) {
            double step = (params.hi - params.lo) / params.resolution;
            for (int k = 0; k < params.resolution; ++k) {
                xs[k] = (k + 1 == params.resolution) ? params.hi : params.lo + step * (k + 1);
                ys[k] = sc_difference_series(g, i, j, xs[k]);
            }
        } else if (measure == Measure::SC || measure == Measure::RC) {
            SpectralData sd = analyze_spectrum(g);
            DifferenceMesh mesh(sd, measure, params, args.workers);
            Eigen::VectorXd w = sd.C.col(i) - sd.C.col(j);
            for (int k = 0; k < params.resolution; ++k) xs[k] = mesh.grid()(k);
            mesh.eval_pair(w, ys);
        } else {
            throw std::runtime_error("--plot supports sc and rc measures");
        }
        std::vector<double> crossings;
        for (const auto& z : r.zeros) crossings.push_back(z.value);

        std::string svg_path = args.plot;
        std::string csv_path = args.plot;
        if (auto dot = csv_path.rfind('.'); dot != std::string::npos)
            csv_path = csv_path.substr(0, dot);
        csv_path += ".csv";
        std::ofstream svg(svg_path);
        if (!svg) throw std::runtime_error("cannot write " + svg_path);
        std::string ylab = measure == Measure::RC
                               ? "RC difference"
                               : "rescaled SC difference";
        write_line_chart_svg(svg, xs, ys, crossings,
                             measure_name(measure) + std::string(" difference, pair (") +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                             measure == Measure::RC ? "alpha" : "beta", ylab);
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        write_difference_csv(csv, xs, ys);
        std::cerr << "wrote " << svg_path << " and " << csv_path << "\n";
    }

    if (args.format == "json") {
        std::cout << report_json(r).dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "kind,location,extra\n";
        for (const auto& z : r.zeros)
            std::cout << "zero," << round_trip(z.value) << "," << round_trip(z.residual) << "\n";
        for (const auto& t : r.tangencies)
            std::cout << "tangency," << round_trip(t.location) << "," << round_trip(t.magnitude)
                      << "\n";
    } else {
        std::cout << "pair (" << i + 1 << ", " << j + 1 << "), measure " << measure_name(measure)
                  << ", interval (" << fmt12(params.lo) << ", " << fmt12(params.hi)
                  << "], resolution " << params.resolution << "\n";
        if (r.status == PairStatus::Cospectral) {
            std::cout << "pair is cospectral (" << (r.exact_verdict ? "exact" : "numerical")
                      << " verdict): equal for every parameter; no interlacing values\n";
        } else if (r.status == PairStatus::IllConditioned) {
            std::cout << "ill-conditioned pair: exact arithmetic separates the vertices but "
                         "floating point cannot; no zeros reported\n";
        } else {
            std::cout << "interlacing values found: " << r.count() << "\n";
            for (const auto& z : r.zeros)
                std::cout << "  " << fmt12(z.value) << "  (bracket width "
                          << fmt12(z.bracket_hi - z.bracket_lo) << ", residual "
                          << fmt12(z.residual) << ")\n";
            for (const auto& t : r.tangencies)
                std::cout << "  tangency warning near " << fmt12(t.location) << " (|difference| "
                          << fmt12(t.magnitude) << ", no sign change)\n";
            if (r.bounds) {
                std::cout << "bounds: sign-change " << r.bounds->sign_change << ", d-1 "
                          << r.bounds->d_minus_1;
                if (r.bounds->n_minus_1) std::cout << ", n-1 " << *r.bounds->n_minus_1;
                std::cout << "\n";
            } else {
                std::cout << "bounds: none apply to this measure/kind\n";
            }
        }
    }
    if (r.status != PairStatus::Ok) return kExitCospectral;
    return r.count() > 0 ? kExitOk : kExitNegative;
}

// ---------------- search ----------------

struct SearchArgs {
    std::string input, n_range, format = "table", resume;
    std::string measure = "sc";
    std::string predicate = "kinterlace";
    int min_count = 1;
    bool connected_only = true;
    double beta_max = 50.0;
    double alpha_margin = 1e-6;
    int resolution = 10000;
    double refine_tol = 1e-9;
    int workers = env_workers();
};

int cmd_search(const SearchArgs& args) {
    SearchSpec spec;
    if (!args.n_range.empty()) {
        auto dash = args.n_range.find_first_of("-.");
        if (dash == std::string::npos) {
            spec.n_min = spec.n_max = std::stoi(args.n_range);
        } else {
            spec.n_min = std::stoi(args.n_range.substr(0, dash));
            auto rest = args.n_range.find_first_not_of("-.", dash);
            spec.n_max = std::stoi(args.n_range.substr(rest));
        }
    }
    spec.stream_path = args.input;
    spec.connected_only = args.connected_only;
    spec.min_count = args.min_count;
    spec.measures = {parse_measure(args.measure)};
    if (args.predicate == "kinterlace")
        spec.predicate = Predicate::KInterlacings;
    else if (args.predicate == "katz-gap")
        spec.predicate = Predicate::CospectralKatzGap;
    else if (args.predicate == "rc-vs-sc")
        spec.predicate = Predicate::RcVsScViolation;
    else
        throw std::runtime_error("unknown predicate '" + args.predicate + "'");
    spec.sc_params = ScanParams{0.0, args.beta_max, args.resolution, args.refine_tol};
    spec.rc_margin = args.alpha_margin;
    spec.rc_resolution = args.resolution;
    spec.refine_tol = args.refine_tol;

    bool stream_tsv = args.format != "json";
    FindingSink sink;
    if (stream_tsv) sink = [](const SearchFinding& f) { std::cout << f.tsv() << "\n"; };

    ScanResult result = scan(spec, args.workers, sink, args.resume);

    if (args.format == "json") {
        json out;
        out["spec"] = spec.signature();
        out["graphs_scanned"] = result.graphs_scanned;
        out["pairs_scanned"] = result.pairs_scanned;
        out["unstable"] = result.unstable;
        out["decode_errors"] = result.decode_errors;
        out["compute_errors"] = result.compute_errors;
        out["seconds"] = result.seconds;
        for (const auto& f : result.findings) {
            json jf;
            jf["graph6"] = f.graph6;
            jf["n"] = f.n;
            jf["i"] = f.i;
            jf["j"] = f.j;
            jf["measure"] = measure_name(f.measure);
            jf["count"] = f.count;
            jf["values"] = f.values;
            if (f.bounds) {
                jf["bounds"]["d_minus_1"] = f.bounds->d_minus_1;
                jf["bounds"]["sign_change"] = f.bounds->sign_change;
            }
            if (spec.predicate == Predicate::CospectralKatzGap) {
                jf["katz_gap"] = f.katz_gap;
                jf["tc_gap"] = f.tc_gap;
            }
            if (spec.predicate == Predicate::RcVsScViolation) {
                jf["rc_count"] = f.rc_count;
                jf["sc_count"] = f.sc_count;
            }
            out["findings"].push_back(jf);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cerr << "ranked findings: " << result.findings.size() << "\n";
    }
    std::cerr << "scanned " << result.graphs_scanned << " graphs, " << result.pairs_scanned
              << " pairs; " << result.findings.size() << " findings, " << result.unstable
              << " unstable, " << result.decode_errors << " decode errors, "
              << result.compute_errors << " compute errors; " << fmt12(result.seconds) << " s\n";
    return kExitOk;
}

// ---------------- cospectral ----------------

struct CospectralArgs {
    std::string input, g6, format = "table";
};

int cmd_cospectral(const CospectralArgs& args) {
    Graph g = load_graph(args.input, args.g6);
    if (!g.integral_weights())
        throw std::runtime_error(
            "exact cospectrality requires integer weights (analyze reports the numerical "
            "grouping for rational weights)");
    auto classes = cospectral_classes(g);
    bool regular = classes.size() == 1;
    if (args.format == "json") {
        json out;
        out["walk_regular"] = regular;
        for (const auto& cls : classes) {
            json c = json::array();
            for (int v : cls) c.push_back(v + 1);
            out["classes"].push_back(c);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "cospectral classes (exact): " << classes_text(classes) << "\n";
        std::cout << "walk regular: " << (regular ? "yes" : "no") << "\n";
    }
    return regular ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walk-based centralities, cospectrality, and interlacing"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "per-vertex centralities and spectrum summary");
    analyze->add_option("--input", aa.input, "edge-list or graph6 file ('-' for stdin)");
    analyze->add_option("--g6", aa.g6, "inline graph6 string");
    analyze->add_option("--beta", aa.beta, "SC/TC parameter (default 1)");
    analyze->add_option("--alpha", aa.alpha, "RC/Katz parameter (default 1/(2 rho))");
    analyze->add_option("--format", aa.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    InterlaceArgs ia;
    auto* interlace = app.add_subcommand("interlace", "locate interlacing values for a pair");
    interlace->add_option("--input", ia.input, "edge-list or graph6 file ('-' for stdin)");
    interlace->add_option("--g6", ia.g6, "inline graph6 string");
    interlace->add_option("--pair", ia.pair, "two 1-based vertex labels")->expected(2);
    interlace->add_option("--measure", ia.measure, "sc|rc|katz|tc");
    interlace->add_option("--beta-max", ia.beta_max, "SC/TC scan upper end (default 50)");
    interlace->add_option("--alpha-margin", ia.alpha_margin,
                          "RC window margin eps: [eps, (1-eps)/rho]");
    interlace->add_option("--resolution", ia.resolution, "mesh points (default 10000)");
    interlace->add_option("--refine-tol", ia.refine_tol, "bisection bracket width (default 1e-9)");
    interlace->add_option("--workers", ia.workers, "thread count (default WALKCENT_WORKERS/all)");
    interlace->add_option("--plot", ia.plot, "write an SVG here plus a .csv of the mesh");
    interlace->add_option("--format", ia.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "scan many graphs for interlacing anomalies");
    search->add_option("--n", sa.n_range, "internal enumeration order, e.g. 8 or 4-8");
    search->add_option("--input", sa.input, "graph6 stream file ('-' for stdin)");
    search->add_flag("--connected-only,!--all-graphs", sa.connected_only,
                     "restrict to connected graphs (default on)");
    search->add_option("--measure", sa.measure, "sc|rc|katz|tc");
    search->add_option("--predicate", sa.predicate, "kinterlace|katz-gap|rc-vs-sc");
    search->add_option("--min-count", sa.min_count, "minimum interlacing count k");
    search->add_option("--beta-max", sa.beta_max, "SC scan upper end");
    search->add_option("--alpha-margin", sa.alpha_margin, "RC window margin");
    search->add_option("--resolution", sa.resolution, "mesh points per pair");
    search->add_option("--refine-tol", sa.refine_tol, "bisection bracket width");
    search->add_option("--workers", sa.workers, "thread count (default WALKCENT_WORKERS/all)");
    search->add_option("--resume", sa.resume, "checkpoint file; refuses on spec mismatch");
    search->add_option("--format", sa.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    CospectralArgs ca;
    auto* cosp = app.add_subcommand("cospectral", "exact cospectral classes and walk regularity");
    cosp->add_option("--input", ca.input, "edge-list or graph6 file ('-' for stdin)");
    cosp->add_option("--g6", ca.g6, "inline graph6 string");
    cosp->add_option("--format", ca.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
        if (*analyze) return cmd_analyze(aa);
        if (*interlace) return cmd_interlace(ia);
        if (*search) return cmd_search(sa);
        if (*cosp) return cmd_cospectral(ca);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
