#include "walkcent/scan.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "walkcent/plot.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walkcent {

std::string predicate_name(Predicate p) {
    switch (p) {
        case Predicate::KInterlacings: return "k-interlacings";
        case Predicate::CospectralKatzGap: return "cospectral-katz-gap";
        case Predicate::RcVsScViolation: return "rc-vs-sc-violation";
    }
    return "?";
}

std::string SearchSpec::signature() const {
    std::ostringstream os;
    os << "v1;src=";
    if (!stream_path.empty())
        os << "stream:" << stream_path;
    else
        os << "enum:" << n_min << ".." << n_max;
    os << ";connected=" << connected_only << ";pred=" << predicate_name(predicate)
       << ";measures=";
    for (Measure m : measures) os << measure_name(m) << ",";
    os << ";k=" << min_count << ";sc=" << round_trip(sc_params.lo) << ":"
       << round_trip(sc_params.hi) << ":" << sc_params.resolution << ";rc=" << round_trip(rc_margin)
       << ":" << rc_resolution << ";refine=" << round_trip(refine_tol)
       << ";gap=" << round_trip(gap_threshold);
    return os.str();
}

std::string SearchFinding::tsv() const {
    std::ostringstream os;
    os << graph6 << '\t' << i << '\t' << j << '\t' << measure_name(measure) << '\t' << count
       << '\t';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) os << ',';
        os << round_trip(values[k]);
    }
    if (values.empty()) os << '-';
    return os.str();
}

namespace {

struct WorkItem {
    std::string graph6;
    long sequence = 0;
};

// Sequential producer over either source; hands out graph6 lines.
class ItemSource {
  public:
    ItemSource(const SearchSpec& spec, std::istream* stream) : spec_(spec), stream_(stream) {
        if (!spec.stream_path.empty() && spec.n_max > 0)
            throw std::invalid_argument("search spec sets both a stream and an enumeration range");
        if (spec.stream_path.empty() && spec.n_max <= 0)
            throw std::invalid_argument("search spec sets no graph source");
        if (spec.n_max > 0) {
            if (spec.n_min < 1 || spec.n_min > spec.n_max || spec.n_max > spec.ceiling)
                throw std::invalid_argument("enumeration range out of bounds");
            n_ = spec.n_min;
        } else {
            if (stream_ == nullptr) {
                file_.open(spec.stream_path);
                if (spec.stream_path == "-")
                    stream_ = &std::cin;
                else if (!file_)
                    throw std::runtime_error("cannot open graph6 stream " + spec.stream_path);
                else
                    stream_ = &file_;
            }
        }
    }

    // Returns false at end of source. Decode problems in stream mode are
    // reported on stderr with their line number and skipped.
    bool next(WorkItem& item, long* decode_errors) {
        if (spec_.n_max > 0) {
            while (true) {
                if (pos_ >= masks_.size()) {
                    if (n_ > spec_.n_max) return false;
                    masks_ = enumerate_classes(n_, spec_.connected_only, 1);
                    order_ = n_;
                    ++n_;
                    pos_ = 0;
                    continue;
                }
                item.graph6 = mask_to_graph6(masks_[pos_++], order_);
                item.sequence = sequence_++;
                return true;
            }
        }
        std::string line;
        while (std::getline(*stream_, line)) {
            ++lineno_;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty() || line[0] == '>' || line[0] == '#') continue;  // headers/comments
            try {
                Graph g = parse_graph6(line);
                if (spec_.connected_only && !is_connected(g)) continue;
            } catch (const ParseError& e) {
                std::cerr << "line " << lineno_ << ": " << e.what() << " (record skipped)\n";
                ++*decode_errors;
                continue;
            }
            item.graph6 = line;
            item.sequence = sequence_++;
            return true;
        }
        return false;
    }

  private:
    const SearchSpec& spec_;
    std::istream* stream_ = nullptr;
    std::ifstream file_;
    std::vector<GraphMask> masks_;
    std::size_t pos_ = 0;
    int n_ = 0, order_ = 0;
    long sequence_ = 0, lineno_ = 0;
};

struct GraphOutcome {
    std::vector<SearchFinding> findings;
    long pairs = 0;
    long unstable = 0;
    bool failed = false;
    std::string error;
};

int count_at(const SpectralData& sd, const WalkTable& walks, int i, int j, Measure measure,
             const ScanParams& params) {
    DifferenceMesh mesh(sd, measure, params, 1);
    return find_interlacings(sd, &walks, i, j, measure, params, mesh).count();
}

ScanParams rc_params_for(const SearchSpec& spec, double rho) {
    return ScanParams{spec.rc_margin, (1.0 - spec.rc_margin) / rho, spec.rc_resolution,
                      spec.refine_tol};
}

ScanParams sc_params_for(const SearchSpec& spec) {
    ScanParams p = spec.sc_params;
    p.refine_tol = spec.refine_tol;
    return p;
}

double rel_gap(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0 ? std::abs(a - b) / scale : 0.0;
}

void scan_interlacings(const Graph& g, const SearchSpec& spec, const SpectralData& sd,
                       const WalkTable& walks, GraphOutcome& out) {
    const int n = g.order();
    std::vector<Measure> measures = spec.measures;
    if (spec.predicate == Predicate::RcVsScViolation) measures = {Measure::SC, Measure::RC};

    bool needs_rc = std::find(measures.begin(), measures.end(), Measure::RC) != measures.end();
    if (needs_rc && sd.rho <= 0) return;  // edgeless: no RC window, no pairs of interest

    struct PerMeasure {
        Measure measure;
        ScanParams params;
        DifferenceMesh mesh;
    };
    std::vector<PerMeasure> lanes;
    for (Measure m : measures) {
        ScanParams p = m == Measure::RC ? rc_params_for(spec, sd.rho) : sc_params_for(spec);
        lanes.push_back(PerMeasure{m, p, DifferenceMesh(sd, m, p, 1)});
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (are_cospectral(walks, i, j)) continue;
            ++out.pairs;

            if (spec.predicate == Predicate::KInterlacings) {
                for (const auto& lane : lanes) {
                    auto report =
                        find_interlacings(sd, &walks, i, j, lane.measure, lane.params, lane.mesh);
                    if (report.status != PairStatus::Ok || report.count() < spec.min_count)
                        continue;
                    ScanParams twice = lane.params;
                    twice.resolution *= 2;
                    if (count_at(sd, walks, i, j, lane.measure, twice) != report.count()) {
                        ++out.unstable;
                        continue;
                    }
                    SearchFinding f;
                    f.graph6 = to_graph6(g);
                    f.n = n;
                    f.i = i + 1;
                    f.j = j + 1;
                    f.measure = lane.measure;
                    f.count = report.count();
                    for (const auto& z : report.zeros) f.values.push_back(z.value);
                    f.bounds = report.bounds;
                    out.findings.push_back(std::move(f));
                }
            } else {  // RcVsScViolation
                auto sc_rep = find_interlacings(sd, &walks, i, j, Measure::SC, lanes[0].params,
                                                lanes[0].mesh);
                auto rc_rep = find_interlacings(sd, &walks, i, j, Measure::RC, lanes[1].params,
                                                lanes[1].mesh);
                if (sc_rep.status != PairStatus::Ok || rc_rep.status != PairStatus::Ok) continue;
                if (rc_rep.count() <= sc_rep.count()) continue;
                ScanParams sc2 = lanes[0].params, rc2 = lanes[1].params;
                sc2.resolution *= 2;
                rc2.resolution *= 2;
                if (count_at(sd, walks, i, j, Measure::SC, sc2) != sc_rep.count() ||
                    count_at(sd, walks, i, j, Measure::RC, rc2) != rc_rep.count()) {
                    ++out.unstable;
                    continue;
                }
                SearchFinding f;
                f.graph6 = to_graph6(g);
                f.n = n;
                f.i = i + 1;
                f.j = j + 1;
                f.measure = Measure::RC;
                f.count = rc_rep.count();
                for (const auto& z : rc_rep.zeros) f.values.push_back(z.value);
                f.bounds = rc_rep.bounds;
                f.rc_count = rc_rep.count();
                f.sc_count = sc_rep.count();
                out.findings.push_back(std::move(f));
            }
        }
}

void scan_katz_gaps(const Graph& g, const SearchSpec& spec, const SpectralData& sd,
                    const WalkTable& walks, GraphOutcome& out) {
    auto classes = cospectral_classes(walks);
    bool any_pair = false;
    for (const auto& cls : classes) any_pair = any_pair || cls.size() >= 2;
    if (!any_pair || sd.rho <= 0) return;

    double alpha = default_alpha(sd);
    Eigen::VectorXd kv = katz(g, alpha);
    Eigen::VectorXd tv = tc(g, 1.0);

    for (const auto& cls : classes)
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b) {
                int i = cls[a], j = cls[b];
                ++out.pairs;
                double kg = rel_gap(kv(i), kv(j));
                double tg = rel_gap(tv(i), tv(j));
                if (kg <= spec.gap_threshold || tg <= spec.gap_threshold) continue;
                // re-verify through independent routes before emitting
                Eigen::VectorXd ks = katz_spectral(g, alpha);
                Eigen::MatrixXd em = g.adjacency().exp();
                Eigen::VectorXd ts = em * Eigen::VectorXd::Ones(g.order());
                if (rel_gap(ks(i), ks(j)) <= spec.gap_threshold ||
                    rel_gap(ts(i), ts(j)) <= spec.gap_threshold) {
                    ++out.unstable;
                    continue;
                }
                SearchFinding f;
                f.graph6 = to_graph6(g);
                f.n = g.order();
                f.i = i + 1;
                f.j = j + 1;
                f.measure = Measure::Katz;
                f.count = 0;
                f.katz_gap = kg;
                f.tc_gap = tg;
                out.findings.push_back(std::move(f));
            }
}

GraphOutcome process_graph(const std::string& g6, const SearchSpec& spec) {
    GraphOutcome out;
    try {
        Graph g = parse_graph6(g6);
        WalkTable walks = walk_table(g);
        SpectralData sd = analyze_spectrum(g);
        if (spec.predicate == Predicate::CospectralKatzGap)
            scan_katz_gaps(g, spec, sd, walks, out);
        else
            scan_interlacings(g, spec, sd, walks, out);
    } catch (const std::exception& e) {
        out.failed = true;
        out.error = e.what();
    }
    return out;
}

void rank_findings(std::vector<SearchFinding>& v) {
    std::sort(v.begin(), v.end(), [](const SearchFinding& a, const SearchFinding& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.count != b.count) return a.count > b.count;
        if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return measure_name(a.measure) < measure_name(b.measure);
    });
}

struct ResumeState {
    std::string signature;
    long processed = 0;
    std::string last;
};

std::optional<ResumeState> read_resume(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    ResumeState st;
    std::string line;
    if (!std::getline(in, line) || line != "walkcent-resume 1")
        throw std::runtime_error("unrecognized resume file " + path);
    while (std::getline(in, line)) {
        if (line.rfind("sig ", 0) == 0) st.signature = line.substr(4);
        else if (line.rfind("count ", 0) == 0) st.processed = std::stol(line.substr(6));
        else if (line.rfind("last ", 0) == 0) st.last = line.substr(5);
    }
    return st;
}

void write_resume(const std::string& path, const std::string& sig, long processed,
                  const std::string& last) {
    std::ofstream out(path, std::ios::trunc);
    out << "walkcent-resume 1\n"
        << "sig " << sig << "\n"
        << "count " << processed << "\n";
    if (!last.empty()) out << "last " << last << "\n";
}

constexpr int kChunk = 256;

}  // namespace

ScanResult scan(const SearchSpec& spec, int workers, const FindingSink& sink,
                const std::string& resume_path, std::istream* stream) {
    auto t0 = std::chrono::steady_clock::now();
    ScanResult result;
    ItemSource source(spec, stream);
    const std::string sig = spec.signature();

    long skip = 0;
    if (!resume_path.empty()) {
        if (auto st = read_resume(resume_path)) {
            if (st->signature != sig)
                throw std::runtime_error("resume file " + resume_path +
                                         " was written by a different search spec; refusing");
            skip = st->processed;
        }
    }

    WorkItem item;
    std::vector<WorkItem> chunk;
    std::string last_g6;
    long processed = 0;
    bool more = true;
    while (more) {
        chunk.clear();
        while (static_cast<int>(chunk.size()) < kChunk) {
            if (!source.next(item, &result.decode_errors)) {
                more = false;
                break;
            }
            if (item.sequence < skip) {
                ++processed;
                last_g6 = item.graph6;
                continue;
            }
            chunk.push_back(item);
        }
        if (chunk.empty()) continue;

        std::vector<GraphOutcome> outcomes(chunk.size());
        const long count = static_cast<long>(chunk.size());
        if (workers == 1) {
            for (long c = 0; c < count; ++c) outcomes[c] = process_graph(chunk[c].graph6, spec);
        } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
            for (long c = 0; c < count; ++c) outcomes[c] = process_graph(chunk[c].graph6, spec);
        }

        for (long c = 0; c < count; ++c) {
            auto& oc = outcomes[c];
            ++processed;
            last_g6 = chunk[c].graph6;
            if (oc.failed) {
                std::cerr << "graph " << chunk[c].graph6 << ": " << oc.error << "\n";
                ++result.compute_errors;
                continue;
            }
            result.pairs_scanned += oc.pairs;
            result.unstable += oc.unstable;
            for (auto& f : oc.findings) {
                if (sink) sink(f);
                result.findings.push_back(std::move(f));
            }
        }
        if (!resume_path.empty()) write_resume(resume_path, sig, processed, last_g6);
    }

    result.graphs_scanned = processed;
    rank_findings(result.findings);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

ScanResult scan_serial(const SearchSpec& spec, const FindingSink& sink, std::istream* stream) {
    auto t0 = std::chrono::steady_clock::now();
    ScanResult result;
    ItemSource source(spec, stream);
    WorkItem item;
    while (source.next(item, &result.decode_errors)) {
        GraphOutcome oc = process_graph(item.graph6, spec);
        ++result.graphs_scanned;
        if (oc.failed) {
            std::cerr << "graph " << item.graph6 << ": " << oc.error << "\n";
            ++result.compute_errors;
            continue;
        }
        result.pairs_scanned += oc.pairs;
        result.unstable += oc.unstable;
        for (auto& f : oc.findings) {
            if (sink) sink(f);
            result.findings.push_back(std::move(f));
        }
    }
    rank_findings(result.findings);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace walkcent
