#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "walkcent/centrality.hpp"
#include "walkcent/enumerate.hpp"
#include "walkcent/interlacing.hpp"

namespace walkcent {

enum class Predicate {
    KInterlacings,       // >= min_count interlacing values for some measure
    CospectralKatzGap,   // cospectral pair with differing Katz AND TC
    RcVsScViolation,     // pair with more RC interlacings than SC ones
};

std::string predicate_name(Predicate p);

struct SearchSpec {
    // Source: either an internal enumeration range or a graph6 stream path
    // ("-" = stdin). Exactly one must be set.
    int n_min = 0, n_max = 0;  // n_max == 0: no internal enumeration
    std::string stream_path;
    bool connected_only = true;

    std::vector<Measure> measures{Measure::SC};
    int min_count = 1;
    Predicate predicate = Predicate::KInterlacings;

    ScanParams sc_params = default_sc_params();
    double rc_margin = 1e-6;  // RC window [margin, (1-margin)/rho]
    int rc_resolution = 10000;
    double refine_tol = 1e-9;

    double gap_threshold = 1e-8;  // Katz/TC relative gap (CospectralKatzGap)
    int ceiling = kEnumerationCeiling;

    /// Deterministic serialization used to guard resume files.
    std::string signature() const;
};

struct SearchFinding {
    std::string graph6;
    int n = 0;
    int i = 0, j = 0;  // 1-based, as printed
    Measure measure = Measure::SC;
    int count = 0;
    std::vector<double> values;
    std::optional<InterlacingBounds> bounds;
    // CospectralKatzGap payload
    double katz_gap = 0, tc_gap = 0;
    // RcVsScViolation payload
    int rc_count = 0, sc_count = 0;

    std::string tsv() const;  // graph6, i, j, measure, count, values
};

struct ScanResult {
    std::vector<SearchFinding> findings;  // ranked: n asc, count desc, graph6, pair
    long graphs_scanned = 0;
    long pairs_scanned = 0;
    long unstable = 0;        // findings dropped by the re-verification pass
    long decode_errors = 0;   // bad stream records (reported, scan continues)
    long compute_errors = 0;  // graphs whose analysis failed (reported, scan continues)
    double seconds = 0;
};

using FindingSink = std::function<void(const SearchFinding&)>;

/// OpenMP scan: graphs are processed in chunks, one graph per task; findings
/// are merged in input order, so output is independent of the schedule.
/// `resume_path`, when nonempty, persists progress every few chunks and
/// refuses to resume under a different spec signature.
ScanResult scan(const SearchSpec& spec, int workers, const FindingSink& sink = {},
                const std::string& resume_path = {}, std::istream* stream = nullptr);

/// Serial reference implementation kept for testing; must produce findings
/// identical to scan().
ScanResult scan_serial(const SearchSpec& spec, const FindingSink& sink = {},
                       std::istream* stream = nullptr);

}  // namespace walkcent
