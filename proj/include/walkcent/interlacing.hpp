#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

#include "walkcent/centrality.hpp"
#include "walkcent/graph.hpp"
#include "walkcent/spectral.hpp"
#include "walkcent/walks.hpp"

namespace walkcent {

/// The centrality difference of a vertex pair as a function of the
/// parameter: g(beta) = sum_h e^{beta mu_h} w_h with w_h = C_{hi} - C_{hj}
/// (SC), or sum_h w_h / (1 - alpha mu_h) (RC). The w entries sum to zero;
/// w vanishes identically exactly when the pair is cospectral (the exact
/// integer verdict is authoritative, the float test only advisory).
struct DifferenceFunction {
    int i = 0, j = 0;  // 0-based
    Measure measure = Measure::SC;
    SpectralData spectral;
    Eigen::VectorXd w;
};

DifferenceFunction difference_function(const SpectralData& sd, int i, int j, Measure measure);

/// Rescaled SC difference e^{-beta rho} (SC(i) - SC(j)); finite for all beta.
double sc_difference_rescaled(const SpectralData& sd, int i, int j, double beta);
/// Raw SC difference; throws on exponent overflow like sc().
double sc_difference(const SpectralData& sd, int i, int j, double beta);
/// Series route for any kind, including general matrices.
double sc_difference_series(const Graph& g, int i, int j, double beta);
double rc_difference(const SpectralData& sd, int i, int j, double alpha);

/// Sign alternations in v after dropping entries with |v_h| <= zero_tol.
int sign_changes(std::span<const double> v, double zero_tol);

struct InterlacingBounds {
    int d_minus_1 = 0;
    int sign_change = 0;
    std::optional<int> n_minus_1;  // reported for RC only
};

/// Theoretical ceilings for a non-cospectral pair; sign_change <= d-1 always.
InterlacingBounds interlacing_bounds(const SpectralData& sd, int i, int j, Measure measure);

struct LocatedZero {
    double value = 0;       // refined location
    double bracket_lo = 0;  // final bisection bracket
    double bracket_hi = 0;
    double residual = 0;    // |rescaled difference| at the location
};

/// Near-zero local minimum of |g| without a sign change. Whether such a
/// touch counts as an interlacing value is left open; it is reported but
/// not counted.
struct Tangency {
    double location = 0;
    double magnitude = 0;
};

enum class PairStatus {
    Ok,
    Cospectral,      // no scan performed; infinitely many equalities
    IllConditioned,  // exact arithmetic says non-cospectral but floats cannot resolve w
};

struct InterlacingReport {
    int i = 0, j = 0;  // 0-based
    Measure measure = Measure::SC;
    double lo = 0, hi = 0;
    int resolution = 0;
    PairStatus status = PairStatus::Ok;
    bool exact_verdict = false;  // cospectrality decided in exact arithmetic
    std::vector<LocatedZero> zeros;  // ascending
    std::vector<Tangency> tangencies;
    std::optional<InterlacingBounds> bounds;  // absent for general matrices

    int count() const { return static_cast<int>(zeros.size()); }
};

struct ScanParams {
    double lo = 0;
    double hi = 50;
    int resolution = 10000;
    double refine_tol = 1e-9;
};

/// Default scan windows: SC (0, 50]; RC [eps, (1-eps)/rho] with eps = 1e-6.
ScanParams default_sc_params();
ScanParams default_rc_params(double rho);

inline constexpr double kTangencyThreshold = 1e-7;
inline constexpr double kCoefficientFloor = 1e-12;  // |w|_inf below this: float-cospectral

/// Mesh of the (rescaled) difference for one graph and measure; the
/// per-eigenvalue table is shared across all vertex pairs of the graph.
class DifferenceMesh {
  public:
    /// workers: 0 = all available threads, 1 = serial reference kernel.
    DifferenceMesh(const SpectralData& sd, Measure measure, const ScanParams& params,
                   int workers = 0);

    const Eigen::VectorXd& grid() const { return xs_; }
    /// out[k] = (rescaled) difference at grid point k for coefficient vector w.
    void eval_pair(const Eigen::VectorXd& w, std::span<double> out) const;
    /// Exact single-point evaluation (used by the refiners).
    double point(const Eigen::VectorXd& w, double x) const;

  private:
    Measure measure_;
    double rho_;
    Eigen::VectorXd mu_;
    Eigen::VectorXd xs_;  // resolution points, lo excluded, hi included
    Eigen::MatrixXd table_;  // resolution x d
};

/// Scan-and-refine against a prebuilt mesh. `walks` supplies the exact
/// cospectrality verdict when available (integer adjacency); pass nullptr
/// for weighted graphs to fall back to the float test.
InterlacingReport find_interlacings(const SpectralData& sd, const WalkTable* walks, int i, int j,
                                    Measure measure, const ScanParams& params,
                                    const DifferenceMesh& mesh);

/// Full-service variant: analyzes the graph, builds the mesh, scans.
/// General matrices are scanned through the series evaluator (no bounds,
/// no rescaling, no cospectrality pre-check). Katz and TC run through the
/// same mesh scan but carry no bounds: no theorem covers them, and a
/// cospectral pair may genuinely interlace (or differ) under them.
InterlacingReport find_interlacings(const Graph& g, int i, int j, Measure measure,
                                    const ScanParams& params, int workers = 0);

}  // namespace walkcent
