#include "walkcent/interlacing.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walkcent {

DifferenceFunction difference_function(const SpectralData& sd, int i, int j, Measure measure) {
    if (measure != Measure::SC && measure != Measure::RC)
        throw std::invalid_argument("difference functions exist for SC and RC only");
    if (i < 0 || j < 0 || i >= sd.order() || j >= sd.order())
        throw std::invalid_argument("vertex out of range");
    DifferenceFunction f{i, j, measure, sd, sd.C.col(i) - sd.C.col(j)};
    double drift = f.w.sum();
    if (std::abs(drift) > 1e-10)
        throw std::runtime_error("difference coefficients do not sum to zero");
    return f;
}

double sc_difference_rescaled(const SpectralData& sd, int i, int j, double beta) {
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
    Eigen::VectorXd w = sd.C.col(i) - sd.C.col(j);
    return (beta * (sd.mu.array() - sd.rho)).exp().matrix().dot(w);
}

double sc_difference(const SpectralData& sd, int i, int j, double beta) {
    return sc(sd, beta, i) - sc(sd, beta, j);
}

double sc_difference_series(const Graph& g, int i, int j, double beta) {
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
    Eigen::MatrixXd e = (beta * g.adjacency()).exp();
    return e(i, i) - e(j, j);
}

double rc_difference(const SpectralData& sd, int i, int j, double alpha) {
    return rc_spectral(sd, alpha, i) - rc_spectral(sd, alpha, j);
}

int sign_changes(std::span<const double> v, double zero_tol) {
    int changes = 0;
    int last = 0;
    for (double x : v) {
        if (std::abs(x) <= zero_tol) continue;  // zeros are ignored
        int s = x > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

InterlacingBounds interlacing_bounds(const SpectralData& sd, int i, int j, Measure measure) {
    DifferenceFunction f = difference_function(sd, i, j, measure);
    double winf = f.w.cwiseAbs().maxCoeff();
    if (winf < kCoefficientFloor)
        throw std::invalid_argument("bounds are vacuous for a cospectral pair");
    InterlacingBounds b;
    b.d_minus_1 = sd.d() - 1;
    b.sign_change = sign_changes(std::span<const double>(f.w.data(), f.w.size()), 1e-10 * winf);
    if (measure == Measure::RC) b.n_minus_1 = sd.order() - 1;
    if (b.sign_change > b.d_minus_1)
        throw std::logic_error("sign-change bound exceeded d-1");
    return b;
}

ScanParams default_sc_params() { return ScanParams{0.0, 50.0, 10000, 1e-9}; }

ScanParams default_rc_params(double rho) {
    if (!(rho > 0)) throw std::domain_error("RC scan window undefined for an edgeless graph");
    constexpr double eps = 1e-6;
    return ScanParams{eps, (1.0 - eps) / rho, 10000, 1e-9};
}

namespace {

void validate_params(const ScanParams& p, Measure measure, double rho) {
    if (!(p.lo >= 0) || !(p.hi > p.lo)) throw std::domain_error("invalid scan interval");
    if (p.resolution < 2) throw std::domain_error("resolution must be at least 2");
    if (!(p.refine_tol > 0)) throw std::domain_error("refine_tol must be positive");
    if (measure == Measure::RC) {
        if (!(rho > 0) || !(p.hi * rho < 1.0))
            throw std::domain_error("RC scan interval must stay inside (0, 1/rho)");
        if (!(p.lo > 0)) throw std::domain_error("RC scan interval must exclude 0");
    }
}

}  // namespace

DifferenceMesh::DifferenceMesh(const SpectralData& sd, Measure measure, const ScanParams& params,
                               int workers)
    : measure_(measure), rho_(sd.rho), mu_(sd.mu) {
    validate_params(params, measure, sd.rho);
    const int res = params.resolution;
    const int d = sd.d();
    const double step = (params.hi - params.lo) / res;
    xs_.resize(res);
    table_.resize(res, d);

    auto fill_row = [&](int k) {
        // lo excluded, hi included: the left end is outside the domain
        double x = (k + 1 == res) ? params.hi : params.lo + step * (k + 1);
        xs_(k) = x;
        for (int h = 0; h < d; ++h)
            table_(k, h) = measure_ == Measure::SC ? std::exp(x * (mu_(h) - rho_))
                                                   : 1.0 / (1.0 - x * mu_(h));
    };

    if (workers == 1) {
        for (int k = 0; k < res; ++k) fill_row(k);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
        for (int k = 0; k < res; ++k) fill_row(k);
    }
}

void DifferenceMesh::eval_pair(const Eigen::VectorXd& w, std::span<double> out) const {
    Eigen::Map<Eigen::VectorXd>(out.data(), out.size()) = table_ * w;
}

double DifferenceMesh::point(const Eigen::VectorXd& w, double x) const {
    double sum = 0;
    for (int h = 0; h < mu_.size(); ++h)
        sum += w(h) * (measure_ == Measure::SC ? std::exp(x * (mu_(h) - rho_))
                                               : 1.0 / (1.0 - x * mu_(h)));
    return sum;
}

namespace {

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

LocatedZero bisect(const std::function<double(double)>& f, double lo, double hi, double flo,
                   double tol) {
    // keep the sign convention of the left end; refine to |hi-lo| <= tol
    int slo = sign_of(flo);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (sign_of(fm) == slo)
            lo = mid;
        else
            hi = mid;
    }
    double z = 0.5 * (lo + hi);
    return LocatedZero{z, lo, hi, std::abs(f(z))};
}

double ternary_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
    for (int iter = 0; iter < 300 && hi - lo > tol; ++iter) {
        double m1 = lo + (hi - lo) / 3.0;
        double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) <= f(m2))
            hi = m2;
        else
            lo = m1;
    }
    return 0.5 * (lo + hi);
}

struct MeshScan {
    std::vector<LocatedZero> zeros;
    std::vector<Tangency> tangencies;
};

// Sign-change scan with bisection refinement, plus refined local minima of
// |g| that reach below the tangency threshold without a crossing. Values
// with |v| <= zero_floor carry no sign (the convention that zeros are
// ignored when counting sign changes); the floor keeps evaluation noise at
// tangential touches from registering as crossings.
MeshScan scan_mesh(const Eigen::VectorXd& xs, const std::vector<double>& vals,
                   const std::function<double(double)>& f, double refine_tol,
                   double zero_floor) {
    MeshScan out;
    const int res = static_cast<int>(xs.size());

    auto floored_sign = [&](double v) { return std::abs(v) <= zero_floor ? 0 : sign_of(v); };

    int last_sign = 0;
    int last_idx = -1;
    std::vector<char> near_crossing(res, 0);
    for (int k = 0; k < res; ++k) {
        int s = floored_sign(vals[k]);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
            out.zeros.push_back(bisect(f, xs(last_idx), xs(k), vals[last_idx], refine_tol));
            for (int m = std::max(0, last_idx - 1); m <= std::min(res - 1, k + 1); ++m)
                near_crossing[m] = 1;
        }
        last_sign = s;
        last_idx = k;
    }

    // tangency candidates: interior local minima of |g| plus a right-boundary
    // minimum; anything adjacent to a located crossing is that crossing
    auto consider = [&](int k, double lo, double hi) {
        if (near_crossing[k]) return;
        double x = ternary_min([&](double t) { return std::abs(f(t)); }, lo, hi, refine_tol);
        double m = std::abs(f(x));
        if (m < kTangencyThreshold) out.tangencies.push_back(Tangency{x, m});
    };
    for (int k = 1; k + 1 < res; ++k) {
        double a = std::abs(vals[k]);
        if (a <= std::abs(vals[k - 1]) && a <= std::abs(vals[k + 1]) &&
            (a < std::abs(vals[k - 1]) || a < std::abs(vals[k + 1])))
            consider(k, xs(k - 1), xs(k + 1));
    }
    if (res >= 2 && std::abs(vals[res - 1]) < std::abs(vals[res - 2]))
        consider(res - 1, xs(res - 2), xs(res - 1));

    std::sort(out.zeros.begin(), out.zeros.end(),
              [](const LocatedZero& a, const LocatedZero& b) { return a.value < b.value; });
    std::sort(out.tangencies.begin(), out.tangencies.end(),
              [](const Tangency& a, const Tangency& b) { return a.location < b.location; });
    return out;
}

void check_bounds(const InterlacingReport& r) {
    if (!r.bounds) return;
    int count = r.count();
    if (count > r.bounds->sign_change || count > r.bounds->d_minus_1 ||
        (r.bounds->n_minus_1 && count > *r.bounds->n_minus_1)) {
        std::ostringstream os;
        os << "interlacing count " << count << " violates the theoretical bounds (sign changes "
           << r.bounds->sign_change << ", d-1 = " << r.bounds->d_minus_1
           << "); this indicates a numerical bug";
        throw std::logic_error(os.str());
    }
}

}  // namespace

InterlacingReport find_interlacings(const SpectralData& sd, const WalkTable* walks, int i, int j,
                                    Measure measure, const ScanParams& params,
                                    const DifferenceMesh& mesh) {
    InterlacingReport report;
    report.i = i;
    report.j = j;
    report.measure = measure;
    report.lo = params.lo;
    report.hi = params.hi;
    report.resolution = params.resolution;

    DifferenceFunction f = difference_function(sd, i, j, measure);
    double winf = f.w.cwiseAbs().maxCoeff();
    bool float_cospectral = winf < kCoefficientFloor;

    if (i == j || walks != nullptr) {
        report.exact_verdict = true;
        bool exact_cospectral = i == j || are_cospectral(*walks, i, j);
        if (exact_cospectral) {
            report.status = PairStatus::Cospectral;
            return report;
        }
        if (float_cospectral) {
            // exact arithmetic separates the pair but doubles cannot
            report.status = PairStatus::IllConditioned;
            return report;
        }
    } else if (float_cospectral) {
        report.status = PairStatus::Cospectral;
        return report;
    }

    report.bounds = interlacing_bounds(sd, i, j, measure);

    std::vector<double> vals(params.resolution);
    mesh.eval_pair(f.w, vals);
    auto scanned = scan_mesh(mesh.grid(), vals,
                             [&](double x) { return mesh.point(f.w, x); }, params.refine_tol,
                             1e-12 * f.w.cwiseAbs().sum());
    report.zeros = std::move(scanned.zeros);
    report.tangencies = std::move(scanned.tangencies);
    check_bounds(report);
    return report;
}

namespace {

// Katz/TC differences share the scan machinery but use the raw
// eigendecomposition: coefficient k is (Q_ik - Q_jk) (Q^T 1)_k.
InterlacingReport scan_rowsum_measure(const Graph& g, int i, int j, Measure measure,
                                      const ScanParams& params) {
    EigenDecomposition eig = eig_sym(g);
    const int n = g.order();
    double rho = n > 0 ? std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1))) : 0.0;
    validate_params(params, measure == Measure::Katz ? Measure::RC : Measure::SC, rho);

    InterlacingReport report;
    report.i = i;
    report.j = j;
    report.measure = measure;
    report.lo = params.lo;
    report.hi = params.hi;
    report.resolution = params.resolution;

    Eigen::VectorXd ones_coeff = eig.vectors.transpose() * Eigen::VectorXd::Ones(n);
    Eigen::VectorXd v =
        (eig.vectors.row(i) - eig.vectors.row(j)).transpose().cwiseProduct(ones_coeff);
    if (v.cwiseAbs().maxCoeff() < kCoefficientFloor) {
        // the two row sums agree identically (automorphic pair, say)
        report.status = PairStatus::Cospectral;
        return report;
    }

    auto eval = [&](double x) {
        double sum = 0;
        for (int k = 0; k < n; ++k)
            sum += v(k) * (measure == Measure::Katz ? 1.0 / (1.0 - x * eig.values(k))
                                                    : std::exp(x * (eig.values(k) - rho)));
        return sum;
    };
    const int res = params.resolution;
    const double step = (params.hi - params.lo) / res;
    Eigen::VectorXd xs(res);
    std::vector<double> vals(res);
    for (int k = 0; k < res; ++k) {
        xs(k) = (k + 1 == res) ? params.hi : params.lo + step * (k + 1);
        vals[k] = eval(xs(k));
    }
    auto scanned = scan_mesh(xs, vals, eval, params.refine_tol, 1e-12 * v.cwiseAbs().sum());
    report.zeros = std::move(scanned.zeros);
    report.tangencies = std::move(scanned.tangencies);
    return report;  // no bound applies to Katz/TC
}

}  // namespace

InterlacingReport find_interlacings(const Graph& g, int i, int j, Measure measure,
                                    const ScanParams& params, int workers) {
    if (i < 0 || j < 0 || i >= g.order() || j >= g.order())
        throw std::invalid_argument("vertex out of range");

    if (measure == Measure::Katz || measure == Measure::TC) {
        if (g.kind() == GraphKind::GeneralMatrix)
            throw std::invalid_argument("Katz/TC interlacing requires an undirected kind");
        return scan_rowsum_measure(g, i, j, measure, params);
    }

    if (g.kind() == GraphKind::GeneralMatrix) {
        if (measure != Measure::SC)
            throw std::invalid_argument("general matrices support SC interlacing scans only");
        if (!(params.lo >= 0) || !(params.hi > params.lo) || params.resolution < 2)
            throw std::domain_error("invalid scan interval");

        InterlacingReport report;
        report.i = i;
        report.j = j;
        report.measure = measure;
        report.lo = params.lo;
        report.hi = params.hi;
        report.resolution = params.resolution;

        const int res = params.resolution;
        const double step = (params.hi - params.lo) / res;
        Eigen::VectorXd xs(res);
        std::vector<double> vals(res);
        auto eval = [&](double x) { return sc_difference_series(g, i, j, x); };
        auto fill = [&](int k) {
            double x = (k + 1 == res) ? params.hi : params.lo + step * (k + 1);
            xs(k) = x;
            vals[k] = eval(x);
        };
        if (workers == 1) {
            for (int k = 0; k < res; ++k) fill(k);
        } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    num_threads(workers > 0 ? workers : omp_get_max_threads())
#endif
            for (int k = 0; k < res; ++k) fill(k);
        }
        double scale = 1.0;
        for (double v : vals) scale = std::max(scale, std::abs(v));
        auto scanned = scan_mesh(xs, vals, eval, params.refine_tol, 1e-12 * scale);
        report.zeros = std::move(scanned.zeros);
        report.tangencies = std::move(scanned.tangencies);
        return report;  // no spectral bounds exist for a general matrix
    }

    SpectralData sd = analyze_spectrum(g);
    DifferenceMesh mesh(sd, measure, params, workers);
    if (g.integral_weights()) {
        WalkTable walks = walk_table(g);
        return find_interlacings(sd, &walks, i, j, measure, params, mesh);
    }
    return find_interlacings(sd, nullptr, i, j, measure, params, mesh);
}

}  // namespace walkcent
