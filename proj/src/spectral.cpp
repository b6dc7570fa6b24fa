#include "walkcent/spectral.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace walkcent {

EigenDecomposition eig_sym(const Graph& g) {
    if (g.kind() == GraphKind::GeneralMatrix)
        throw std::invalid_argument("symmetric eigendecomposition requires an undirected kind");
    const auto& a = g.adjacency();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigendecomposition failed to converge");

    EigenDecomposition eig{solver.eigenvalues(), solver.eigenvectors()};
    const int n = g.order();
    if (n > 0) {
        double rho = std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
        double res = (a * eig.vectors - eig.vectors * eig.values.asDiagonal())
                         .cwiseAbs()
                         .maxCoeff();
        if (res > 1e-10 * std::max(1.0, rho))
            throw std::runtime_error("eigendecomposition residual too large");
        double orth = (eig.vectors.transpose() * eig.vectors - Eigen::MatrixXd::Identity(n, n))
                          .cwiseAbs()
                          .maxCoeff();
        if (orth > 1e-10) throw std::runtime_error("eigenvector factor not orthogonal");
    }
    return eig;
}

double default_grouping_tol(double rho, int n) {
    double ulp = std::nextafter(rho, std::numeric_limits<double>::infinity()) - rho;
    return std::max(1e-9, 64.0 * ulp * n);
}

std::vector<std::pair<int, int>> cluster_eigenvalues(const Eigen::VectorXd& values, double tol) {
    std::vector<std::pair<int, int>> ranges;
    const int n = static_cast<int>(values.size());
    int begin = 0;
    for (int k = 1; k <= n; ++k) {
        if (k == n || values(k) - values(k - 1) > tol) {
            ranges.emplace_back(begin, k);
            begin = k;
        }
    }
    return ranges;
}

namespace {

// max over i, r <= n-1 of |sum_h mu_h^r C_{hi} - [A^r]_{ii}| / max(1, |[A^r]_{ii}|)
double reconstruction_residual(const Graph& g, const SpectralData& sd, bool* exact) {
    const int n = g.order();
    const int d = sd.d();
    double worst = 0;

    if (g.integral_weights()) {
        *exact = true;
        WalkTable table = walk_table(g);
        Eigen::VectorXd power = Eigen::VectorXd::Ones(d);  // mu^r
        for (int r = 0; r < n; ++r) {
            for (int i = 0; i < n; ++i) {
                double truth = table.at_double(r, i);
                double recon = power.dot(sd.C.col(i));
                worst = std::max(worst, std::abs(recon - truth) / std::max(1.0, std::abs(truth)));
            }
            power.array() *= sd.mu.array();
        }
    } else {
        *exact = false;
        Eigen::MatrixXd cur = Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd power = Eigen::VectorXd::Ones(d);
        for (int r = 0; r < n; ++r) {
            for (int i = 0; i < n; ++i) {
                double truth = cur(i, i);
                double recon = power.dot(sd.C.col(i));
                worst = std::max(worst, std::abs(recon - truth) / std::max(1.0, std::abs(truth)));
            }
            power.array() *= sd.mu.array();
            if (r + 1 < n) cur = cur * g.adjacency();
        }
    }
    return worst;
}

}  // namespace

SpectralData group_eigenvalues(const Graph& g, const EigenDecomposition& eig, double tol,
                               double max_residual) {
    const int n = g.order();
    auto ranges = cluster_eigenvalues(eig.values, tol);
    const int d = static_cast<int>(ranges.size());

    SpectralData sd;
    sd.mu.resize(d);
    sd.mult.resize(d);
    sd.C = Eigen::MatrixXd::Zero(d, n);
    sd.report.tol = tol;
    sd.report.min_gap = std::numeric_limits<double>::infinity();

    for (int h = 0; h < d; ++h) {
        auto [b, e] = ranges[h];
        sd.mult[h] = e - b;
        sd.mu(h) = eig.values.segment(b, e - b).mean();
        sd.report.max_spread = std::max(sd.report.max_spread, eig.values(e - 1) - eig.values(b));
        if (h > 0) sd.report.min_gap = std::min(sd.report.min_gap, sd.mu(h) - sd.mu(h - 1));
        for (int k = b; k < e; ++k)
            sd.C.row(h) += eig.vectors.col(k).transpose().cwiseAbs2();
    }
    sd.rho = n > 0 ? std::max(std::abs(sd.mu(0)), std::abs(sd.mu(d - 1))) : 0.0;

    // structural invariants
    for (int i = 0; i < n; ++i) {
        if (std::abs(sd.C.col(i).sum() - 1.0) > 1e-8)
            throw std::runtime_error("spectral weight column does not sum to 1");
        double diag = sd.mu.dot(sd.C.col(i));
        if (std::abs(diag - g.adjacency()(i, i)) > 1e-8 * std::max(1.0, sd.rho))
            throw std::runtime_error("spectral weights disagree with the diagonal of A");
    }
    for (int h = 0; h < d; ++h) {
        double trace = sd.C.row(h).sum();
        if (std::abs(trace - sd.mult[h]) > 1e-6) {
            std::ostringstream os;
            os << "projector trace " << trace << " is not the integer multiplicity " << sd.mult[h]
               << " (mis-clustered eigenvalues?)";
            throw std::runtime_error(os.str());
        }
    }

    sd.report.residual = reconstruction_residual(g, sd, &sd.report.exact_check);
    if (sd.report.residual > max_residual) {
        std::ostringstream os;
        os << "eigenvalue grouping rejected: walk reconstruction residual " << sd.report.residual
           << " exceeds " << max_residual << " (tol=" << tol << ", d=" << d << ")";
        throw std::runtime_error(os.str());
    }
    return sd;
}

SpectralData analyze_spectrum(const Graph& g) {
    EigenDecomposition eig = eig_sym(g);
    double rho = g.order() > 0
                     ? std::max(std::abs(eig.values(0)), std::abs(eig.values(g.order() - 1)))
                     : 0.0;
    return group_eigenvalues(g, eig, default_grouping_tol(rho, g.order()));
}

double spectral_radius(const Graph& g) {
    EigenDecomposition eig = eig_sym(g);
    if (g.order() == 0) return 0.0;
    return std::max(std::abs(eig.values(0)), std::abs(eig.values(g.order() - 1)));
}

std::vector<std::vector<int>> cospectral_classes_numerical(const SpectralData& sd, double tol) {
    const int n = sd.order();
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if ((sd.C.col(cls.front()) - sd.C.col(i)).cwiseAbs().maxCoeff() <= tol) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    return classes;  // first members ascend by construction
}

}  // namespace walkcent
