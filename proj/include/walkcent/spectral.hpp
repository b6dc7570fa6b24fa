#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "walkcent/graph.hpp"
#include "walkcent/walks.hpp"

namespace walkcent {

/// Raw symmetric eigendecomposition A = Q D Q^T, eigenvalues ascending.
struct EigenDecomposition {
    Eigen::VectorXd values;   // lambda_1 <= ... <= lambda_n
    Eigen::MatrixXd vectors;  // orthogonal Q, columns are eigenvectors
};

/// Diagnostics from the distinct-eigenvalue grouping. The reconstruction
/// residual compares sum_h mu_h^r C_{hi} against the walk counts [A^r]_{ii}
/// for all i and r <= n-1; it is the authoritative acceptance check for the
/// clustering (a wrong cluster count shows up here immediately).
struct GroupingReport {
    double tol = 0;          // gap tolerance applied
    double min_gap = 0;      // smallest gap between adjacent clusters
    double max_spread = 0;   // largest spread inside one cluster
    double residual = 0;     // max relative reconstruction residual
    bool exact_check = false;  // residual taken against the exact integer table
};

/// Distinct eigenvalues mu_1 < ... < mu_d with multiplicities and the d x n
/// spectral weight matrix, C(h, i) = [E_h]_{ii} = sum of Q(i,k)^2 over the
/// cluster of mu_h. Rows of C sum to m_h over vertices; columns sum to 1.
struct SpectralData {
    Eigen::VectorXd mu;
    std::vector<int> mult;
    Eigen::MatrixXd C;  // d x n
    double rho = 0;     // max_h |mu_h|
    GroupingReport report;

    int d() const { return static_cast<int>(mu.size()); }
    int order() const { return static_cast<int>(C.cols()); }
};

/// Symmetric eigendecomposition with verified residuals:
/// ||A Q - Q D||_max <= 1e-10 max(1, rho) and ||Q^T Q - I||_max <= 1e-10.
EigenDecomposition eig_sym(const Graph& g);

double default_grouping_tol(double rho, int n);

/// Cluster an ascending eigenvalue list by gaps > tol; returns [begin, end)
/// index ranges. Idempotent: reclustering the cluster means changes nothing.
std::vector<std::pair<int, int>> cluster_eigenvalues(const Eigen::VectorXd& values, double tol);

/// Group equal eigenvalues and build the spectral weights. Throws when the
/// reconstruction residual against the walk counts exceeds `max_residual`
/// (mis-clustering) or when any structural invariant fails.
SpectralData group_eigenvalues(const Graph& g, const EigenDecomposition& eig, double tol,
                               double max_residual = 1e-8);

/// eig_sym + group_eigenvalues at the default tolerance.
SpectralData analyze_spectrum(const Graph& g);

double spectral_radius(const Graph& g);

/// Floating fallback for graphs outside the exact path (non-integer
/// weights): vertices grouped by spectral-weight columns agreeing to `tol`.
/// Results are numerical, not exact.
std::vector<std::vector<int>> cospectral_classes_numerical(const SpectralData& sd,
                                                           double tol = 1e-10);

}  // namespace walkcent
