#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "walkcent/graph.hpp"
#include "walkcent/spectral.hpp"

namespace walkcent {

enum class Measure { SC, RC, EC, Katz, TC, Degree };

std::string measure_name(Measure m);

struct CentralityProfile {
    Measure measure;
    std::optional<double> parameter;  // beta or alpha; absent for EC/Degree
    Eigen::VectorXd scores;
    /// When true, scores carry a common factor e^{-beta rho} to stay finite;
    /// orderings and equalities at fixed beta are unaffected.
    bool rescaled = false;
};

// --- subgraph centrality [e^{beta A}]_{ii} ---

/// Spectral closed form sum_h e^{beta mu_h} C_{hi}.
double sc(const SpectralData& sd, double beta, int i);
/// Dispatches: spectral form for undirected kinds, series form for general.
double sc(const Graph& g, double beta, int i);
/// Independent route: diagonal of the scaling-and-squaring matrix exponential.
double sc_series(const Graph& g, double beta, int i);

CentralityProfile sc_profile(const SpectralData& sd, double beta);

// --- resolvent centrality [(I - alpha A)^{-1}]_{ii}, 0 < alpha < 1/rho ---

/// Linear-solve route: (I - alpha A) x = e_i.
double rc(const Graph& g, double alpha, int i);
/// Cross-check route: sum_h C_{hi} / (1 - alpha mu_h).
double rc_spectral(const SpectralData& sd, double alpha, int i);

CentralityProfile rc_profile(const Graph& g, double alpha);

// --- eigenvector centrality, Katz, total communicability ---

/// Perron eigenvector of a connected undirected graph, unit 2-norm,
/// strictly positive entries.
Eigen::VectorXd ec(const Graph& g);

/// Row sums of the resolvent: [(I - alpha A)^{-1} 1]_i.
Eigen::VectorXd katz(const Graph& g, double alpha);
/// Same through the spectral factorisation; used as a cross-check.
Eigen::VectorXd katz_spectral(const Graph& g, double alpha);

/// Row sums of the matrix exponential: [e^{beta A} 1]_i.
Eigen::VectorXd tc(const Graph& g, double beta);

/// Midpoint of the valid resolvent interval, 1/(2 rho).
double default_alpha(const SpectralData& sd);

// --- walk entropy ---

/// Shannon entropy (natural log, with the minus sign) of the normalized
/// subgraph-centrality distribution p_i = SC(i,beta) / Tr e^{beta A}.
/// Always computed from rescaled scores, so any beta > 0 is safe.
double walk_entropy(const SpectralData& sd, double beta);
double walk_entropy(const Graph& g, double beta);

// --- functional centrality sum_h f(t mu_h) C_{hi} ---

/// `radius` is the convergence radius of f at 0 (infinity for entire f);
/// requires 0 < t < radius / rho and finite f at every t mu_h.
double functional_centrality(const SpectralData& sd, const std::function<double(double)>& f,
                             double radius, double t, int i);

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

/// Largest beta*rho the unrescaled exponential tolerates in binary64.
inline constexpr double kExpOverflowLimit = 700.0;

}  // namespace walkcent
