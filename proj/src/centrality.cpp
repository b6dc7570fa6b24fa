#include "walkcent/centrality.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>

namespace walkcent {

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::SC: return "sc";
        case Measure::RC: return "rc";
        case Measure::EC: return "ec";
        case Measure::Katz: return "katz";
        case Measure::TC: return "tc";
        case Measure::Degree: return "degree";
    }
    return "?";
}

namespace {

void require_beta(double beta) {
    if (!(beta > 0.0)) throw std::domain_error("beta must be positive");
}

void require_vertex(int i, int n) {
    if (i < 0 || i >= n) throw std::invalid_argument("vertex out of range");
}

void require_alpha(double alpha, double rho) {
    if (!(alpha > 0.0) || !(alpha * rho < 1.0)) {
        std::ostringstream os;
        os << "alpha must lie in (0, 1/rho) = (0, " << (rho > 0 ? 1.0 / rho : kInfiniteRadius)
           << "); got " << alpha;
        throw std::domain_error(os.str());
    }
}

void require_no_overflow(double beta, double rho) {
    if (beta * rho > kExpOverflowLimit) {
        std::ostringstream os;
        os << "e^{beta A} overflows binary64: beta*rho = " << beta * rho
           << " > " << kExpOverflowLimit << "; use the rescaled profile";
        throw std::overflow_error(os.str());
    }
}

Eigen::LLT<Eigen::MatrixXd> resolvent_factor(const Graph& g, double alpha) {
    const int n = g.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - alpha * g.adjacency();
    Eigen::LLT<Eigen::MatrixXd> llt(m);  // SPD for alpha < 1/rho
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("resolvent factorization failed (alpha too close to 1/rho?)");
    return llt;
}

}  // namespace

double sc(const SpectralData& sd, double beta, int i) {
    require_beta(beta);
    require_vertex(i, sd.order());
    require_no_overflow(beta, sd.rho);
    return (beta * sd.mu.array()).exp().matrix().dot(sd.C.col(i));
}

double sc(const Graph& g, double beta, int i) {
    if (g.kind() == GraphKind::GeneralMatrix) return sc_series(g, beta, i);
    return sc(analyze_spectrum(g), beta, i);
}

double sc_series(const Graph& g, double beta, int i) {
    require_beta(beta);
    require_vertex(i, g.order());
    Eigen::MatrixXd e = (beta * g.adjacency()).exp();
    double v = e(i, i);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "matrix exponential overflowed for beta = " << beta;
        throw std::overflow_error(os.str());
    }
    return v;
}

CentralityProfile sc_profile(const SpectralData& sd, double beta) {
    require_beta(beta);
    CentralityProfile p{Measure::SC, beta, Eigen::VectorXd(sd.order()), false};
    p.rescaled = beta * sd.rho > kExpOverflowLimit;
    Eigen::VectorXd weights =
        p.rescaled ? (beta * (sd.mu.array() - sd.rho)).exp().matrix().eval()
                   : (beta * sd.mu.array()).exp().matrix().eval();
    for (int i = 0; i < sd.order(); ++i) p.scores(i) = weights.dot(sd.C.col(i));
    return p;
}

double rc(const Graph& g, double alpha, int i) {
    require_vertex(i, g.order());
    SpectralData sd = analyze_spectrum(g);
    require_alpha(alpha, sd.rho);
    Eigen::VectorXd rhs = Eigen::VectorXd::Unit(g.order(), i);
    return resolvent_factor(g, alpha).solve(rhs)(i);
}

double rc_spectral(const SpectralData& sd, double alpha, int i) {
    require_vertex(i, sd.order());
    require_alpha(alpha, sd.rho);
    return ((1.0 - alpha * sd.mu.array()).inverse()).matrix().dot(sd.C.col(i));
}

CentralityProfile rc_profile(const Graph& g, double alpha) {
    SpectralData sd = analyze_spectrum(g);
    require_alpha(alpha, sd.rho);
    auto llt = resolvent_factor(g, alpha);
    CentralityProfile p{Measure::RC, alpha, Eigen::VectorXd(g.order()), false};
    for (int i = 0; i < g.order(); ++i)
        p.scores(i) = llt.solve(Eigen::VectorXd::Unit(g.order(), i))(i);
    return p;
}

Eigen::VectorXd ec(const Graph& g) {
    if (g.kind() == GraphKind::GeneralMatrix)
        throw std::invalid_argument("eigenvector centrality requires an undirected kind");
    if (!is_connected(g))
        throw std::invalid_argument("eigenvector centrality requires a connected graph");
    const int n = g.order();
    EigenDecomposition eig = eig_sym(g);
    Eigen::VectorXd v = eig.vectors.col(n - 1);
    if (v.sum() < 0) v = -v;
    v.normalize();
    for (int i = 0; i < n; ++i)
        if (!(v(i) > 0)) throw std::runtime_error("Perron vector has a nonpositive entry");
    return v;
}

Eigen::VectorXd katz(const Graph& g, double alpha) {
    require_alpha(alpha, spectral_radius(g));
    return resolvent_factor(g, alpha).solve(Eigen::VectorXd::Ones(g.order()));
}

Eigen::VectorXd katz_spectral(const Graph& g, double alpha) {
    EigenDecomposition eig = eig_sym(g);
    const int n = g.order();
    double rho = n > 0 ? std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1))) : 0.0;
    require_alpha(alpha, rho);
    Eigen::VectorXd coeff = eig.vectors.transpose() * Eigen::VectorXd::Ones(n);
    coeff.array() /= (1.0 - alpha * eig.values.array());
    return eig.vectors * coeff;
}

Eigen::VectorXd tc(const Graph& g, double beta) {
    require_beta(beta);
    EigenDecomposition eig = eig_sym(g);
    const int n = g.order();
    double rho = n > 0 ? std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1))) : 0.0;
    require_no_overflow(beta, rho);
    Eigen::VectorXd coeff = eig.vectors.transpose() * Eigen::VectorXd::Ones(n);
    coeff.array() *= (beta * eig.values.array()).exp();
    return eig.vectors * coeff;
}

double default_alpha(const SpectralData& sd) {
    if (sd.rho <= 0) throw std::domain_error("default alpha undefined for an edgeless graph");
    return 1.0 / (2.0 * sd.rho);
}

double walk_entropy(const SpectralData& sd, double beta) {
    require_beta(beta);
    const int n = sd.order();
    if (n == 0) throw std::invalid_argument("walk entropy of the empty graph is undefined");
    // rescaled scores share the factor e^{-beta rho}, which cancels in p
    Eigen::VectorXd weights = (beta * (sd.mu.array() - sd.rho)).exp();
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) s(i) = weights.dot(sd.C.col(i));
    double total = s.sum();
    double entropy = 0;
    for (int i = 0; i < n; ++i) {
        double p = s(i) / total;
        if (p > 0) entropy -= p * std::log(p);
    }
    double cap = std::log(static_cast<double>(n));
    if (entropy < -1e-12 || entropy > cap + 1e-12)
        throw std::runtime_error("walk entropy escaped [0, ln n]");
    return std::clamp(entropy, 0.0, cap);
}

double walk_entropy(const Graph& g, double beta) {
    return walk_entropy(analyze_spectrum(g), beta);
}

double functional_centrality(const SpectralData& sd, const std::function<double(double)>& f,
                             double radius, double t, int i) {
    require_vertex(i, sd.order());
    if (!(t > 0.0) || !(t * sd.rho < radius)) {
        std::ostringstream os;
        os << "t must lie in (0, radius/rho); got t = " << t << " with t*rho = " << t * sd.rho
           << " and radius " << radius;
        throw std::domain_error(os.str());
    }
    double sum = 0;
    for (int h = 0; h < sd.d(); ++h) {
        double fv = f(t * sd.mu(h));
        if (!std::isfinite(fv)) {
            std::ostringstream os;
            os << "f is not finite at t*mu = " << t * sd.mu(h);
            throw std::domain_error(os.str());
        }
        sum += fv * sd.C(h, i);
    }
    return sum;
}

}  // namespace walkcent
