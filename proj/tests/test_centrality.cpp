#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "walkcent/centrality.hpp"

using namespace walkcent;

TEST_CASE("sc closed forms") {
    Graph k2 = fixtures::complete(2);
    SpectralData sd = analyze_spectrum(k2);
    for (double beta : {0.3, 1.0, 2.5}) {
        CHECK(sc(sd, beta, 0) == doctest::Approx(std::cosh(beta)).epsilon(1e-12));
        CHECK(sc(sd, beta, 1) == doctest::Approx(std::cosh(beta)).epsilon(1e-12));
        CHECK(sc_series(k2, beta, 0) == doctest::Approx(std::cosh(beta)).epsilon(1e-12));
        // independent oracle: truncated Taylor sum over exact walk counts
        CHECK(sc(sd, beta, 0) == doctest::Approx(oracles::taylor_sc(k2, beta, 0)).epsilon(1e-11));
    }
    SpectralData empty = analyze_spectrum(fixtures::edgeless(3));
    CHECK(sc(empty, 2.0, 1) == doctest::Approx(1).epsilon(1e-14));
    CHECK_THROWS_AS(sc(sd, 0.0, 0), std::domain_error);
    CHECK_THROWS_AS(sc(sd, -1.0, 0), std::domain_error);
}

TEST_CASE("sc series path on the rotation generator") {
    Graph g = fixtures::rotation3();
    for (double beta : {0.5, 2.0, 3.14159, 6.0}) {
        CHECK(sc(g, beta, 0) == doctest::Approx(std::cos(beta)).epsilon(1e-10));
        CHECK(sc(g, beta, 2) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("sc overflow policy") {
    Graph k2 = fixtures::complete(2);
    SpectralData sd = analyze_spectrum(k2);
    CHECK_THROWS_AS(sc(sd, 800.0, 0), std::overflow_error);
    CentralityProfile p = sc_profile(sd, 800.0);
    CHECK(p.rescaled);
    // e^{-beta rho} cosh(beta) -> 1/2
    CHECK(p.scores(0) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("rc closed forms and cross-path agreement") {
    Graph k2 = fixtures::complete(2);
    SpectralData sd = analyze_spectrum(k2);
    CHECK(rc(k2, 0.5, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(rc_spectral(sd, 0.5, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    Graph empty = fixtures::edgeless(3);
    CHECK(rc(empty, 0.9, 2) == doctest::Approx(1).epsilon(1e-14));

    CHECK_THROWS_AS(rc(k2, 1.2, 0), std::domain_error);   // alpha beyond 1/rho
    CHECK_THROWS_AS(rc(k2, -0.1, 0), std::domain_error);
    CHECK_THROWS_AS(rc(k2, 0.0, 0), std::domain_error);
}

TEST_CASE("path agreement on random graphs") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracles::random_graph(10, 0.4, rng);
        SpectralData sd = analyze_spectrum(g);
        for (double beta : {0.2, 1.0, 3.0}) {
            for (int i = 0; i < g.order(); ++i) {
                double a = sc(sd, beta, i), b = sc_series(g, beta, i);
                CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
            }
        }
        if (sd.rho > 0) {
            for (double f : {0.2, 0.5, 0.9}) {
                double alpha = f / sd.rho;
                for (int i = 0; i < g.order(); ++i) {
                    double a = rc(g, alpha, i), b = rc_spectral(sd, alpha, i);
                    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
                }
            }
        }
    }
}

TEST_CASE("trace identity") {
    std::mt19937 rng(23);
    Graph g = oracles::random_graph(9, 0.5, rng);
    SpectralData sd = analyze_spectrum(g);
    for (double beta : {0.5, 1.0, 2.0}) {
        CentralityProfile p = sc_profile(sd, beta);
        double lhs = p.scores.sum();
        double rhs = 0;
        for (int h = 0; h < sd.d(); ++h) rhs += sd.mult[h] * std::exp(beta * sd.mu(h));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("eigenvector centrality") {
    Eigen::VectorXd p3 = ec(fixtures::path(3));
    CHECK(p3(0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(p3(1) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-10));
    CHECK(p3(2) == doctest::Approx(0.5).epsilon(1e-10));

    Eigen::VectorXd k2 = ec(fixtures::complete(2));
    CHECK(k2(0) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));

    Eigen::VectorXd c5 = ec(fixtures::cycle(5));
    for (int i = 0; i < 5; ++i) CHECK(c5(i) == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-10));

    CHECK_THROWS_AS(ec(fixtures::edgeless(2)), std::invalid_argument);
}

TEST_CASE("katz and tc") {
    // on a k-regular graph both are uniform with closed forms
    Graph c6 = fixtures::cycle(6);
    SpectralData sd = analyze_spectrum(c6);
    double alpha = default_alpha(sd);  // 1/(2 rho) = 1/4
    Eigen::VectorXd kv = katz(c6, alpha);
    Eigen::VectorXd tv = tc(c6, 1.0);
    for (int i = 0; i < 6; ++i) {
        CHECK(kv(i) == doctest::Approx(1.0 / (1.0 - alpha * 2.0)).epsilon(1e-10));
        CHECK(tv(i) == doctest::Approx(std::exp(2.0)).epsilon(1e-10));
    }
    Eigen::VectorXd ks = katz_spectral(c6, alpha);
    CHECK((kv - ks).cwiseAbs().maxCoeff() < 1e-10);

    Graph empty = fixtures::edgeless(3);
    CHECK(katz(empty, 0.3).isApprox(Eigen::VectorXd::Ones(3), 1e-12));
    CHECK(tc(empty, 1.0).isApprox(Eigen::VectorXd::Ones(3), 1e-12));

    // fig 4: cospectral pair, yet both row-sum measures separate it
    Graph fig4 = fixtures::fig4();
    SpectralData sd4 = analyze_spectrum(fig4);
    Eigen::VectorXd kv4 = katz(fig4, default_alpha(sd4));
    Eigen::VectorXd tv4 = tc(fig4, 1.0);
    CHECK(std::abs(kv4(0) - kv4(7)) / std::abs(kv4(7)) > 1e-8);
    CHECK(std::abs(tv4(0) - tv4(7)) / std::abs(tv4(7)) > 1e-8);
}

TEST_CASE("cospectral vertices agree on SC, RC, EC, degree") {
    Graph g = fixtures::fig4();
    SpectralData sd = analyze_spectrum(g);
    Eigen::VectorXd ecv = ec(g);
    CHECK(degree(g, 0) == degree(g, 7));
    CHECK(std::abs(ecv(0) - ecv(7)) < 1e-10);
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> betas(0.05, 5.0);
    for (int k = 0; k < 20; ++k) {
        double beta = betas(rng);
        double a = sc(sd, beta, 0), b = sc(sd, beta, 7);
        CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
        double alpha = beta / 5.0 * 0.9 / sd.rho + 1e-3;
        double ra = rc(g, alpha, 0), rb = rc(g, alpha, 7);
        CHECK(std::abs(ra - rb) <= 1e-10 * std::abs(ra));
    }
}

TEST_CASE("small-beta ordering follows degree") {
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 8) {
        Graph g = oracles::random_graph(12, 0.3, rng);
        SpectralData sd = analyze_spectrum(g);
        for (int i = 0; i < g.order() && checked < 8; ++i)
            for (int j = 0; j < g.order() && checked < 8; ++j)
                if (degree(g, i) > degree(g, j)) {
                    CHECK(sc(sd, 1e-3, i) > sc(sd, 1e-3, j));
                    ++checked;
                }
    }
}

TEST_CASE("large-beta ordering follows eigenvector centrality") {
    std::mt19937 rng(43);
    int checked = 0;
    while (checked < 8) {
        Graph g = oracles::random_connected_graph(10, 0.35, rng);
        Eigen::VectorXd ecv = ec(g);
        SpectralData sd = analyze_spectrum(g);
        for (int i = 0; i < g.order() && checked < 8; ++i)
            for (int j = 0; j < g.order() && checked < 8; ++j)
                if (ecv(i) > ecv(j) + 1e-8) {
                    double beta = 100.0;
                    Eigen::VectorXd weights = (beta * (sd.mu.array() - sd.rho)).exp();
                    double si = weights.matrix().dot(sd.C.col(i));
                    double sj = weights.matrix().dot(sd.C.col(j));
                    CHECK(si > sj);
                    ++checked;
                }
    }
}

TEST_CASE("profile positivity and the SC >= 1 floor") {
    std::mt19937 rng(57);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = oracles::random_connected_graph(9, 0.4, rng);
        SpectralData sd = analyze_spectrum(g);
        CentralityProfile scp = sc_profile(sd, 1.0);
        CHECK_FALSE(scp.rescaled);
        CHECK(scp.scores.minCoeff() >= 1.0);  // zero diagonal, nonnegative series
        double alpha = default_alpha(sd);
        CHECK(rc_profile(g, alpha).scores.minCoeff() > 0.0);
        CHECK(katz(g, alpha).minCoeff() > 0.0);
        CHECK(tc(g, 1.0).minCoeff() > 0.0);
    }
}

TEST_CASE("walk entropy") {
    CHECK(walk_entropy(fixtures::cycle(5), 1.0) == doctest::Approx(std::log(5.0)).epsilon(1e-12));
    CHECK(walk_entropy(fixtures::complete(4), 2.0) ==
          doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(walk_entropy(Graph::simple(1, {}), 1.0) == doctest::Approx(0).epsilon(1e-14));
    // frozen from an independent spectral evaluation of the P3 closed form
    CHECK(walk_entropy(fixtures::path(3), 1.0) ==
          doctest::Approx(1.0868939331439245).epsilon(1e-10));
    CHECK(walk_entropy(fixtures::path(3), 1.0) < std::log(3.0) - 1e-4);
    // huge beta stays finite through the rescaled route
    CHECK(std::isfinite(walk_entropy(fixtures::path(3), 5000.0)));
    CHECK_THROWS_AS(walk_entropy(fixtures::path(3), 0.0), std::domain_error);
}

TEST_CASE("functional centrality") {
    Graph g = fixtures::fig1();
    SpectralData sd = analyze_spectrum(g);
    for (int i : {0, 3, 8}) {
        double via_f = functional_centrality(
            sd, [](double x) { return std::exp(x); }, kInfiniteRadius, 1.3, i);
        CHECK(via_f == doctest::Approx(sc(sd, 1.3, i)).epsilon(1e-12));
        double t = 0.4 / sd.rho;
        double via_r = functional_centrality(
            sd, [](double x) { return 1.0 / (1.0 - x); }, 1.0, t, i);
        CHECK(via_r == doctest::Approx(rc_spectral(sd, t, i)).epsilon(1e-12));
    }
    // cosh is even: both K2 vertices get cosh(1)
    SpectralData k2 = analyze_spectrum(fixtures::complete(2));
    double v = functional_centrality(
        k2, [](double x) { return std::cosh(x); }, kInfiniteRadius, 1.0, 0);
    CHECK(v == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));

    CHECK_THROWS_AS(functional_centrality(
                        k2, [](double x) { return 1.0 / (1.0 - x); }, 1.0, 1.5, 0),
                    std::domain_error);
}
