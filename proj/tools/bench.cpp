// Compares the serial reference kernels against their OpenMP variants:
// difference-mesh construction, canonical enumeration, and the graph scan.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "walkcent/enumerate.hpp"
#include "walkcent/interlacing.hpp"
#include "walkcent/scan.hpp"
#include "walkcent/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace walkcent;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::cout << std::left << std::setw(28) << name << "serial " << std::setw(10) << serial
              << "  parallel " << std::setw(10) << parallel << "  speedup "
              << (parallel > 0 ? serial / parallel : 0) << "\n";
}

Graph fig2_graph() {
    return Graph::simple(10, {{0, 6}, {6, 1}, {1, 7}, {7, 0}, {0, 8}, {8, 1},
                              {1, 9}, {9, 0}, {8, 3}, {3, 7}, {7, 2}, {2, 6},
                              {6, 9}, {9, 4}, {4, 8}, {8, 5}, {5, 9}});
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads available: " << omp_get_max_threads() << "\n";
#endif
    std::cout << std::setprecision(4);

    {
        Graph g = fig2_graph();
        SpectralData sd = analyze_spectrum(g);
        ScanParams params = default_sc_params();
        params.resolution = 4000000;

        auto t0 = clk::now();
        DifferenceMesh serial(sd, Measure::SC, params, 1);
        double ts = seconds_since(t0);
        t0 = clk::now();
        DifferenceMesh parallel(sd, Measure::SC, params, 0);
        double tp = seconds_since(t0);
        report("difference mesh (4M pts)", ts, tp);

        Eigen::VectorXd w = sd.C.col(3) - sd.C.col(2);
        std::vector<double> a(params.resolution), b(params.resolution);
        serial.eval_pair(w, a);
        parallel.eval_pair(w, b);
        for (int k = 0; k < params.resolution; ++k)
            if (a[k] != b[k]) {
                std::cout << "MISMATCH at point " << k << "\n";
                return 1;
            }
    }

    {
        auto t0 = clk::now();
        auto serial = enumerate_classes(8, true, 1);
        double ts = seconds_since(t0);
        t0 = clk::now();
        auto parallel = enumerate_classes(8, true, 0);
        double tp = seconds_since(t0);
        report("enumerate n=8 connected", ts, tp);
        if (serial != parallel) {
            std::cout << "MISMATCH in enumeration output\n";
            return 1;
        }
        std::cout << "  classes: " << serial.size() << "\n";
    }

    {
        SearchSpec spec;
        spec.n_min = 2;
        spec.n_max = 7;
        spec.connected_only = true;
        spec.min_count = 1;
        spec.sc_params.resolution = 2000;

        auto t0 = clk::now();
        ScanResult rs = scan_serial(spec);
        double ts = seconds_since(t0);
        t0 = clk::now();
        ScanResult rp = scan(spec, 0);
        double tp = seconds_since(t0);
        report("scan n<=7, k=1", ts, tp);
        if (rs.findings.size() != rp.findings.size()) {
            std::cout << "MISMATCH in scan findings\n";
            return 1;
        }
        std::cout << "  findings: " << rs.findings.size() << " over " << rs.graphs_scanned
                  << " graphs\n";
    }

    return 0;
}
