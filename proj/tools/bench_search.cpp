#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "minabc/search.hpp"

// Compares the serial reference kernels against the OpenMP ones.
int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel search benchmark"};
    int n = 16, workers = 4, reps = 3;
    app.add_option("--n", n);
    app.add_option("--workers", workers);
    app.add_option("--reps", reps);
    CLI11_PARSE(app, argc, argv);

    using clock = std::chrono::steady_clock;
    auto time_it = [&](auto&& fn) {
        double best = 1e100;
        for (int r = 0; r < reps; ++r) {
            auto t0 = clock::now();
            fn();
            best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count());
        }
        return best;
    };

    minabc::SearchRecord serial, parallel;
    double ts = time_it([&] { serial = minabc::brute_force_min_serial(n); });
    minabc::SearchOptions opts;
    opts.workers = workers;
    double tp = time_it([&] { parallel = minabc::brute_force_min(n, opts); });
    std::printf("brute n=%d      serial %.3fs   parallel(%d) %.3fs   speedup %.2fx   %s\n", n, ts,
                workers, tp, ts / tp,
                serial.abc == parallel.abc && serial.tree_g6 == parallel.tree_g6 ? "identical"
                                                                                 : "MISMATCH");

    double gs = time_it([&] { serial = minabc::greedy_sequence_min_serial(n); });
    double gp = time_it([&] { parallel = minabc::greedy_sequence_min(n, opts); });
    std::printf("greedy-seq n=%d serial %.3fs   parallel(%d) %.3fs   speedup %.2fx   %s\n", n, gs,
                workers, gp, gs / gp,
                serial.abc == parallel.abc && serial.tree_g6 == parallel.tree_g6 ? "identical"
                                                                                 : "MISMATCH");
    return 0;
}
