// Benchmark: serial reference runner vs the OpenMP runner on the same
// experiment configuration, verifying the tables match cell for cell.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "trivote/profile_io.hpp"
#include "trivote/sampling.hpp"

using namespace trivote;

namespace {

template <typename Fn>
double time_seconds(Fn&& fn, SatisfactionTable& out) {
    const auto start = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    ExperimentConfig config;
    config.num_profiles = argc > 1 ? std::atoi(argv[1]) : 500;
    config.seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 99;

    SatisfactionTable serial, parallel;
    const double t_serial = time_seconds([&] { return run_experiment_serial(config); }, serial);
    const double t_parallel = time_seconds([&] { return run_experiment(config); }, parallel);

    bool match = serial.cells.size() == parallel.cells.size();
    for (std::size_t i = 0; match && i < serial.cells.size(); ++i)
        match = serial.cells[i].satisfied == parallel.cells[i].satisfied;

    std::printf("profiles:        %d\n", config.num_profiles);
    std::printf("serial runner:   %.3f s\n", t_serial);
    std::printf("parallel runner: %.3f s (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
    std::printf("tables match:    %s\n", match ? "yes" : "NO");
    std::printf("%s", table_summary(parallel).c_str());
    return match ? 0 : 1;
}
