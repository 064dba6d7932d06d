// Times each serial reference kernel against its OpenMP variant and checks they agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "whitney/dual.hpp"
#include "whitney/families.hpp"
#include "whitney/kernels.hpp"

using namespace whitney;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

template <class Result>
void row(const std::string& name, int repeats, std::function<Result()> serial, std::function<Result()> omp) {
    Result a, b;
    const double ts = best_of(repeats, [&] { a = serial(); });
    const double tp = best_of(repeats, [&] { b = omp(); });
    std::printf("%-34s %10.3f %10.3f %8.2fx  %s\n", name.c_str(), ts, tp, ts / tp, a == b ? "agree" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel timings"};
    int repeats = 3, jobs = 0;
    app.add_option("--repeat", repeats, "timed repetitions, best reported");
    app.add_option("--jobs", jobs, "OpenMP threads (default: all cores)");
    CLI11_PARSE(app, argc, argv);
    if (jobs > 0) kernels::set_num_threads(jobs);

    std::printf("threads: %d\n%-34s %10s %10s %9s\n", kernels::max_threads(), "kernel", "serial ms", "omp ms", "speedup");
    for (auto [family, n] : {std::pair<const char*, int>{"sf", 5}, {"piw", 5}, {"pi", 6}}) {
        LabeledPoset lp = make_family(family, n);
        const Poset& P = lp.poset;
        const std::string tag = std::string(family) + std::to_string(n);
        row<std::vector<long long>>("mobius matrix " + tag, repeats, [&] { return kernels::mobius_matrix_serial(P); },
                                    [&] { return kernels::mobius_matrix_omp(P); });

        std::vector<std::uint32_t> offsets{0};
        std::vector<ElementId> targets, topo;
        for (ElementId x = 0; x < P.size(); ++x) {
            for (ElementId y : P.up(x)) targets.push_back(y);
            offsets.push_back(static_cast<std::uint32_t>(targets.size()));
        }
        for (int k = 0; k <= P.height(); ++k)
            for (ElementId x : P.level(k)) topo.push_back(x);
        row<BitMatrix>("upset closure " + tag, repeats,
                       [&] { return kernels::upset_closure_serial(P.size(), offsets, targets, topo); },
                       [&] { return kernels::upset_closure_omp(P.size(), offsets, targets, topo); });
    }

    for (auto [family, n] : {std::pair<const char*, int>{"pi", 5}, {"nc", 6}, {"piw", 4}}) {
        LabeledPoset lp = make_family(family, n);
        ChainTree T = ChainTree::build(lp.poset);
        const auto end = static_cast<ChainTree::NodeId>(T.size());
        row<std::vector<ChainTree::NodeId>>(
            "exchange sinks " + std::string(family) + std::to_string(n), repeats,
            [&] { return kernels::sink_nodes_serial(lp.poset, *lp.labeling, T, 0, end); },
            [&] { return kernels::sink_nodes_omp(lp.poset, *lp.labeling, T, 0, end); });
    }

    std::vector<std::uint32_t> masks(1 << 22);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = static_cast<std::uint32_t>((i * 2654435761u) >> 20) & 0xFF;
    row<std::vector<long long>>("descent mask tally (4M)", repeats, [&] { return kernels::mask_tally_serial(masks, 8); },
                                [&] { return kernels::mask_tally_omp(masks, 8); });
    return 0;
}
