#include "whitney/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace whitney::kernels {

void set_num_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

BitMatrix upset_closure_omp(std::size_t n, std::span<const std::uint32_t> up_offsets,
                            std::span<const ElementId> up_targets, std::span<const ElementId> topo) {
    // Group elements by longest distance to a maximal element; each group only reads finished groups.
    std::vector<int> depth(n, 0);
    int max_depth = 0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        ElementId x = *it;
        for (std::uint32_t e = up_offsets[x]; e < up_offsets[x + 1]; ++e)
            depth[x] = std::max(depth[x], depth[up_targets[e]] + 1);
        max_depth = std::max(max_depth, depth[x]);
    }
    std::vector<std::vector<ElementId>> layers(max_depth + 1);
    for (ElementId x = 0; x < n; ++x) layers[depth[x]].push_back(x);

    BitMatrix M(n);
    const std::size_t words = M.words_per_row();
    for (const auto& layer : layers) {
        const long count = static_cast<long>(layer.size());
#pragma omp parallel for schedule(static)
        for (long i = 0; i < count; ++i) {
            ElementId x = layer[i];
            M.set(x, x);
            std::uint64_t* rx = M.row(x);
            for (std::uint32_t e = up_offsets[x]; e < up_offsets[x + 1]; ++e) {
                const std::uint64_t* ry = M.row(up_targets[e]);
                for (std::size_t w = 0; w < words; ++w) rx[w] |= ry[w];
            }
        }
    }
    return M;
}

std::vector<long long> mobius_matrix_omp(const Poset& P) {
    const long n = static_cast<long>(P.size());
    std::vector<long long> M(static_cast<std::size_t>(n * n), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (long x = 0; x < n; ++x) {
        auto row = mobius_row(P, static_cast<ElementId>(x));
        std::copy(row.begin(), row.end(), M.begin() + x * n);
    }
    return M;
}

std::vector<long long> mask_tally_omp(std::span<const std::uint32_t> masks, int bits) {
    const std::size_t width = std::size_t{1} << bits;
    std::vector<long long> out(width, 0);
    const long count = static_cast<long>(masks.size());
#pragma omp parallel
    {
        std::vector<long long> local(width, 0);
#pragma omp for schedule(static) nowait
        for (long i = 0; i < count; ++i) ++local[masks[i]];
#pragma omp critical
        for (std::size_t m = 0; m < width; ++m) out[m] += local[m];
    }
    return out;
}

} // namespace whitney::kernels
