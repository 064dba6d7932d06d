#include "whitney/kernels.hpp"

namespace whitney::kernels {

BitMatrix upset_closure_serial(std::size_t n, std::span<const std::uint32_t> up_offsets,
                               std::span<const ElementId> up_targets, std::span<const ElementId> topo) {
    BitMatrix M(n);
    const std::size_t words = M.words_per_row();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        ElementId x = *it;
        M.set(x, x);
        std::uint64_t* rx = M.row(x);
        for (std::uint32_t e = up_offsets[x]; e < up_offsets[x + 1]; ++e) {
            const std::uint64_t* ry = M.row(up_targets[e]);
            for (std::size_t w = 0; w < words; ++w) rx[w] |= ry[w];
        }
    }
    return M;
}

std::vector<long long> mobius_row(const Poset& P, ElementId x) {
    std::vector<long long> row(P.size(), 0);
    row[x] = 1;
    std::vector<ElementId> above;
    for (int k = P.rank(x) + 1; k <= P.height(); ++k)
        for (ElementId z : P.level(k))
            if (P.leq(x, z)) above.push_back(z);
    for (std::size_t i = 0; i < above.size(); ++i) {
        ElementId y = above[i];
        long long s = 1;
        for (std::size_t j = 0; j < i; ++j) {
            ElementId z = above[j];
            if (P.rank(z) >= P.rank(y)) break;
            if (P.leq(z, y)) s += row[z];
        }
        row[y] = -s;
    }
    return row;
}

std::vector<long long> mobius_matrix_serial(const Poset& P) {
    const std::size_t n = P.size();
    std::vector<long long> M(n * n, 0);
    for (ElementId x = 0; x < n; ++x) {
        auto row = mobius_row(P, x);
        std::copy(row.begin(), row.end(), M.begin() + static_cast<std::ptrdiff_t>(x * n));
    }
    return M;
}

std::vector<long long> mask_tally_serial(std::span<const std::uint32_t> masks, int bits) {
    std::vector<long long> out(std::size_t{1} << bits, 0);
    for (std::uint32_t m : masks) ++out[m];
    return out;
}

} // namespace whitney::kernels
