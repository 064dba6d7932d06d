#ifndef WHITNEY_KERNELS_HPP
#define WHITNEY_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "whitney/poset.hpp"

// Data-parallel kernels. Every kernel has a serial reference and an OpenMP
// variant that must agree exactly; tests compare the two.
namespace whitney::kernels {

void set_num_threads(int n);
int max_threads();

// Upset closure given CSR up-covers and a topological order (bottom first).
BitMatrix upset_closure_serial(std::size_t n, std::span<const std::uint32_t> up_offsets,
                               std::span<const ElementId> up_targets, std::span<const ElementId> topo);
BitMatrix upset_closure_omp(std::size_t n, std::span<const std::uint32_t> up_offsets,
                            std::span<const ElementId> up_targets, std::span<const ElementId> topo);

// mu(x, .) for one x.
std::vector<long long> mobius_row(const Poset& P, ElementId x);

// Full Möbius matrix, row-major n*n, zero where x is not below y.
std::vector<long long> mobius_matrix_serial(const Poset& P);
std::vector<long long> mobius_matrix_omp(const Poset& P);

// Tally of descent masks: out[mask] = number of inputs with that mask.
std::vector<long long> mask_tally_serial(std::span<const std::uint32_t> masks, int bits);
std::vector<long long> mask_tally_omp(std::span<const std::uint32_t> masks, int bits);

} // namespace whitney::kernels

#endif
