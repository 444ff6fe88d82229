#ifndef ESYMLAB_SYMFUN_HPP
#define ESYMLAB_SYMFUN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "esymlab/bigint.hpp"
#include "esymlab/partition.hpp"

namespace esymlab {

inline constexpr std::size_t kDefaultExpansionCap = 1'000'000;

/// P_k(λ) = Σ λ_i^k.
BigInt power_sum(const Partition& p, unsigned k);

/// (e_0, ..., e_j) evaluated at the parts, folded in one pass with
/// e_i <- e_i + x * e_{i-1}.
std::vector<BigInt> elem_vector(const Partition& p, unsigned j);

BigInt elem_sym(const Partition& p, unsigned j);

/// Same fold in machine words; nullopt if any intermediate overflows.
std::optional<std::uint64_t> elem_sym_u64(std::span<const Part> parts, unsigned j);

/// e_2 = (P_1^2 - P_2) / 2 and e_3 = (P_1^3 - 3 P_1 P_2 + 2 P_3) / 6.
/// Throws UnsupportedJ for any other j.
BigInt elem_sym_via_newton(const Partition& p, unsigned j);

/// Saturating binomial used for expansion-size checks.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

/// The partition whose parts are the C(ℓ, j) products of j distinct-index
/// parts; empty when ℓ < j. Throws ExpansionCap when C(ℓ, j) > cap and
/// std::overflow_error if a product leaves 64 bits.
Partition pre_j(const Partition& p, unsigned j, std::size_t cap = kDefaultExpansionCap);

}  // namespace esymlab

#endif
