#ifndef ESYMLAB_AGGREGATES_HPP
#define ESYMLAB_AGGREGATES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "esymlab/bigint.hpp"
#include "esymlab/partition.hpp"

namespace esymlab {

/// A named sequence of exact values on a contiguous index range [first, first + size).
struct BigSeq {
    std::string name;
    std::string params;
    std::size_t first = 0;
    std::vector<BigInt> values;

    std::size_t last() const { return first + values.size() - 1; }
    bool covers(std::size_t n) const { return n >= first && n < first + values.size(); }
    const BigInt& at(std::size_t n) const {
        if (!covers(n)) throw std::out_of_range(name + ": index " + std::to_string(n) + " not covered");
        return values[n - first];
    }
};

/// σ_{j,A}(n) = Σ_{d | n, d ∈ A} d^j.
BigInt sigma_restricted(std::uint64_t n, unsigned j, const PartSource& src);

/// σ_{j,A}(k) for k in [1, n_max], by sieving over the allowed divisors.
BigSeq sigma_restricted_seq(std::size_t n_max, unsigned j, const PartSource& src);

/// Σ e_j(λ) over the enumerated partitions.
BigInt ejp_bruteforce(Part n, unsigned j, const PartSource& src, const LengthConstraint& len);

/// Closed convolution in p(·|A) and σ_{2,A}, σ_{3,A}, valid for n >= 1 and j in {2,3}.
/// Throws UnsupportedJ otherwise.
BigInt ejp_theorem1(Part n, unsigned j, const PartSource& src);

/// Σ_λ e_j(λ) for every n in [0, n_max] without enumeration. Each allowed part x
/// is appended to partitions of n - x, carrying the vector of e_0..e_j sums.
BigSeq ejp_dp(std::size_t n_max, unsigned j, const PartSource& src, const LengthConstraint& len);

/// Σ_{λ ∈ P(n|A)} P_j(λ), computed once by a DP over partitions and once by the
/// convolution Σ_{k=1}^n σ_{j,A}(k) p(n-k|A). Throws IdentityMismatch if they differ.
BigInt power_sum_total(Part n, unsigned j, const PartSource& src);

/// The DP side alone, for every n in [0, n_max].
std::vector<BigInt> power_sum_total_table(std::size_t n_max, unsigned j, const PartSource& src);

/// The convolution side alone, for every n in [0, n_max].
std::vector<BigInt> power_sum_convolution_table(std::size_t n_max, unsigned j,
                                                const PartSource& src);

}  // namespace esymlab

#endif
