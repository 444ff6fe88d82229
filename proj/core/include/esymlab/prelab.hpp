#ifndef ESYMLAB_PRELAB_HPP
#define ESYMLAB_PRELAB_HPP

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "esymlab/bigint.hpp"
#include "esymlab/modlab.hpp"
#include "esymlab/partition.hpp"
#include "esymlab/symfun.hpp"

namespace esymlab {

/// Two distinct preimages with the same pre_j image.
struct Collision {
    Partition first;
    Partition second;
    Partition image;
};

/// Filter on preimage length, inclusive on both ends.
struct LengthWindow {
    std::size_t min_length = 0;
    std::size_t max_length = static_cast<std::size_t>(-1);
    bool admits(std::size_t l) const noexcept { return l >= min_length && l <= max_length; }
};

/// The deduplicated set pre_j(A(n)), mapping each image to its first preimage.
struct ImageSet {
    Part n = 0;
    unsigned j = 0;
    std::size_t preimage_count = 0;
    std::unordered_map<Partition, Partition, PartitionHash> images;
    std::vector<Collision> collisions;

    std::size_t size() const noexcept { return images.size(); }
};

ImageSet image_set(Part n, unsigned j, const PartSource& src, LengthWindow window = {},
                   std::size_t cap = kDefaultExpansionCap);

bool has_odd_parts(const Partition& p);      // vacuously true for ()
bool has_distinct_parts(const Partition& p);  // vacuously true for ()

/// o_j(n), d_j(n) over the image set pre_j(P(n)). The empty image counts as
/// both odd and distinct; the *_nonempty fields leave it out.
struct OddDistinctCount {
    Part n = 0;
    unsigned j = 0;
    std::size_t odd = 0;
    std::size_t distinct = 0;
    std::size_t odd_nonempty = 0;
    std::size_t distinct_nonempty = 0;
    std::size_t images = 0;
    std::size_t preimages = 0;
    std::size_t collisions = 0;
};

OddDistinctCount odd_distinct_counts(Part n, unsigned j, std::size_t cap = kDefaultExpansionCap);

struct NoCollision {};
using InjectivityResult = std::variant<NoCollision, Collision>;

/// Scans pre_j on partitions of n from src whose length lies in the window.
InjectivityResult injectivity_scan(Part n, unsigned j, const PartSource& src,
                                   LengthWindow window = {}, std::size_t cap = kDefaultExpansionCap);

/// Parts equal to 1 across pre_2(B(n)), counted over binary partitions with
/// m_ν(1) = C(m_λ(1), 2).
BigInt b12(Part n);

/// b(n) = b(n-1) + b(⌊(n+1)/2⌋) + b(⌈(n+1)/2⌉) for n >= 3, b(1) = 0, b(2) = 1;
/// b(0) = 0. Values for n in [0, n_max].
std::vector<BigInt> b12_recurrence_table(std::size_t n_max);
BigInt b12_recurrence(Part n);

/// b12 for n in [0, n_max] grouped by m_λ(1) = k: Σ_k C(k,2) B((n-k)/2).
std::vector<BigInt> b12_table(std::size_t n_max);

/// Parts equal to 2 across the explicit images pre_2(B(n)).
BigInt b22(Part n);

/// b22 for n in [0, n_max] from Σ_λ m_λ(1) m_λ(2), by grouping on (m_λ(1), m_λ(2))
/// and counting the remaining parts (all >= 4) as B(r/4).
std::vector<BigInt> b22_fast_table(std::size_t n_max);

/// Δb22(2n+1) = Δb22(2n) = b12(n+1), with b22(0) = 0. The enumeration route
/// builds explicit images; the fast route uses b22_fast_table.
Check b22_delta_check(Part n, bool fast = false);
Check b22_delta_check(Part n, const std::vector<BigInt>& b22_values,
                      const std::vector<BigInt>& b12_values);

}  // namespace esymlab

#endif
