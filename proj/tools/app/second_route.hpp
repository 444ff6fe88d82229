#ifndef ESYMLAB_APP_SECOND_ROUTE_HPP
#define ESYMLAB_APP_SECOND_ROUTE_HPP

#include <optional>
#include <string>

#include "esymlab/aggregates.hpp"
#include "esymlab/sequences.hpp"

namespace esymlab::app {

/// Largest index the independent route can reach at reasonable cost.
std::size_t second_route_limit(const std::string& name);

/// A registered sequence recomputed by a method that shares no code path with
/// compute_sequence: series products for counts, the closed convolution for
/// e_j over all/odd/binary parts, Newton's identities over a power-sum DP for
/// the four-part aggregates, trial division for sigma, the recurrence for b12
/// and explicit images for b22.
BigSeq second_route(const std::string& name, const SequenceParams& params, std::size_t n_max);

/// Σ_{λ ∈ P(4,n)} e_j(λ) for j in {2,3} from Σ P_2 and Σ P_3 over four-part partitions.
BigSeq four_part_newton(unsigned j, std::size_t n_max);

}  // namespace esymlab::app

#endif
