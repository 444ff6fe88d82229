#ifndef ESYMLAB_SEQUENCES_HPP
#define ESYMLAB_SEQUENCES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "esymlab/aggregates.hpp"
#include "esymlab/partition.hpp"

namespace esymlab {

/// Parameters; only "sigma" reads them.
struct SequenceParams {
    unsigned j = 1;
    PartSource src = PartSource::all();
};

/// p, pQ, pB, p4, e2p, e3p, e2Q, e3Q, e2B, e3B, e2p4, e3p4, sigma, b12, b22.
const std::vector<std::string>& registered_sequences();
bool is_registered_sequence(std::string_view name);

/// 1 for sigma, 0 otherwise.
std::size_t sequence_first_index(std::string_view name);

/// "none" unless the sequence reads its parameters.
std::string canonical_params(std::string_view name, const SequenceParams& params);

/// Values on [first_index, n_max]. Throws std::invalid_argument for unknown names.
BigSeq compute_sequence(std::string_view name, const SequenceParams& params, std::size_t n_max);

}  // namespace esymlab

#endif
