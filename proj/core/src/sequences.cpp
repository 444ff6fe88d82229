#include "esymlab/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "esymlab/prelab.hpp"

namespace esymlab {

const std::vector<std::string>& registered_sequences() {
    static const std::vector<std::string> names = {"p",   "pQ",  "pB",  "p4",   "e2p",
                                                   "e3p", "e2Q", "e3Q", "e2B",  "e3B",
                                                   "e2p4", "e3p4", "sigma", "b12", "b22"};
    return names;
}

bool is_registered_sequence(std::string_view name) {
    const auto& names = registered_sequences();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t sequence_first_index(std::string_view name) { return name == "sigma" ? 1 : 0; }

std::string canonical_params(std::string_view name, const SequenceParams& params) {
    if (name == "sigma") return "j=" + std::to_string(params.j) + ",src=" + params.src.name();
    return "none";
}

namespace {

BigSeq make(std::string_view name, std::string params, std::vector<BigInt> values) {
    return BigSeq{std::string(name), std::move(params), 0, std::move(values)};
}

}  // namespace

BigSeq compute_sequence(std::string_view name, const SequenceParams& params, std::size_t n_max) {
    const auto any = LengthConstraint::any();
    const std::string canon = canonical_params(name, params);

    if (name == "p") return make(name, canon, count_partitions_table(n_max, PartSource::all(), any));
    if (name == "pQ") return make(name, canon, count_partitions_table(n_max, PartSource::odd(), any));
    if (name == "pB")
        return make(name, canon, count_partitions_table(n_max, PartSource::binary(), any));
    if (name == "p4")
        return make(name, canon,
                    count_partitions_table(n_max, PartSource::all(), LengthConstraint::exactly(4)));

    struct ElemSpec {
        std::string_view name;
        unsigned j;
        PartSource src;
        LengthConstraint len;
    };
    const ElemSpec elem[] = {
        {"e2p", 2, PartSource::all(), any},
        {"e3p", 3, PartSource::all(), any},
        {"e2Q", 2, PartSource::odd(), any},
        {"e3Q", 3, PartSource::odd(), any},
        {"e2B", 2, PartSource::binary(), any},
        {"e3B", 3, PartSource::binary(), any},
        {"e2p4", 2, PartSource::all(), LengthConstraint::exactly(4)},
        {"e3p4", 3, PartSource::all(), LengthConstraint::exactly(4)},
    };
    for (const auto& e : elem) {
        if (name == e.name) {
            BigSeq s = ejp_dp(n_max, e.j, e.src, e.len);
            s.name = std::string(name);
            s.params = canon;
            return s;
        }
    }

    if (name == "sigma") {
        if (params.j == 0) throw std::invalid_argument("sigma needs j >= 1");
        BigSeq s = sigma_restricted_seq(n_max, params.j, params.src);
        s.params = canon;
        return s;
    }
    if (name == "b12") return make(name, canon, b12_table(n_max));
    if (name == "b22") return make(name, canon, b22_fast_table(n_max));

    throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

}  // namespace esymlab
