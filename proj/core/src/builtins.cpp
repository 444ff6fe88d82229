#include "esymlab/builtins.hpp"

#include <regex>

#include "esymlab/error.hpp"
#include "esymlab/sequences.hpp"

namespace esymlab {

namespace {

TruncatedSeries from_values(std::vector<BigInt> values, std::size_t first, std::size_t order,
                            const Ring& ring) {
    std::vector<BigInt> coeffs(order + 1, 0);
    for (std::size_t i = 0; i < values.size() && first + i <= order; ++i)
        coeffs[first + i] = std::move(values[i]);
    return TruncatedSeries::from_coeffs(std::move(coeffs), order, ring);
}

PartSource source_suffix(const std::string& suffix) {
    if (suffix.empty()) return PartSource::all();
    if (suffix == "odd") return PartSource::odd();
    return PartSource::binary();
}

}  // namespace

TruncatedSeries resolve_builtin(const std::string& name, std::size_t order, const Ring& ring,
                                const SequenceSource& sequences) {
    if (is_registered_sequence(name)) {
        BigSeq s = sequences(name, order);
        return from_values(std::move(s.values), s.first, order, ring);
    }
    if (name == "prod") return product_over_source(PartSource::all(), order, FactorNumerator::One, ring);
    if (name == "oddprod")
        return product_over_source(PartSource::odd(), order, FactorNumerator::One, ring);
    if (name == "binaryprod")
        return product_over_source(PartSource::binary(), order, FactorNumerator::One, ring);
    if (name == "binaryOddProd")
        return product_over_source(PartSource::binary(), order, FactorNumerator::OnePlus, ring);
    if (name == "b22delta") {
        BigSeq s = sequences("b22", order + 1);
        std::vector<BigInt> delta(order + 1);
        for (std::size_t n = 0; n <= order; ++n) delta[n] = s.at(n + 1) - s.at(n);
        return from_values(std::move(delta), 0, order, ring);
    }

    static const std::regex elem_re(R"(e([1-9][0-9]*)(p|Q|B)([1-9][0-9]*)?)");
    static const std::regex count_re(R"(p([1-9][0-9]*))");
    static const std::regex sigma_re(R"((sigma|psum)([1-9][0-9]*)(odd|bin)?)");
    std::smatch m;
    if (std::regex_match(name, m, elem_re)) {
        const unsigned j = static_cast<unsigned>(std::stoul(m[1]));
        const std::string kind = m[2];
        PartSource src = kind == "p" ? PartSource::all()
                         : kind == "Q" ? PartSource::odd()
                                       : PartSource::binary();
        LengthConstraint len = LengthConstraint::any();
        if (m[3].matched) {
            if (kind != "p") throw UnknownBuiltin("unknown builtin #" + name);
            len = LengthConstraint::exactly(std::stoul(m[4 - 1]));
        }
        return from_values(ejp_dp(order, j, src, len).values, 0, order, ring);
    }
    if (std::regex_match(name, m, count_re)) {
        return from_values(count_partitions_table(order, PartSource::all(),
                                                  LengthConstraint::exactly(std::stoul(m[1]))),
                           0, order, ring);
    }
    if (std::regex_match(name, m, sigma_re)) {
        const unsigned j = static_cast<unsigned>(std::stoul(m[2]));
        const PartSource src = source_suffix(m[3].matched ? m[3].str() : "");
        if (m[1] == "sigma") return from_values(sigma_restricted_seq(order, j, src).values, 1, order, ring);
        return from_values(power_sum_total_table(order, j, src), 0, order, ring);
    }
    throw UnknownBuiltin("unknown builtin #" + name);
}

TruncatedSeries core_builtin(const std::string& name, std::size_t order, const Ring& ring) {
    return resolve_builtin(name, order, ring, [](const std::string& seq, std::size_t n_max) {
        return compute_sequence(seq, SequenceParams{}, n_max);
    });
}

std::vector<std::string> builtin_examples() {
    std::vector<std::string> out = registered_sequences();
    for (const char* s : {"e4p", "e2p5", "p3", "prod", "oddprod", "binaryprod", "binaryOddProd",
                          "sigma2", "sigma3odd", "sigma2bin", "psum2", "psum3bin", "b22delta"})
        out.emplace_back(s);
    return out;
}

}  // namespace esymlab
