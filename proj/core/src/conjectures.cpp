#include "esymlab/conjectures.hpp"

#include <stdexcept>

namespace esymlab {

ViolationReport logconcavity_scan(const BigSeq& seq, std::size_t first, std::size_t last) {
    if (first < 1) throw std::invalid_argument("log-concavity scan starts at n >= 1");
    if (!seq.covers(first - 1) || !seq.covers(last + 1))
        throw std::out_of_range(seq.name + " does not cover the scan window");
    ViolationReport report{seq.name, first, last, {}};
    for (std::size_t n = first; n <= last; ++n) {
        const BigInt& a = seq.at(n);
        if (a * a < seq.at(n - 1) * seq.at(n + 1)) report.violations.push_back(n);
    }
    return report;
}

ViolationReport ratio_logconcavity_scan(const BigSeq& ejp, const BigSeq& p, RatioVariant variant,
                                        std::size_t first, std::size_t last) {
    if (first < 2) throw std::invalid_argument("ratio scan starts at n >= 2");
    if (!ejp.covers(first - 1) || !ejp.covers(last + 1) || !p.covers(first - 1) ||
        !p.covers(last + 1))
        throw std::out_of_range("ratio scan window not covered");
    ViolationReport report;
    report.name = ejp.name + (variant == RatioVariant::F ? "/p" : "/(n p)");
    report.first = first;
    report.last = last;
    for (std::size_t n = first; n <= last; ++n) {
        // (e_n/p_n)^2 >= (e_{n-1}/p_{n-1})(e_{n+1}/p_{n+1}), all p positive
        BigInt lhs = ejp.at(n) * ejp.at(n) * p.at(n - 1) * p.at(n + 1);
        BigInt rhs = ejp.at(n - 1) * ejp.at(n + 1) * p.at(n) * p.at(n);
        if (variant == RatioVariant::FOverN) {
            lhs *= static_cast<unsigned long>((n - 1) * (n + 1));
            rhs *= static_cast<unsigned long>(n * n);
        }
        if (lhs < rhs) report.violations.push_back(n);
    }
    return report;
}

ViolationReport ratio_logconcavity_scan(unsigned j, RatioVariant variant, std::size_t first,
                                        std::size_t last) {
    BigSeq e = ejp_dp(last + 1, j, PartSource::all(), LengthConstraint::any());
    BigSeq p{"p", "", 0, count_partitions_table(last + 1, PartSource::all(), LengthConstraint::any())};
    return ratio_logconcavity_scan(e, p, variant, first, last);
}

}  // namespace esymlab
