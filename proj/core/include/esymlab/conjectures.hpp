#ifndef ESYMLAB_CONJECTURES_HPP
#define ESYMLAB_CONJECTURES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "esymlab/aggregates.hpp"

namespace esymlab {

/// Indices where a tested inequality fails; empty means it holds on the window.
struct ViolationReport {
    std::string name;
    std::size_t first = 0;
    std::size_t last = 0;
    std::vector<std::size_t> violations;

    bool holds() const noexcept { return violations.empty(); }
    std::optional<std::size_t> max_violation() const {
        return violations.empty() ? std::nullopt : std::optional(violations.back());
    }
};

/// a_n^2 >= a_{n-1} a_{n+1} for n in [first, last], in exact integers.
/// seq must cover [first - 1, last + 1] and first must be >= 1.
ViolationReport logconcavity_scan(const BigSeq& seq, std::size_t first, std::size_t last);

enum class RatioVariant {
    F,       // F(n) = e_jp(n) / p(n)
    FOverN,  // F(n) / n
};

/// Log-concavity of F or F/n, decided by cross-multiplication. first must be >= 2.
ViolationReport ratio_logconcavity_scan(const BigSeq& ejp, const BigSeq& p, RatioVariant variant,
                                        std::size_t first, std::size_t last);

/// Same, computing e_jp and p on [first - 1, last + 1].
ViolationReport ratio_logconcavity_scan(unsigned j, RatioVariant variant, std::size_t first,
                                        std::size_t last);

}  // namespace esymlab

#endif
