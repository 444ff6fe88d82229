#ifndef ESYMLAB_MODLAB_HPP
#define ESYMLAB_MODLAB_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "esymlab/aggregates.hpp"
#include "esymlab/bigint.hpp"
#include "esymlab/partition.hpp"

namespace esymlab {

enum class Provenance { ExactReduction, RecurrenceExtension };

std::string to_string(Provenance p);

struct ProvenanceRange {
    std::size_t begin;  // inclusive
    std::size_t end;    // inclusive
    Provenance kind;
};

/// Residues in [0, m) on indices 0..size()-1.
struct ResidueSeq {
    std::uint64_t modulus = 2;
    std::vector<std::uint64_t> values;
    std::vector<ProvenanceRange> provenance;

    std::size_t size() const noexcept { return values.size(); }
    bool has_extension() const;
};

/// Reduces an exact sequence (indexed from 0) modulo m.
ResidueSeq reduce(const BigSeq& seq, std::uint64_t m);

/// Eventual period: a(n + period) ≡ a(n) for burn_in <= n <= window - 1 - period,
/// with the tail after the burn-in spanning at least four periods.
struct PeriodReport {
    std::uint64_t modulus;
    std::size_t window;  // number of residues examined
    std::size_t period;
    std::size_t burn_in;
    bool pure() const noexcept { return burn_in == 0; }
};

/// Smallest qualifying period with burn-in at most burn_in_max, and the
/// smallest burn-in for it. Throws NoPeriodFound.
PeriodReport detect_period(const ResidueSeq& seq, std::size_t burn_in_max);
inline PeriodReport detect_period(const ResidueSeq& seq) { return detect_period(seq, seq.size()); }

/// y(n + order) = Σ_k coefficients[k] y(n + k).
struct LinRecurrence {
    std::vector<std::int64_t> coefficients;

    std::size_t order() const noexcept { return coefficients.size(); }

    /// The conjectured order-22 recurrence for e_2p_4(n).
    static LinRecurrence e2p4();
};

struct RecurrenceHolds {};
struct RecurrenceFailure {
    std::size_t n;
};
using RecurrenceResult = std::variant<RecurrenceHolds, RecurrenceFailure>;

/// Checks the recurrence for every n in [first, last]; values must cover
/// [first, last + order]. Throws std::out_of_range otherwise.
RecurrenceResult verify_linear_recurrence(const BigSeq& values, const LinRecurrence& rec,
                                          std::size_t first, std::size_t last);

/// Extends a verified exact prefix (indexed from 0) to N residues mod m.
/// Throws PrefixTooShort if the prefix has fewer than order values and
/// IdentityMismatch if the prefix violates the recurrence.
ResidueSeq extend_mod(const BigSeq& prefix, const LinRecurrence& rec, std::uint64_t m,
                      std::size_t n_total);

/// First index n with a(n + p) ≢ a(n), if any.
std::optional<std::size_t> first_period_violation(const ResidueSeq& seq, std::size_t p);

/// e_2(λ) mod m for a 4-part partition, predicted from the multiset of part
/// residues alone. m must be 2, 3 or 4.
std::uint64_t classify_e2_mod(const Partition& p, std::uint64_t m);

struct Check {
    bool pass = false;
    BigInt lhs;
    BigInt rhs;
    std::string detail;
};

/// C(n, k) mod 2 by the bit-subset criterion.
bool binomial_is_odd(std::uint64_t n, std::uint64_t k);

/// e_jB(n) ≡ C(n-2, j-2) (mod 2). lhs is e_jB(n), rhs is the binomial.
Check parity_ejB(std::uint64_t n, unsigned j);
/// Same, reading e_jB(n) from a precomputed sequence.
Check parity_ejB(std::uint64_t n, unsigned j, const BigSeq& ejB);

/// n even: Σ_{k=1}^{n-2} B(n-k) ≡ 0 (mod 4); n odd: B(n) - Σ ≡ 0 (mod 4).
Check mod4_binary_sums(std::uint64_t n);
Check mod4_binary_sums(std::uint64_t n, const std::vector<BigInt>& binary_counts);

}  // namespace esymlab

#endif
