#include "esymlab/modlab.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "esymlab/error.hpp"
#include "esymlab/symfun.hpp"

namespace esymlab {

std::string to_string(Provenance p) {
    return p == Provenance::ExactReduction ? "exact" : "recurrence-extended";
}

bool ResidueSeq::has_extension() const {
    return std::any_of(provenance.begin(), provenance.end(), [](const ProvenanceRange& r) {
        return r.kind == Provenance::RecurrenceExtension;
    });
}

ResidueSeq reduce(const BigSeq& seq, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (seq.first != 0) throw std::invalid_argument("residue sequences start at index 0");
    ResidueSeq out;
    out.modulus = m;
    out.values.reserve(seq.values.size());
    BigInt r;
    for (const auto& v : seq.values) {
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
        out.values.push_back(r.get_ui());
    }
    if (!out.values.empty())
        out.provenance.push_back({0, out.values.size() - 1, Provenance::ExactReduction});
    return out;
}

PeriodReport detect_period(const ResidueSeq& seq, std::size_t burn_in_max) {
    const auto& a = seq.values;
    const std::size_t window = a.size();
    for (std::size_t p = 1; 4 * p <= window; ++p) {
        // smallest burn-in: one past the last index that breaks the period
        std::size_t burn_in = 0;
        for (std::size_t n = window - p; n-- > 0;) {
            if (a[n + p] != a[n]) {
                burn_in = n + 1;
                break;
            }
        }
        if (burn_in <= burn_in_max && window - burn_in >= 4 * p) {
            return PeriodReport{seq.modulus, window, p, burn_in};
        }
    }
    throw NoPeriodFound("no eventual period up to " + std::to_string(window / 4) +
                        " in a window of " + std::to_string(window) + " residues mod " +
                        std::to_string(seq.modulus));
}

LinRecurrence LinRecurrence::e2p4() {
    return LinRecurrence{{-1, -1, 0, 3, 6, 3, -3, -12, -12, -2, 10, 18,
                          10, -2, -12, -12, -3, 3, 6, 3, 0, -1}};
}

RecurrenceResult verify_linear_recurrence(const BigSeq& values, const LinRecurrence& rec,
                                          std::size_t first, std::size_t last) {
    if (first > last) return RecurrenceHolds{};
    if (!values.covers(first) || !values.covers(last + rec.order()))
        throw std::out_of_range("recurrence check needs values on [" + std::to_string(first) +
                                ", " + std::to_string(last + rec.order()) + "]");
    BigInt rhs;
    for (std::size_t n = first; n <= last; ++n) {
        rhs = 0;
        for (std::size_t k = 0; k < rec.order(); ++k) {
            const std::int64_t c = rec.coefficients[k];
            if (c > 0) {
                mpz_addmul_ui(rhs.get_mpz_t(), values.at(n + k).get_mpz_t(),
                              static_cast<unsigned long>(c));
            } else if (c < 0) {
                mpz_submul_ui(rhs.get_mpz_t(), values.at(n + k).get_mpz_t(),
                              static_cast<unsigned long>(-c));
            }
        }
        if (rhs != values.at(n + rec.order())) return RecurrenceFailure{n};
    }
    return RecurrenceHolds{};
}

ResidueSeq extend_mod(const BigSeq& prefix, const LinRecurrence& rec, std::uint64_t m,
                      std::size_t n_total) {
    const std::size_t d = rec.order();
    if (prefix.first != 0) throw std::invalid_argument("prefix must start at index 0");
    if (prefix.values.size() < d)
        throw PrefixTooShort("prefix has " + std::to_string(prefix.values.size()) +
                             " values, the recurrence needs at least " + std::to_string(d));
    if (prefix.values.size() > d) {
        auto check = verify_linear_recurrence(prefix, rec, 0, prefix.values.size() - 1 - d);
        if (auto* f = std::get_if<RecurrenceFailure>(&check))
            throw IdentityMismatch("prefix violates the recurrence at n=" + std::to_string(f->n));
    }
    ResidueSeq out = reduce(prefix, m);
    if (out.values.size() > n_total) {
        out.values.resize(n_total);
        out.provenance.clear();
        if (n_total) out.provenance.push_back({0, n_total - 1, Provenance::ExactReduction});
        return out;
    }
    if (m > (std::uint64_t{1} << 32)) throw std::invalid_argument("extend_mod supports m <= 2^32");
    const std::size_t exact = out.values.size();
    std::vector<std::uint64_t> coeff(d);
    for (std::size_t k = 0; k < d; ++k) {
        const std::int64_t c = rec.coefficients[k];
        const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c) % m;
        coeff[k] = c < 0 ? (m - mag) % m : mag;
    }
    out.values.reserve(n_total);
    for (std::size_t n = exact; n < n_total; ++n) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < d; ++k) {
            // m <= 2^32 keeps the product inside 64 bits
            acc = (acc + coeff[k] * out.values[n - d + k] % m) % m;
        }
        out.values.push_back(acc);
    }
    if (n_total > exact)
        out.provenance.push_back({exact, n_total - 1, Provenance::RecurrenceExtension});
    return out;
}

std::optional<std::size_t> first_period_violation(const ResidueSeq& seq, std::size_t p) {
    for (std::size_t n = 0; n + p < seq.values.size(); ++n) {
        if (seq.values[n] != seq.values[n + p]) return n;
    }
    return std::nullopt;
}

namespace {

// Residue multisets (sorted) with e_2 ≡ 1, 2, 3 (mod 4); everything else is 0.
using Quad = std::array<std::uint64_t, 4>;

Quad sorted_quad(Quad q) {
    std::sort(q.begin(), q.end());
    return q;
}

const std::array<std::vector<Quad>, 3>& mod4_cases() {
    static const std::array<std::vector<Quad>, 3> cases = [] {
        auto s = [](std::vector<Quad> v) {
            for (auto& q : v) q = sorted_quad(q);
            return v;
        };
        return std::array<std::vector<Quad>, 3>{
            s({{1, 1, 1, 2}, {0, 0, 1, 1}, {1, 1, 2, 2}, {1, 1, 0, 2}, {1, 1, 2, 3},
               {3, 3, 3, 2}, {0, 0, 3, 3}, {3, 3, 2, 2}, {3, 3, 0, 2}, {3, 3, 2, 1}}),
            s({{1, 1, 1, 1}, {1, 2, 2, 2}, {0, 0, 1, 2}, {1, 1, 3, 3},
               {3, 3, 3, 3}, {3, 2, 2, 2}, {0, 0, 3, 2}}),
            s({{0, 1, 1, 1}, {0, 1, 1, 3}, {0, 0, 1, 3}, {0, 1, 2, 3},
               {0, 3, 3, 3}, {0, 3, 3, 1}, {2, 2, 1, 3}}),
        };
    }();
    return cases;
}

}  // namespace

std::uint64_t classify_e2_mod(const Partition& p, std::uint64_t m) {
    if (p.length() != 4) throw std::invalid_argument("classify_e2_mod needs a partition of length 4");
    Quad rho{};
    for (std::size_t i = 0; i < 4; ++i) rho[i] = p[i] % m;
    rho = sorted_quad(rho);

    if (m == 2) {
        // odd iff one or two parts are even
        const auto even = std::count(rho.begin(), rho.end(), 0u);
        return (even == 1 || even == 2) ? 1 : 0;
    }
    if (m == 3) {
        std::array<int, 3> count{};
        for (auto r : rho) ++count[r];
        const int distinct = static_cast<int>(std::count_if(count.begin(), count.end(),
                                                            [](int c) { return c > 0; }));
        if (distinct == 3) return 2;
        if (distinct == 2 && std::all_of(count.begin(), count.end(),
                                         [](int c) { return c == 0 || c == 2; }))
            return 1;
        return 0;
    }
    if (m == 4) {
        const auto& cases = mod4_cases();
        for (std::uint64_t residue = 1; residue <= 3; ++residue) {
            const auto& list = cases[residue - 1];
            if (std::find(list.begin(), list.end(), rho) != list.end()) return residue;
        }
        return 0;
    }
    throw std::invalid_argument("classify_e2_mod supports m in {2,3,4}");
}

bool binomial_is_odd(std::uint64_t n, std::uint64_t k) {
    return k <= n && (k & ~n) == 0;
}

Check parity_ejB(std::uint64_t n, unsigned j, const BigSeq& ejB) {
    if (n < 2 || j < 2) throw std::invalid_argument("parity_ejB needs n, j >= 2");
    Check c;
    c.lhs = ejB.at(n);
    c.rhs = binomial(n - 2, j - 2);
    const bool lhs_odd = mpz_odd_p(c.lhs.get_mpz_t()) != 0;
    const bool rhs_odd = binomial_is_odd(n - 2, j - 2);
    c.pass = lhs_odd == rhs_odd;
    c.detail = "e_" + std::to_string(j) + "B(" + std::to_string(n) + ") = " + to_decimal(c.lhs) +
               ", C(" + std::to_string(n - 2) + "," + std::to_string(j - 2) + ") = " +
               to_decimal(c.rhs);
    return c;
}

Check parity_ejB(std::uint64_t n, unsigned j) {
    if (n < 2 || j < 2) throw std::invalid_argument("parity_ejB needs n, j >= 2");
    return parity_ejB(n, j, ejp_dp(n, j, PartSource::binary(), LengthConstraint::any()));
}

Check mod4_binary_sums(std::uint64_t n, const std::vector<BigInt>& b) {
    if (n < 3) throw std::invalid_argument("mod4_binary_sums needs n >= 3");
    if (b.size() <= n) throw std::out_of_range("binary partition counts do not reach n");
    BigInt sum = 0;
    for (std::uint64_t k = 1; k <= n - 2; ++k) sum += b[n - k];
    Check c;
    c.lhs = (n % 2 == 0) ? sum : BigInt(b[n] - sum);
    c.rhs = 0;
    c.pass = mpz_divisible_ui_p(c.lhs.get_mpz_t(), 4) != 0;
    c.detail = std::string(n % 2 == 0 ? "sum" : "B(n) - sum") + " = " + to_decimal(c.lhs) +
               " for n=" + std::to_string(n);
    return c;
}

Check mod4_binary_sums(std::uint64_t n) {
    return mod4_binary_sums(n, count_partitions_table(n, PartSource::binary(), LengthConstraint::any()));
}

}  // namespace esymlab
