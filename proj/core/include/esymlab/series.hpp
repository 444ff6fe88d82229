#ifndef ESYMLAB_SERIES_HPP
#define ESYMLAB_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "esymlab/bigint.hpp"
#include "esymlab/partition.hpp"

namespace esymlab {

inline constexpr std::size_t kDefaultSeriesOrder = 500;

/// Coefficient ring: exact integers or residues mod m (m >= 2).
class Ring {
public:
    static Ring exact() { return Ring(0); }
    /// Throws std::invalid_argument when m < 2.
    static Ring mod(std::uint64_t m);

    bool is_exact() const noexcept { return modulus_ == 0; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::string name() const;

    /// Canonical representative: identity when exact, [0, m) otherwise.
    void normalize(BigInt& v) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    explicit Ring(std::uint64_t m) : modulus_(m) {}
    std::uint64_t modulus_;
};

/// Power series in q known exactly for exponents 0..order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order, Ring ring = Ring::exact());

    /// Missing coefficients are zero; extra ones are dropped.
    static TruncatedSeries from_coeffs(std::vector<BigInt> coeffs, std::size_t order,
                                       Ring ring = Ring::exact());
    static TruncatedSeries constant(const BigInt& c, std::size_t order, Ring ring = Ring::exact());
    static TruncatedSeries monomial(std::size_t exponent, const BigInt& c, std::size_t order,
                                    Ring ring = Ring::exact());

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Ring& ring() const noexcept { return ring_; }
    const BigInt& coeff(std::size_t n) const { return coeffs_.at(n); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Coefficientwise reduction of an exact series into Mod(m).
    TruncatedSeries reduced(std::uint64_t m) const;
    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries scaled(const BigInt& c) const;
    TruncatedSeries pow(std::uint64_t e) const;

    /// Multiplies by 1/(1 - q^a), i.e. by Σ_k q^{ak}.
    TruncatedSeries& divide_one_minus_q_pow(std::size_t a);
    TruncatedSeries& multiply_one_minus_q_pow(std::size_t a);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
    Ring ring_;
};

enum class FactorNumerator {
    One,      // Π 1/(1 - q^a)
    OnePlus,  // Π (1 + q^a)/(1 - q^a)
};

/// Π over allowed parts a <= order of the chosen factor. Factors with a > order
/// cannot affect retained coefficients and are skipped.
TruncatedSeries product_over_source(const PartSource& src, std::size_t order,
                                    FactorNumerator numerator = FactorNumerator::One,
                                    Ring ring = Ring::exact());

struct Match {
    friend bool operator==(const Match&, const Match&) = default;
};

struct FirstMismatch {
    std::size_t exponent;
    BigInt lhs;
    BigInt rhs;
};

using IdentityResult = std::variant<Match, FirstMismatch>;

/// Compares coefficients up to the smaller order. Throws RingMismatch.
IdentityResult check_identity(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

inline bool is_match(const IdentityResult& r) { return std::holds_alternative<Match>(r); }

/// q -> q^k. The result is exact to order k * s.order().
TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t k);

/// Inverse of substitute_power. Throws NotSupported if a nonzero coefficient
/// sits at an exponent not divisible by k.
TruncatedSeries extract_power(const TruncatedSeries& s, std::size_t k);

/// Σ_{n ≡ r (mod k)} c_n q^n.
TruncatedSeries section(const TruncatedSeries& s, std::size_t k, std::size_t r);

/// Divides by q^d. Throws NotSupported if a coefficient below q^d is nonzero.
TruncatedSeries divide_by_q_power(const TruncatedSeries& s, std::size_t d);

}  // namespace esymlab

#endif
