#include "esymlab/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "esymlab/error.hpp"

namespace esymlab {

Ring Ring::mod(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    return Ring(m);
}

std::string Ring::name() const {
    return is_exact() ? "exact" : "mod " + std::to_string(modulus_);
}

void Ring::normalize(BigInt& v) const {
    if (is_exact()) return;
    mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), modulus_);
}

TruncatedSeries::TruncatedSeries(std::size_t order, Ring ring)
    : coeffs_(order + 1, 0), ring_(ring) {}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<BigInt> coeffs, std::size_t order,
                                             Ring ring) {
    TruncatedSeries s(order, ring);
    const std::size_t n = std::min(coeffs.size(), order + 1);
    for (std::size_t i = 0; i < n; ++i) {
        s.coeffs_[i] = std::move(coeffs[i]);
        ring.normalize(s.coeffs_[i]);
    }
    return s;
}

TruncatedSeries TruncatedSeries::constant(const BigInt& c, std::size_t order, Ring ring) {
    return monomial(0, c, order, ring);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, const BigInt& c, std::size_t order,
                                          Ring ring) {
    TruncatedSeries s(order, ring);
    if (exponent <= order) {
        s.coeffs_[exponent] = c;
        ring.normalize(s.coeffs_[exponent]);
    }
    return s;
}

TruncatedSeries TruncatedSeries::reduced(std::uint64_t m) const {
    if (!ring_.is_exact())
        throw RingMismatch("only exact series can be reduced, this one is " + ring_.name());
    return from_coeffs(coeffs_, order(), Ring::mod(m));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot raise truncation order");
    return from_coeffs(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + new_order + 1),
                       new_order, ring_);
}

TruncatedSeries TruncatedSeries::scaled(const BigInt& c) const {
    TruncatedSeries s = *this;
    for (auto& v : s.coeffs_) {
        v *= c;
        ring_.normalize(v);
    }
    return s;
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t e) const {
    TruncatedSeries result = constant(1, order(), ring_);
    TruncatedSeries base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

TruncatedSeries& TruncatedSeries::divide_one_minus_q_pow(std::size_t a) {
    if (a == 0) throw std::invalid_argument("1 - q^0 is not invertible");
    for (std::size_t n = a; n < coeffs_.size(); ++n) {
        coeffs_[n] += coeffs_[n - a];
        ring_.normalize(coeffs_[n]);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::multiply_one_minus_q_pow(std::size_t a) {
    if (a == 0) {
        std::fill(coeffs_.begin(), coeffs_.end(), 0);
        return *this;
    }
    for (std::size_t n = coeffs_.size(); n-- > a;) {
        coeffs_[n] -= coeffs_[n - a];
        ring_.normalize(coeffs_[n]);
    }
    return *this;
}

namespace {

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring()))
        throw RingMismatch("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries s(std::min(a.order(), b.order()), a.ring());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        s.ring_.normalize(s.coeffs_[i]);
    }
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries s(std::min(a.order(), b.order()), a.ring());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        s.ring_.normalize(s.coeffs_[i]);
    }
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries s(order, a.ring());
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t k = 0; i + k <= order; ++k) {
            if (b.coeffs_[k] == 0) continue;
            mpz_addmul(s.coeffs_[i + k].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[k].get_mpz_t());
        }
    }
    for (auto& v : s.coeffs_) s.ring_.normalize(v);
    return s;
}

TruncatedSeries product_over_source(const PartSource& src, std::size_t order,
                                    FactorNumerator numerator, Ring ring) {
    TruncatedSeries s = TruncatedSeries::constant(1, order, ring);
    for (Part a : src.parts_up_to(order)) {
        if (numerator == FactorNumerator::OnePlus) {
            // (1 + q^a) = (1 - q^{2a}) / (1 - q^a)
            s.multiply_one_minus_q_pow(2 * a);
            s.divide_one_minus_q_pow(a);
        }
        s.divide_one_minus_q_pow(a);
    }
    return s;
}

IdentityResult check_identity(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    require_same_ring(lhs, rhs);
    const std::size_t order = std::min(lhs.order(), rhs.order());
    for (std::size_t i = 0; i <= order; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) return FirstMismatch{i, lhs.coeff(i), rhs.coeff(i)};
    }
    return Match{};
}

TruncatedSeries substitute_power(const TruncatedSeries& s, std::size_t k) {
    if (k == 0) throw std::invalid_argument("substitution power must be positive");
    std::vector<BigInt> out(s.order() * k + 1, 0);
    for (std::size_t i = 0; i <= s.order(); ++i) out[i * k] = s.coeff(i);
    return TruncatedSeries::from_coeffs(std::move(out), s.order() * k, s.ring());
}

TruncatedSeries extract_power(const TruncatedSeries& s, std::size_t k) {
    if (k == 0) throw std::invalid_argument("extraction power must be positive");
    std::vector<BigInt> out(s.order() / k + 1, 0);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i % k == 0) {
            out[i / k] = s.coeff(i);
        } else if (s.coeff(i) != 0) {
            throw NotSupported("coefficient at exponent " + std::to_string(i) +
                               " is nonzero and not a multiple of " + std::to_string(k));
        }
    }
    return TruncatedSeries::from_coeffs(std::move(out), s.order() / k, s.ring());
}

TruncatedSeries section(const TruncatedSeries& s, std::size_t k, std::size_t r) {
    if (k == 0) throw std::invalid_argument("section modulus must be positive");
    std::vector<BigInt> out(s.order() + 1, 0);
    for (std::size_t i = r % k; i <= s.order(); i += k) out[i] = s.coeff(i);
    return TruncatedSeries::from_coeffs(std::move(out), s.order(), s.ring());
}

TruncatedSeries divide_by_q_power(const TruncatedSeries& s, std::size_t d) {
    if (d > s.order()) throw NotSupported("shift exceeds the truncation order");
    for (std::size_t i = 0; i < d; ++i) {
        if (s.coeff(i) != 0)
            throw NotSupported("coefficient at exponent " + std::to_string(i) + " is nonzero");
    }
    std::vector<BigInt> out(s.coeffs().begin() + d, s.coeffs().end());
    return TruncatedSeries::from_coeffs(std::move(out), s.order() - d, s.ring());
}

}  // namespace esymlab
