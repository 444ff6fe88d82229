#include "esymlab/symfun.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "esymlab/error.hpp"

namespace esymlab {

BigInt power_sum(const Partition& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("power sum index must be positive");
    BigInt total = 0;
    BigInt term;
    for (Part x : p.parts()) {
        mpz_ui_pow_ui(term.get_mpz_t(), x, k);
        total += term;
    }
    return total;
}

std::vector<BigInt> elem_vector(const Partition& p, unsigned j) {
    std::vector<BigInt> e(j + 1, 0);
    e[0] = 1;
    std::size_t seen = 0;
    for (Part x : p.parts()) {
        ++seen;
        const BigInt bx = to_big(x);
        const std::size_t top = std::min<std::size_t>(j, seen);
        for (std::size_t i = top; i >= 1; --i) e[i] += bx * e[i - 1];
    }
    return e;
}

std::optional<std::uint64_t> elem_sym_u64(std::span<const Part> parts, unsigned j) {
    if (j == 0) return 1;
    if (parts.size() < j) return 0;
    // small fixed buffer covers every j used in practice
    constexpr unsigned kMax = 16;
    if (j > kMax) return std::nullopt;
    std::uint64_t e[kMax + 1] = {1};
    std::size_t seen = 0;
    for (Part x : parts) {
        ++seen;
        const std::size_t top = std::min<std::size_t>(j, seen);
        for (std::size_t i = top; i >= 1; --i) {
            std::uint64_t prod;
            if (__builtin_mul_overflow(x, e[i - 1], &prod)) return std::nullopt;
            if (__builtin_add_overflow(e[i], prod, &e[i])) return std::nullopt;
        }
    }
    return e[j];
}

BigInt elem_sym(const Partition& p, unsigned j) {
    if (j > p.length()) return 0;
    if (auto fast = elem_sym_u64(p.parts(), j)) return to_big(*fast);
    return elem_vector(p, j)[j];
}

BigInt elem_sym_via_newton(const Partition& p, unsigned j) {
    if (j != 2 && j != 3)
        throw UnsupportedJ("Newton route is implemented for j in {2,3}, got " + std::to_string(j));
    const BigInt p1 = power_sum(p, 1);
    const BigInt p2 = power_sum(p, 2);
    if (j == 2) {
        BigInt num = p1 * p1 - p2;
        return num / 2;
    }
    const BigInt p3 = power_sum(p, 3);
    BigInt num = p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3;
    return num / 6;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt b = binomial(n, k);
    if (b > BigInt(std::numeric_limits<unsigned long>::max()))
        return std::numeric_limits<std::uint64_t>::max();
    return b.get_ui();
}

namespace {

void expand_products(std::span<const Part> parts, unsigned j, std::size_t start, Part acc,
                     std::vector<Part>& out) {
    if (j == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i + j <= parts.size(); ++i) {
        Part next;
        if (__builtin_mul_overflow(acc, parts[i], &next))
            throw std::overflow_error("pre_j part exceeds 64 bits");
        expand_products(parts, j - 1, i + 1, next, out);
    }
}

}  // namespace

Partition pre_j(const Partition& p, unsigned j, std::size_t cap) {
    if (j == 0) throw std::invalid_argument("pre_j needs j >= 1");
    if (p.length() < j) return {};
    const std::uint64_t count = binomial_saturating(p.length(), j);
    if (count > cap) {
        throw ExpansionCap("pre_" + std::to_string(j) + " of a partition of length " +
                           std::to_string(p.length()) + " has " + std::to_string(count) +
                           " parts, over the cap of " + std::to_string(cap));
    }
    std::vector<Part> out;
    out.reserve(count);
    expand_products(p.parts(), j, 0, 1, out);
    return Partition::from_unsorted(std::move(out));
}

}  // namespace esymlab
