#include "esymlab/aggregates.hpp"

#include <algorithm>

#include "esymlab/error.hpp"
#include "esymlab/symfun.hpp"

namespace esymlab {

namespace {

BigInt pow_ui(std::uint64_t base, unsigned e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

}  // namespace

BigInt sigma_restricted(std::uint64_t n, unsigned j, const PartSource& src) {
    if (n == 0) throw std::invalid_argument("sigma_restricted needs n >= 1");
    BigInt total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const std::uint64_t e = n / d;
        if (src.contains(d)) total += pow_ui(d, j);
        if (e != d && src.contains(e)) total += pow_ui(e, j);
    }
    return total;
}

BigSeq sigma_restricted_seq(std::size_t n_max, unsigned j, const PartSource& src) {
    BigSeq seq{"sigma", "j=" + std::to_string(j) + ",src=" + src.name(), 1, {}};
    seq.values.assign(n_max, 0);
    for (Part a : src.parts_up_to(n_max)) {
        const BigInt term = pow_ui(a, j);
        for (std::size_t m = a; m <= n_max; m += a) seq.values[m - 1] += term;
    }
    return seq;
}

BigInt ejp_bruteforce(Part n, unsigned j, const PartSource& src, const LengthConstraint& len) {
    BigInt total = 0;
    for_each_partition(n, src, len, [&](const Partition& p) {
        if (auto fast = elem_sym_u64(p.parts(), j)) {
            mpz_add_ui(total.get_mpz_t(), total.get_mpz_t(), *fast);
        } else {
            total += elem_sym(p, j);
        }
    });
    return total;
}

BigInt ejp_theorem1(Part n, unsigned j, const PartSource& src) {
    if (j != 2 && j != 3)
        throw UnsupportedJ("closed convolution exists only for j in {2,3}, got " + std::to_string(j));
    if (n == 0) throw std::invalid_argument("ejp_theorem1 needs n >= 1");
    const auto p = count_partitions_table(n, src, LengthConstraint::any());
    const auto s2 = sigma_restricted_seq(n, 2, src);
    const BigInt bn = to_big(n);
    if (j == 2) {
        BigInt conv = 0;
        for (Part k = 1; k <= n; ++k) conv += s2.at(k) * p[n - k];
        BigInt num = bn * bn * p[n] - conv;
        return num / 2;
    }
    const auto s3 = sigma_restricted_seq(n, 3, src);
    BigInt conv = 0;
    for (Part k = 1; k <= n; ++k) conv += (3 * bn * s2.at(k) - 2 * s3.at(k)) * p[n - k];
    BigInt num = bn * bn * bn * p[n] - conv;
    return num / 6;
}

BigSeq ejp_dp(std::size_t n_max, unsigned j, const PartSource& src, const LengthConstraint& len) {
    if (j == 0) throw std::invalid_argument("ejp_dp needs j >= 1");
    const std::size_t width = n_max + 1;
    const std::size_t layers = len.is_any() ? 1 : len.required() + 1;
    // acc[layer][r][i] = Σ e_i over partitions of r (with `layer` parts when exact)
    std::vector<std::vector<std::vector<BigInt>>> acc(
        layers, std::vector<std::vector<BigInt>>(width, std::vector<BigInt>(j + 1, 0)));
    acc[0][0][0] = 1;

    auto append = [j](std::vector<BigInt>& dst, const std::vector<BigInt>& src_vec, Part x) {
        if (src_vec[0] == 0) return;  // no partitions there
        dst[0] += src_vec[0];
        for (unsigned i = 1; i <= j; ++i) {
            dst[i] += src_vec[i];
            if (src_vec[i - 1] != 0) {
                BigInt t = src_vec[i - 1];
                mpz_mul_ui(t.get_mpz_t(), t.get_mpz_t(), x);
                dst[i] += t;
            }
        }
    };

    for (Part x : src.parts_up_to(n_max)) {
        if (len.is_any()) {
            for (std::size_t r = x; r < width; ++r) append(acc[0][r], acc[0][r - x], x);
        } else {
            for (std::size_t k = 1; k < layers; ++k) {
                for (std::size_t r = x; r < width; ++r) append(acc[k][r], acc[k - 1][r - x], x);
            }
        }
    }

    BigSeq seq;
    seq.name = "e" + std::to_string(j) + "p";
    seq.params = "j=" + std::to_string(j) + ",src=" + src.name() + ",len=" + len.name();
    seq.first = 0;
    seq.values.reserve(width);
    const auto& top = acc[layers - 1];
    for (std::size_t r = 0; r < width; ++r) seq.values.push_back(top[r][j]);
    return seq;
}

std::vector<BigInt> power_sum_total_table(std::size_t n_max, unsigned j, const PartSource& src) {
    const std::size_t width = n_max + 1;
    // (count, Σ P_j); appending part x adds x^j once per partition
    std::vector<BigInt> count(width, 0), total(width, 0);
    count[0] = 1;
    for (Part x : src.parts_up_to(n_max)) {
        const BigInt xj = pow_ui(x, j);
        for (std::size_t r = x; r < width; ++r) {
            if (count[r - x] == 0) continue;
            total[r] += total[r - x] + xj * count[r - x];
            count[r] += count[r - x];
        }
    }
    return total;
}

std::vector<BigInt> power_sum_convolution_table(std::size_t n_max, unsigned j,
                                                const PartSource& src) {
    const auto p = count_partitions_table(n_max, src, LengthConstraint::any());
    const auto s = sigma_restricted_seq(n_max, j, src);
    std::vector<BigInt> out(n_max + 1, 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 1; k <= n; ++k) out[n] += s.at(k) * p[n - k];
    }
    return out;
}

BigInt power_sum_total(Part n, unsigned j, const PartSource& src) {
    if (n == 0) throw std::invalid_argument("power_sum_total needs n >= 1");
    const BigInt direct = power_sum_total_table(n, j, src)[n];
    const BigInt conv = power_sum_convolution_table(n, j, src)[n];
    if (direct != conv) {
        throw IdentityMismatch("power-sum total for n=" + std::to_string(n) + ": DP gives " +
                               to_decimal(direct) + ", convolution gives " + to_decimal(conv));
    }
    return direct;
}

}  // namespace esymlab
