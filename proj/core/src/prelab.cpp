#include "esymlab/prelab.hpp"

#include <algorithm>
#include <stdexcept>

namespace esymlab {

bool has_odd_parts(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](Part x) { return (x & 1u) == 1u; });
}

bool has_distinct_parts(const Partition& p) {
    return std::adjacent_find(p.parts().begin(), p.parts().end()) == p.parts().end();
}

ImageSet image_set(Part n, unsigned j, const PartSource& src, LengthWindow window,
                   std::size_t cap) {
    ImageSet set;
    set.n = n;
    set.j = j;
    for_each_partition(n, src, LengthConstraint::any(), [&](const Partition& lambda) {
        if (!window.admits(lambda.length())) return;
        ++set.preimage_count;
        Partition image = pre_j(lambda, j, cap);
        auto [it, inserted] = set.images.try_emplace(std::move(image), lambda);
        if (!inserted) set.collisions.push_back({it->second, lambda, it->first});
    });
    return set;
}

OddDistinctCount odd_distinct_counts(Part n, unsigned j, std::size_t cap) {
    OddDistinctCount c;
    c.n = n;
    c.j = j;
    auto tally = [&c](const Partition& image) {
        const bool odd = has_odd_parts(image);
        const bool distinct = has_distinct_parts(image);
        c.odd += odd;
        c.distinct += distinct;
        if (!image.empty()) {
            c.odd_nonempty += odd;
            c.distinct_nonempty += distinct;
        }
    };
    if (j == 1) {
        // pre_1 is the identity, so the enumeration is already the image set
        for_each_partition(n, PartSource::all(), LengthConstraint::any(), [&](const Partition& p) {
            ++c.preimages;
            tally(p);
        });
        c.images = c.preimages;
        return c;
    }
    const ImageSet set = image_set(n, j, PartSource::all(), {}, cap);
    for (const auto& [image, pre] : set.images) tally(image);
    c.images = set.size();
    c.preimages = set.preimage_count;
    c.collisions = set.collisions.size();
    return c;
}

InjectivityResult injectivity_scan(Part n, unsigned j, const PartSource& src, LengthWindow window,
                                   std::size_t cap) {
    std::unordered_map<Partition, Partition, PartitionHash> seen;
    std::optional<Collision> found;
    PartitionStream stream(n, src, LengthConstraint::any());
    while (const Partition* lambda = stream.advance()) {
        if (!window.admits(lambda->length())) continue;
        Partition image = pre_j(*lambda, j, cap);
        auto [it, inserted] = seen.try_emplace(std::move(image), *lambda);
        if (!inserted) return Collision{it->second, *lambda, it->first};
    }
    return NoCollision{};
}

BigInt b12(Part n) {
    BigInt total = 0;
    for_each_partition(n, PartSource::binary(), LengthConstraint::any(), [&](const Partition& p) {
        total += binomial(multiplicity(p, 1), 2);
    });
    return total;
}

std::vector<BigInt> b12_recurrence_table(std::size_t n_max) {
    std::vector<BigInt> b(std::max<std::size_t>(n_max + 1, 3), 0);
    b[1] = 0;
    b[2] = 1;
    for (std::size_t n = 3; n <= n_max; ++n) b[n] = b[n - 1] + b[(n + 1) / 2] + b[(n + 2) / 2];
    b.resize(n_max + 1);
    return b;
}

BigInt b12_recurrence(Part n) {
    if (n == 0) throw std::invalid_argument("b12 recurrence starts at n = 1");
    return b12_recurrence_table(n).back();
}

std::vector<BigInt> b12_table(std::size_t n_max) {
    const auto bin = count_partitions_table(n_max / 2, PartSource::binary(), LengthConstraint::any());
    std::vector<BigInt> out(n_max + 1, 0);
    for (std::size_t n = 0; n <= n_max; ++n) {
        // m_λ(1) = k requires k ≡ n (mod 2); the rest halves to a binary partition
        for (std::size_t k = n % 2; k <= n; k += 2) {
            if (k >= 2) out[n] += binomial(k, 2) * bin[(n - k) / 2];
        }
    }
    return out;
}

BigInt b22(Part n) {
    BigInt total = 0;
    for_each_partition(n, PartSource::binary(), LengthConstraint::any(), [&](const Partition& p) {
        total += multiplicity(pre_j(p, 2), 2);
    });
    return total;
}

std::vector<BigInt> b22_fast_table(std::size_t n_max) {
    const auto bin = count_partitions_table(n_max / 4, PartSource::binary(), LengthConstraint::any());
    std::vector<BigInt> out(n_max + 1, 0);
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t ones = 1; ones <= n; ++ones) {
            for (std::size_t twos = 1; ones + 2 * twos <= n; ++twos) {
                const std::size_t rest = n - ones - 2 * twos;
                if (rest % 4 != 0) continue;
                BigInt term = bin[rest / 4];
                mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), ones * twos);
                out[n] += term;
            }
        }
    }
    return out;
}

Check b22_delta_check(Part n, const std::vector<BigInt>& b22v, const std::vector<BigInt>& b12v) {
    if (b22v.size() < 2 * n + 3 || b12v.size() < n + 2)
        throw std::out_of_range("b22_delta_check: tables too short");
    const BigInt even = b22v[2 * n + 1] - b22v[2 * n];
    const BigInt odd = b22v[2 * n + 2] - b22v[2 * n + 1];
    Check c;
    c.lhs = even;
    c.rhs = b12v[n + 1];
    c.pass = even == odd && even == b12v[n + 1];
    c.detail = "n=" + std::to_string(n) + ": Δb22(2n)=" + to_decimal(even) +
               ", Δb22(2n+1)=" + to_decimal(odd) + ", b12(n+1)=" + to_decimal(b12v[n + 1]);
    return c;
}

Check b22_delta_check(Part n, bool fast) {
    const std::size_t top = 2 * n + 2;
    std::vector<BigInt> b22v;
    std::vector<BigInt> b12v;
    if (fast) {
        b22v = b22_fast_table(top);
        b12v = b12_table(n + 1);
    } else {
        b22v.assign(top + 1, 0);
        for (std::size_t m = 1; m <= top; ++m) b22v[m] = b22(m);
        b12v.assign(n + 2, 0);
        for (std::size_t m = 1; m <= n + 1; ++m) b12v[m] = b12(m);
    }
    return b22_delta_check(n, b22v, b12v);
}

}  // namespace esymlab
