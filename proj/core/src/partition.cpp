#include "esymlab/partition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "esymlab/error.hpp"

namespace esymlab {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& message)
    : Error(message), position_(position), expected_(std::move(expected)) {}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Part Partition::size() const {
    Part total = 0;
    for (Part x : parts_) {
        if (__builtin_add_overflow(total, x, &total))
            throw std::overflow_error("partition size exceeds 64 bits");
    }
    return total;
}

std::map<Part, std::size_t> Partition::multiplicities() const {
    std::map<Part, std::size_t> m;
    for (Part x : parts_) ++m[x];
    return m;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    return os << ')';
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    // FNV-1a over the part words.
    std::uint64_t h = 1469598103934665603ull;
    for (Part x : p.parts()) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t multiplicity(const Partition& p, Part i) {
    auto parts = p.parts();
    // parts are decreasing; search with reversed comparison
    auto range = std::equal_range(parts.begin(), parts.end(), i, std::greater<>());
    return static_cast<std::size_t>(range.second - range.first);
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<Part> out;
    out.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

Partition multiset_difference(const Partition& a, const Partition& b) {
    std::vector<Part> out;
    auto ia = a.parts().begin();
    auto ea = a.parts().end();
    for (Part x : b.parts()) {
        while (ia != ea && *ia > x) out.push_back(*ia++);
        if (ia == ea || *ia != x) {
            throw SubMultisetViolation("part " + std::to_string(x) + " of " + to_string(b) +
                                       " exceeds its multiplicity in " + to_string(a));
        }
        ++ia;
    }
    out.insert(out.end(), ia, ea);
    return Partition(std::move(out));
}

Partition divide_parts(const Partition& p, Part k) {
    if (k == 0) throw std::invalid_argument("divisor must be positive");
    std::vector<Part> out;
    out.reserve(p.length());
    for (Part x : p.parts()) {
        if (x % k != 0)
            throw NotDivisible("part " + std::to_string(x) + " is not divisible by " +
                               std::to_string(k));
        out.push_back(x / k);
    }
    return Partition(std::move(out));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const Part largest = p[0];
    std::vector<Part> out(largest, 0);
    // λ'_j = #{i : λ_i >= j}
    for (Part x : p.parts()) {
        for (Part j = 0; j < x; ++j) ++out[j];
    }
    return Partition(std::move(out));
}

PartSource PartSource::finite(std::vector<Part> values) {
    if (values.empty()) throw std::invalid_argument("finite part source must be non-empty");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front() == 0) throw std::invalid_argument("parts must be positive");
    return PartSource(Kind::Finite, std::move(values));
}

PartSource PartSource::parse(const std::string& text) {
    if (text == "all") return all();
    if (text == "odd") return odd();
    if (text == "binary") return binary();
    const std::string prefix = "finite:";
    if (text.rfind(prefix, 0) == 0) {
        std::vector<Part> values;
        std::stringstream ss(text.substr(prefix.size()));
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(item, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != item.size())
                throw std::invalid_argument("bad part value '" + item + "'");
            values.push_back(v);
        }
        return finite(std::move(values));
    }
    throw std::invalid_argument("unknown part source '" + text + "'");
}

bool PartSource::contains(Part a) const {
    if (a == 0) return false;
    switch (kind_) {
        case Kind::All: return true;
        case Kind::Odd: return (a & 1u) == 1u;
        case Kind::Binary: return (a & (a - 1)) == 0;
        case Kind::Finite: return std::binary_search(finite_.begin(), finite_.end(), a);
    }
    return false;
}

std::vector<Part> PartSource::parts_up_to(Part limit) const {
    std::vector<Part> out;
    switch (kind_) {
        case Kind::All:
            for (Part a = 1; a <= limit; ++a) out.push_back(a);
            break;
        case Kind::Odd:
            for (Part a = 1; a <= limit; a += 2) out.push_back(a);
            break;
        case Kind::Binary:
            for (Part a = 1; a <= limit; a <<= 1) {
                out.push_back(a);
                if (a > limit / 2) break;
            }
            break;
        case Kind::Finite:
            for (Part a : finite_) {
                if (a > limit) break;
                out.push_back(a);
            }
            break;
    }
    return out;
}

std::string PartSource::name() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::Odd: return "odd";
        case Kind::Binary: return "binary";
        case Kind::Finite: {
            std::string s = "finite:";
            for (std::size_t i = 0; i < finite_.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(finite_[i]);
            }
            return s;
        }
    }
    return "?";
}

LengthConstraint LengthConstraint::exactly(std::size_t m) {
    if (m == 0) throw std::invalid_argument("exact length must be at least 1");
    return LengthConstraint(m);
}

std::string LengthConstraint::name() const {
    return exact_ ? "exactly:" + std::to_string(*exact_) : "any";
}

PartitionStream::PartitionStream(Part n, PartSource src, LengthConstraint len)
    : n_(n), len_(len), allowed_(src.parts_up_to(n)) {
    const std::size_t width = static_cast<std::size_t>(n_) + 1;
    const std::size_t layers = len_.is_any() ? 1 : len_.required() + 1;
    reach_.assign(layers, std::vector<std::uint8_t>(allowed_.size() * width, 0));
    for (std::size_t i = 0; i < allowed_.size(); ++i) {
        const Part a = allowed_[i];
        for (std::size_t layer = 0; layer < layers; ++layer) {
            auto& row = reach_[layer];
            for (Part r = 0; r <= n_; ++r) {
                bool ok;
                if (len_.is_any()) {
                    ok = r == 0 || (i > 0 && row[(i - 1) * width + r]) ||
                         (a <= r && row[i * width + (r - a)]);
                } else if (layer == 0) {
                    ok = r == 0;
                } else {
                    ok = (i > 0 && row[(i - 1) * width + r]) ||
                         (a <= r && reach_[layer - 1][i * width + (r - a)]);
                }
                row[i * width + r] = ok ? 1 : 0;
            }
        }
    }
}

bool PartitionStream::feasible(Part remaining, std::size_t max_index, std::size_t used) const {
    const std::size_t width = static_cast<std::size_t>(n_) + 1;
    if (len_.is_any()) {
        if (remaining == 0) return true;
        return reach_[0][max_index * width + remaining] != 0;
    }
    if (used > len_.required()) return false;
    const std::size_t left = len_.required() - used;
    if (left == 0) return remaining == 0;
    return reach_[left][max_index * width + remaining] != 0;
}

// Greedily completes the current prefix with the lexicographically largest tail.
bool PartitionStream::fill(Part remaining) {
    auto& parts = current_.parts_;
    while (remaining > 0 || !len_.admits(parts.size())) {
        std::size_t i = index_.empty() ? allowed_.size() : index_.back() + 1;
        bool placed = false;
        while (i-- > 0) {
            const Part a = allowed_[i];
            if (a > remaining) continue;
            if (feasible(remaining - a, i, parts.size() + 1)) {
                index_.push_back(i);
                parts.push_back(a);
                remaining -= a;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    remaining_ = remaining;
    return true;
}

const Partition* PartitionStream::advance() {
    if (done_) return nullptr;
    auto& parts = current_.parts_;
    if (!started_) {
        started_ = true;
        bool ok = allowed_.empty() ? (n_ == 0 && len_.admits(0)) : fill(n_);
        if (n_ == 0 && !len_.admits(0)) ok = false;
        if (!ok) {
            done_ = true;
            return nullptr;
        }
        return &current_;
    }
    // Backtrack: replace the deepest part that can be lowered.
    Part remaining = remaining_;
    while (!index_.empty()) {
        std::size_t i = index_.back();
        remaining += parts.back();
        index_.pop_back();
        parts.pop_back();
        while (i-- > 0) {
            const Part a = allowed_[i];
            if (a > remaining) continue;
            if (feasible(remaining - a, i, parts.size() + 1)) {
                index_.push_back(i);
                parts.push_back(a);
                if (fill(remaining - a)) return &current_;
                // feasibility guarantees fill succeeds
                throw std::logic_error("partition stream: infeasible completion");
            }
        }
    }
    done_ = true;
    return nullptr;
}

std::vector<Partition> enumerate(Part n, const PartSource& src, const LengthConstraint& len) {
    std::vector<Partition> out;
    for_each_partition(n, src, len, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<BigInt> count_partitions_table(Part n_max, const PartSource& src,
                                           const LengthConstraint& len) {
    const std::size_t width = static_cast<std::size_t>(n_max) + 1;
    const auto allowed = src.parts_up_to(n_max);
    if (len.is_any()) {
        std::vector<BigInt> table(width, 0);
        table[0] = 1;
        for (Part a : allowed) {
            for (std::size_t r = a; r < width; ++r) table[r] += table[r - a];
        }
        return table;
    }
    // layers[k][r]: partitions of r into exactly k parts from the processed prefix
    const std::size_t m = len.required();
    std::vector<std::vector<BigInt>> layers(m + 1, std::vector<BigInt>(width, 0));
    layers[0][0] = 1;
    for (Part a : allowed) {
        for (std::size_t k = 1; k <= m; ++k) {
            for (std::size_t r = a; r < width; ++r) layers[k][r] += layers[k - 1][r - a];
        }
    }
    return layers[m];
}

BigInt count_partitions(Part n, const PartSource& src, const LengthConstraint& len) {
    return count_partitions_table(n, src, len).back();
}

}  // namespace esymlab
