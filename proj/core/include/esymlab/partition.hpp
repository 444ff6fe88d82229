#ifndef ESYMLAB_PARTITION_HPP
#define ESYMLAB_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esymlab/bigint.hpp"

namespace esymlab {

using Part = std::uint64_t;

/// A partition stored as its weakly decreasing sequence of positive parts.
/// The empty partition (size 0, length 0) is a valid value.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

    /// Sorts into canonical order first.
    static Partition from_unsorted(std::vector<Part> parts);

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Part operator[](std::size_t i) const { return parts_[i]; }

    /// |λ|. Throws std::overflow_error if the sum does not fit in 64 bits.
    Part size() const;

    /// Multiplicity view, keyed by part value.
    std::map<Part, std::size_t> multiplicities() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    friend class PartitionStream;
    std::vector<Part> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::string to_string(const Partition& p);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// m_λ(i).
std::size_t multiplicity(const Partition& p, Part i);

/// Multiset union of parts.
Partition multiset_union(const Partition& a, const Partition& b);

/// Multiset difference a \ b. Throws SubMultisetViolation unless b ⊆ a.
Partition multiset_difference(const Partition& a, const Partition& b);

/// Divides every part by k. Throws NotDivisible if some part is not a multiple of k.
Partition divide_parts(const Partition& p, Part k);

Partition conjugate(const Partition& p);

/// The set of allowed part values.
class PartSource {
public:
    enum class Kind { All, Odd, Binary, Finite };

    static PartSource all() { return PartSource(Kind::All, {}); }
    static PartSource odd() { return PartSource(Kind::Odd, {}); }
    static PartSource binary() { return PartSource(Kind::Binary, {}); }
    /// Sorted and deduplicated. Throws std::invalid_argument on a zero entry or an empty list.
    static PartSource finite(std::vector<Part> values);

    /// Accepts "all", "odd", "binary" or "finite:a,b,c".
    static PartSource parse(const std::string& text);

    Kind kind() const noexcept { return kind_; }
    bool contains(Part a) const;
    /// Allowed parts in [1, limit], ascending.
    std::vector<Part> parts_up_to(Part limit) const;
    std::string name() const;

    friend bool operator==(const PartSource&, const PartSource&) = default;

private:
    PartSource(Kind kind, std::vector<Part> finite) : kind_(kind), finite_(std::move(finite)) {}

    Kind kind_;
    std::vector<Part> finite_;
};

class LengthConstraint {
public:
    static LengthConstraint any() { return LengthConstraint(std::nullopt); }
    /// Throws std::invalid_argument when m == 0.
    static LengthConstraint exactly(std::size_t m);

    bool is_any() const noexcept { return !exact_.has_value(); }
    std::size_t required() const { return exact_.value(); }
    bool admits(std::size_t length) const noexcept { return !exact_ || *exact_ == length; }
    std::string name() const;

    friend bool operator==(const LengthConstraint&, const LengthConstraint&) = default;

private:
    explicit LengthConstraint(std::optional<std::size_t> m) : exact_(m) {}
    std::optional<std::size_t> exact_;
};

/// Single-consumer stream over P(n | src) restricted by len, in decreasing
/// lexicographic order of the part sequence.
class PartitionStream {
public:
    PartitionStream(Part n, PartSource src, LengthConstraint len);

    /// Returns the next partition, or nullptr when exhausted. The pointer stays
    /// valid until the following call.
    const Partition* advance();

    std::optional<Partition> next() {
        const Partition* p = advance();
        return p ? std::optional<Partition>(*p) : std::nullopt;
    }

private:
    bool feasible(Part remaining, std::size_t max_index, std::size_t used) const;
    bool fill(Part remaining);

    Part n_;
    LengthConstraint len_;
    std::vector<Part> allowed_;
    // reach_[layer][i * (n_ + 1) + r]: r is a sum of parts from allowed_[0..i];
    // with an exact length the layer is the number of parts still to place.
    std::vector<std::vector<std::uint8_t>> reach_;
    std::vector<std::size_t> index_;
    Part remaining_ = 0;
    Partition current_;
    bool started_ = false;
    bool done_ = false;
};

template <class Fn>
void for_each_partition(Part n, const PartSource& src, const LengthConstraint& len, Fn&& fn) {
    PartitionStream stream(n, src, len);
    while (const Partition* p = stream.advance()) {
        fn(*p);
    }
}

std::vector<Partition> enumerate(Part n, const PartSource& src, const LengthConstraint& len);

BigInt count_partitions(Part n, const PartSource& src, const LengthConstraint& len);

/// count_partitions for every n in [0, n_max] from a single DP table.
std::vector<BigInt> count_partitions_table(Part n_max, const PartSource& src,
                                           const LengthConstraint& len);

}  // namespace esymlab

#endif
