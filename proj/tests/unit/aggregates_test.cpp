#include <gtest/gtest.h>

#include "esymlab/aggregates.hpp"
#include "esymlab/error.hpp"
#include "esymlab/symfun.hpp"
#include "oracles/oracles.hpp"

namespace esymlab {
namespace {

const std::vector<std::pair<PartSource, std::function<bool(std::uint64_t)>>>& sources() {
    static const std::vector<std::pair<PartSource, std::function<bool(std::uint64_t)>>> s = {
        {PartSource::all(), oracle::any_part},
        {PartSource::odd(), oracle::odd_part},
        {PartSource::binary(), oracle::binary_part},
    };
    return s;
}

TEST(Sigma, Examples) {
    EXPECT_EQ(sigma_restricted(6, 2, PartSource::odd()), 10);
    EXPECT_EQ(sigma_restricted(12, 2, PartSource::binary()), 21);
    EXPECT_EQ(sigma_restricted(4, 2, PartSource::all()), 21);
    EXPECT_THROW(sigma_restricted(0, 2, PartSource::all()), std::invalid_argument);
}

TEST(Sigma, SieveMatchesTrialDivision) {
    for (const auto& [src, allowed] : sources()) {
        for (unsigned j = 1; j <= 3; ++j) {
            const BigSeq seq = sigma_restricted_seq(200, j, src);
            ASSERT_EQ(seq.first, 1u);
            EXPECT_EQ(seq.at(1), 1);
            for (std::uint64_t n = 1; n <= 200; ++n) {
                EXPECT_EQ(seq.at(n), oracle::divisor_power_sum(n, j, allowed)) << src.name() << n;
                EXPECT_EQ(sigma_restricted(n, j, src), seq.at(n));
            }
        }
    }
}

TEST(Ejp, BruteforceExamples) {
    const auto any = LengthConstraint::any();
    EXPECT_EQ(ejp_bruteforce(4, 2, PartSource::all(), any), 18);
    EXPECT_EQ(ejp_bruteforce(5, 2, PartSource::odd(), any), 17);
    EXPECT_EQ(ejp_bruteforce(6, 2, PartSource::binary(), any), 71);
}

TEST(Ejp, ClosedConvolutionExamples) {
    EXPECT_EQ(ejp_theorem1(4, 2, PartSource::all()), 18);
    EXPECT_EQ(ejp_theorem1(4, 3, PartSource::all()), 6);
    EXPECT_EQ(ejp_theorem1(5, 2, PartSource::odd()), 17);
    EXPECT_EQ(ejp_theorem1(6, 2, PartSource::binary()), 71);
    EXPECT_THROW(ejp_theorem1(4, 4, PartSource::all()), UnsupportedJ);
}

TEST(Ejp, DpExamples) {
    const auto four = LengthConstraint::exactly(4);
    EXPECT_EQ(ejp_dp(6, 2, PartSource::all(), four).at(6), 25);
    EXPECT_EQ(ejp_dp(7, 2, PartSource::all(), four).at(7), 50);
    EXPECT_EQ(ejp_dp(2, 2, PartSource::all(), LengthConstraint::any()).at(2), 1);
}

TEST(Ejp, ThreeMethodsAgreeUpTo60) {
    const auto any = LengthConstraint::any();
    for (const auto& [src, allowed] : sources()) {
        for (unsigned j = 2; j <= 3; ++j) {
            const BigSeq dp = ejp_dp(60, j, src, any);
            for (Part n = 1; n <= 60; ++n) {
                const BigInt brute = ejp_bruteforce(n, j, src, any);
                EXPECT_EQ(ejp_theorem1(n, j, src), brute) << src.name() << " j=" << j << " n=" << n;
                EXPECT_EQ(dp.at(n), brute) << src.name() << " j=" << j << " n=" << n;
            }
        }
    }
}

TEST(Ejp, FirstAggregateIsSizeTimesCount) {
    for (const auto& [src, allowed] : sources()) {
        const BigSeq e1 = ejp_dp(60, 1, src, LengthConstraint::any());
        const auto counts = count_partitions_table(60, src, LengthConstraint::any());
        for (std::size_t n = 0; n <= 60; ++n)
            EXPECT_EQ(e1.at(n), BigInt(static_cast<unsigned long>(n)) * counts[n]) << n;
    }
}

TEST(Ejp, ExactlyFourMatchesEnumerationUpTo120) {
    const auto four = LengthConstraint::exactly(4);
    const BigSeq dp = ejp_dp(120, 2, PartSource::all(), four);
    for (Part n = 0; n <= 120; ++n) {
        BigInt total = 0;
        for_each_partition(n, PartSource::all(), four, [&](const Partition& p) {
            total += oracle::elem_by_subsets({p.parts().begin(), p.parts().end()}, 2);
        });
        EXPECT_EQ(dp.at(n), total) << n;
    }
}

TEST(Ejp, HigherJViaDpMatchesEnumeration) {
    for (unsigned j = 4; j <= 6; ++j) {
        const BigSeq dp = ejp_dp(30, j, PartSource::all(), LengthConstraint::any());
        for (Part n = 0; n <= 30; ++n)
            EXPECT_EQ(dp.at(n), ejp_bruteforce(n, j, PartSource::all(), LengthConstraint::any()));
    }
}

TEST(PowerSumTotal, Examples) {
    EXPECT_EQ(power_sum_total(3, 2, PartSource::all()), 17);
    EXPECT_EQ(power_sum_total(1, 1, PartSource::all()), 1);
    EXPECT_EQ(power_sum_total(4, 2, PartSource::binary()), 34);  // 16 + 8 + 6 + 4
}

TEST(PowerSumTotal, BothEvaluationsAgreeUpTo60) {
    for (const auto& [src, allowed] : sources()) {
        for (unsigned j = 1; j <= 3; ++j) {
            const auto dp = power_sum_total_table(60, j, src);
            const auto conv = power_sum_convolution_table(60, j, src);
            for (std::size_t n = 1; n <= 60; ++n) {
                EXPECT_EQ(dp[n], conv[n]) << src.name() << " j=" << j << " n=" << n;
                EXPECT_EQ(power_sum_total(n, j, src), dp[n]);
            }
        }
    }
}

TEST(PowerSumTotal, DpMatchesEnumerationUpTo20) {
    for (const auto& [src, allowed] : sources()) {
        const auto dp = power_sum_total_table(20, 2, src);
        for (Part n = 0; n <= 20; ++n) {
            BigInt total = 0;
            for_each_partition(n, src, LengthConstraint::any(),
                               [&](const Partition& p) { total += power_sum(p, 2); });
            EXPECT_EQ(dp[n], total);
        }
    }
}

}  // namespace
}  // namespace esymlab
