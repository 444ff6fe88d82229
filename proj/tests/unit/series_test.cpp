#include <gtest/gtest.h>

#include "esymlab/aggregates.hpp"
#include "esymlab/builtins.hpp"
#include "esymlab/error.hpp"
#include "esymlab/expr.hpp"
#include "esymlab/series.hpp"
#include "oracles/oracles.hpp"

namespace esymlab {
namespace {

TruncatedSeries from_ints(std::initializer_list<long> cs, std::size_t order,
                          Ring ring = Ring::exact()) {
    std::vector<BigInt> v;
    for (long c : cs) v.emplace_back(c);
    return TruncatedSeries::from_coeffs(std::move(v), order, ring);
}

TruncatedSeries eval(const std::string& text, std::size_t order, Ring ring = Ring::exact()) {
    return eval_expr(parse_expr(text), order, ring);
}

TEST(Ring, ModResiduesAreCanonical) {
    const auto s = from_ints({-1, 7, -9, 12}, 3, Ring::mod(5));
    for (const auto& c : s.coeffs()) {
        EXPECT_GE(c, 0);
        EXPECT_LT(c, 5);
    }
    EXPECT_EQ(s.coeff(0), 4);
    EXPECT_EQ(s.coeff(2), 1);
    EXPECT_THROW(Ring::mod(1), std::invalid_argument);
}

TEST(Series, ArithmeticUsesSmallerOrder) {
    const auto a = from_ints({1, 1, 1, 1, 1}, 4);
    const auto b = from_ints({1, -1}, 2);
    const auto prod = a * b;
    EXPECT_EQ(prod.order(), 2u);
    EXPECT_EQ(prod, from_ints({1, 0, 0}, 2));
    EXPECT_EQ((a + b).coeff(1), 0);
    EXPECT_THROW(a + a.reduced(3), RingMismatch);
}

TEST(Series, DivisionAndMultiplicationByOneMinusQPowerAreInverse) {
    auto s = from_ints({3, -1, 4, 1, -5, 9, 2, 6}, 7);
    const auto original = s;
    s.divide_one_minus_q_pow(3);
    EXPECT_EQ(s.coeff(3), 3 + 1);
    s.multiply_one_minus_q_pow(3);
    EXPECT_EQ(s, original);
}

TEST(Series, GeometricMatchesOracle) {
    auto s = TruncatedSeries::constant(1, 40);
    s.divide_one_minus_q_pow(1).divide_one_minus_q_pow(4).divide_one_minus_q_pow(4);
    auto expected = oracle::poly_mul(oracle::geometric(1, 40), oracle::geometric(4, 40), 40);
    expected = oracle::poly_mul(expected, oracle::geometric(4, 40), 40);
    EXPECT_EQ(s.coeffs(), expected);
}

TEST(Series, PowMatchesRepeatedProduct) {
    const auto s = from_ints({1, 2, 0, -1}, 12);
    EXPECT_EQ(s.pow(0), TruncatedSeries::constant(1, 12));
    EXPECT_EQ(s.pow(4), s * s * s * s);
}

TEST(ProductOverSource, Examples) {
    const auto b = product_over_source(PartSource::binary(), 6);
    EXPECT_EQ(b.coeff(4), 4);
    EXPECT_EQ(b.coeff(6), 6);
    EXPECT_EQ(product_over_source(PartSource::odd(), 5).coeff(5), 3);
    EXPECT_EQ(product_over_source(PartSource::all(), 4).coeff(4), 5);
}

TEST(ProductOverSource, CoefficientsAreCountsUpTo200) {
    for (const auto& src : {PartSource::all(), PartSource::odd(), PartSource::binary()}) {
        const auto s = product_over_source(src, 200);
        const auto counts = count_partitions_table(200, src, LengthConstraint::any());
        for (std::size_t n = 0; n <= 200; ++n) EXPECT_EQ(s.coeff(n), counts[n]) << src.name() << n;
    }
}

TEST(ProductOverSource, ModRingMatchesReducedExact) {
    for (const auto& src : {PartSource::all(), PartSource::binary()}) {
        EXPECT_EQ(product_over_source(src, 150, FactorNumerator::OnePlus, Ring::mod(7)),
                  product_over_source(src, 150, FactorNumerator::OnePlus).reduced(7));
    }
}

TEST(SigmaSeries, CoefficientsAreRestrictedDivisorSums) {
    for (const auto& src : {PartSource::all(), PartSource::odd(), PartSource::binary()}) {
        for (unsigned j = 1; j <= 3; ++j) {
            TruncatedSeries total(200);
            for (Part a : src.parts_up_to(200)) {
                BigInt w;
                mpz_ui_pow_ui(w.get_mpz_t(), a, j);
                auto term = TruncatedSeries::monomial(a, w, 200);
                total = total + term.divide_one_minus_q_pow(a);
            }
            const BigSeq sigma = sigma_restricted_seq(200, j, src);
            EXPECT_EQ(total.coeff(0), 0);
            for (std::size_t n = 1; n <= 200; ++n) EXPECT_EQ(total.coeff(n), sigma.at(n));
        }
    }
}

TEST(CheckIdentity, Mismatch) {
    const auto r = check_identity(eval("1/(1-q)", 5), eval("1+q", 5));
    ASSERT_TRUE(std::holds_alternative<FirstMismatch>(r));
    const auto& m = std::get<FirstMismatch>(r);
    EXPECT_EQ(m.exponent, 2u);
    EXPECT_EQ(m.lhs, 1);
    EXPECT_EQ(m.rhs, 0);
}

TEST(CheckIdentity, PowerSumGeneratingFunction) {
    const auto lhs = core_builtin("psum2", 100, Ring::exact());
    const auto rhs = product_over_source(PartSource::all(), 100) * core_builtin("sigma2", 100, Ring::exact());
    EXPECT_TRUE(is_match(check_identity(lhs, rhs)));
}

TEST(CheckIdentity, B12GeneratingFunction) {
    const auto lhs = eval("#b12", 200);
    const auto rhs = eval("q^2/(1-q)*#binaryOddProd", 200);
    EXPECT_TRUE(is_match(check_identity(lhs, rhs)));
}

TEST(CheckIdentity, E2P4ModTwo) {
    const auto lhs = eval("#e2p4", 300, Ring::mod(2));
    const auto rhs =
        eval("q^6/((1-q^2)^2*(1-q^4)^2) + q^5/((1-q^2)^2*(1-q^4)*(1-q^6))", 300, Ring::mod(2));
    EXPECT_TRUE(is_match(check_identity(lhs, rhs)));
}

TEST(CheckIdentity, E2P4ModThree) {
    const auto lhs = eval("#e2p4", 300, Ring::mod(3));
    const auto rhs = eval(
        "(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2) + 2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)", 300,
        Ring::mod(3));
    EXPECT_TRUE(is_match(check_identity(lhs, rhs)));
}

TEST(CheckIdentity, E2P4ModThreeFailsExactly) {
    const auto lhs = eval("#e2p4", 60);
    const auto rhs =
        eval("(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2) + 2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)", 60);
    EXPECT_FALSE(is_match(check_identity(lhs, rhs)));
}

TEST(Substitution, Examples) {
    const auto s = from_ints({1, 1, 1}, 2);
    const auto sub = substitute_power(s, 2);
    EXPECT_EQ(sub, from_ints({1, 0, 1, 0, 1}, 4));
    EXPECT_EQ(extract_power(sub, 2), s);
    EXPECT_THROW(extract_power(from_ints({1, 0, 0, 1}, 3), 2), NotSupported);
}

TEST(Substitution, SectionAndShift) {
    const auto s = from_ints({5, 1, 2, 3, 4, 6, 7}, 6);
    EXPECT_EQ(section(s, 3, 1), from_ints({0, 1, 0, 0, 4, 0, 0}, 6));
    const auto odd = section(s, 2, 1);
    EXPECT_EQ(extract_power(divide_by_q_power(odd, 1), 2).coeffs(),
              (std::vector<BigInt>{1, 3, 6}));
    EXPECT_THROW(divide_by_q_power(s, 1), NotSupported);
}

TEST(Substitution, SectionsSumToWhole) {
    const auto s = eval("1/((1-q)*(1-q^3))", 50);
    EXPECT_EQ(section(s, 3, 0) + section(s, 3, 1) + section(s, 3, 2), s);
}

TEST(Substitution, BinaryProductHalving) {
    // Π over binary parts satisfies B(2n) = B(2n+1) and its even part halves to B/(1-q)
    const auto b = product_over_source(PartSource::binary(), 200);
    const auto halved = extract_power(section(b, 2, 0), 2);
    auto expected = product_over_source(PartSource::binary(), 100);
    expected.divide_one_minus_q_pow(1);
    EXPECT_EQ(halved, expected);
}

}  // namespace
}  // namespace esymlab
