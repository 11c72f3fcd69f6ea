#include "qrsums/residues.hpp"

#include <gtest/gtest.h>

using namespace qrs;

namespace {

OddPrime P(std::uint64_t n) { return OddPrime::make(n); }

// Every field recomputed from Euler's criterion alone.
struct Brute {
    std::int64_t q_o = 0, q_e = 0, s_low = 0, s_high = 0, below = 0, above = 0, a = 0, m = 0;
    std::int64_t half_odd = 0, half_even = 0;
};

Brute brute(OddPrime p) {
    Brute b;
    const auto n = p.signed_value();
    for (std::int64_t k = 1; k < n; ++k) {
        const int chi = legendre(k, p);
        if (chi == 1) {
            (k % 2 ? b.q_o : b.q_e) += 1;
            if (k % 2 == 0)
                (2 * k < n ? b.below : b.above) += 1;
        }
        if (k % 2 == 1)
            b.a += chi;
        if (k <= (n - 3) / 4)
            b.s_low += chi;
        else if (k <= (n - 1) / 2)
            b.s_high += chi;
        if (k <= (n - 1) / 2)
            (k % 2 ? b.half_odd : b.half_even) += chi;
        b.m += chi * k;
    }
    return b;
}

} // namespace

TEST(QuadraticResidues, Examples) {
    EXPECT_EQ(quadratic_residues(P(3)), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(quadratic_residues(P(7)), (std::vector<std::uint64_t>{1, 2, 4}));
    EXPECT_EQ(quadratic_residues(P(11)), (std::vector<std::uint64_t>{1, 3, 4, 5, 9}));
    EXPECT_EQ(quadratic_residues(P(13)), (std::vector<std::uint64_t>{1, 3, 4, 9, 10, 12}));
}

TEST(ResidueProfile, Examples) {
    auto p7 = residue_profile(P(7));
    EXPECT_EQ(p7.q_o, 1);
    EXPECT_EQ(p7.q_e, 2);
    auto p11 = residue_profile(P(11));
    EXPECT_EQ(p11.q_o, 4);
    EXPECT_EQ(p11.q_e, 1);
    auto p23 = residue_profile(P(23));
    EXPECT_EQ(p23.q_o, 4);
    EXPECT_EQ(p23.q_e, 7);
    EXPECT_EQ(p23.symbol(46), 0);
    EXPECT_EQ(p23.symbol(24), 1);
}

TEST(ResidueProfile, RejectsOneModFour) {
    EXPECT_THROW(residue_profile(P(5)), DomainError);
    EXPECT_THROW(m_sum(P(13)), DomainError);
}

TEST(IntervalSums, Examples) {
    auto [lo7, hi7] = interval_sums(P(7));
    EXPECT_EQ(lo7, 1);
    EXPECT_EQ(hi7, 0);
    auto [lo11, hi11] = interval_sums(P(11));
    EXPECT_EQ(lo11, 0);
    EXPECT_EQ(hi11, 3);
    auto [lo23, hi23] = interval_sums(P(23));
    EXPECT_EQ(lo23, 3);
    EXPECT_EQ(hi23, 0);
    auto [lo3, hi3] = interval_sums(P(3));  // empty low interval
    EXPECT_EQ(lo3, 0);
    EXPECT_EQ(hi3, 1);
}

TEST(EvenHalfCounts, Examples) {
    EXPECT_EQ(even_half_counts(P(11)).below, 1);
    EXPECT_EQ(even_half_counts(P(7)).above, 1);
    EXPECT_EQ(even_half_counts(P(23)).above, 3);
}

TEST(MSum, Examples) {
    EXPECT_EQ(m_sum(P(7)), -7);
    EXPECT_EQ(m_sum(P(11)), -11);
    EXPECT_EQ(m_sum(P(3)), -1);
}

TEST(ASum, Examples) {
    EXPECT_EQ(a_sum(P(7)), -1);
    EXPECT_EQ(a_sum(P(11)), 3);
    EXPECT_EQ(a_sum(P(3)), 1);
}

TEST(ResidueProfile, MatchesEulerCriterionBruteForce) {
    for (auto p : primes_in_range(3, 6000, ClassFilter::mod4(3))) {
        const auto prof = residue_profile(p);
        const auto b = brute(p);
        ASSERT_EQ(prof.q_o, b.q_o) << p.value();
        ASSERT_EQ(prof.q_e, b.q_e) << p.value();
        ASSERT_EQ(prof.s_low, b.s_low) << p.value();
        ASSERT_EQ(prof.s_high, b.s_high) << p.value();
        ASSERT_EQ(prof.even_below_half, b.below) << p.value();
        ASSERT_EQ(prof.even_above_half, b.above) << p.value();
        ASSERT_EQ(prof.a_sum, b.a) << p.value();
        ASSERT_EQ(prof.m_sum, b.m) << p.value();
        ASSERT_EQ(prof.half_odd, b.half_odd) << p.value();
        ASSERT_EQ(prof.half_even, b.half_even) << p.value();
        ASSERT_EQ(prof.legendre_two(), legendre(2, p));
    }
}

TEST(ResidueProfile, StructuralInvariants) {
    for (auto p : primes_in_range(3, 10000, ClassFilter::mod4(3))) {
        const auto prof = residue_profile(p);
        const auto n = p.value();
        const auto half = static_cast<std::int64_t>((n - 1) / 2);
        ASSERT_EQ(prof.q_o + prof.q_e, half);
        ASSERT_EQ((prof.q_o + prof.q_e) % 2, 1);
        std::int64_t count = 0;
        for (std::uint64_t k = 1; k < n; ++k) {
            count += prof.qr_table[k];
            ASSERT_FALSE(prof.qr_table[k] && prof.qr_table[n - k]);
        }
        ASSERT_EQ(count, half);
        ASSERT_EQ(prof.even_below_half + prof.even_above_half, prof.q_e);
    }
}

// Sign and divisibility of q_o - q_e, Dirichlet's inequalities, the
// even/odd numerator identity, the interval sums and the even-half counts.
TEST(ResidueProfile, ClassicalPropertiesToTenThousand) {
    for (auto p : primes_in_range(3, 10000, ClassFilter::mod4(3))) {
        const auto prof = residue_profile(p);
        const auto n = p.signed_value();
        const bool three = p.class_mod8() == 3;
        const std::int64_t diff = prof.q_o - prof.q_e;
        SCOPED_TRACE(n);
        EXPECT_NE(diff % 2, 0);
        EXPECT_EQ(diff > 0, three);
        if (three && n > 3) {
            EXPECT_EQ(diff % 3, 0);
        }
        EXPECT_GT(prof.half_sum(), 0);
        EXPECT_LT(prof.m_sum, 0);
        const int chi2 = prof.legendre_two();
        EXPECT_EQ((1 + chi2) * prof.half_odd, (1 - chi2) * prof.half_even);
        EXPECT_EQ(prof.a_sum, -chi2 * (prof.s_low + prof.s_high));
        if (three) {
            EXPECT_EQ(prof.s_low, 0);
            EXPECT_GT(prof.s_high, 0);
            EXPECT_EQ(prof.even_below_half, (n - 3) / 8);
        } else {
            EXPECT_EQ(prof.s_high, 0);
            EXPECT_GT(prof.s_low, 0);
            EXPECT_EQ(prof.even_above_half, (n + 1) / 8);
        }
    }
}
