#include <gtest/gtest.h>

#include "groundedq/identities.hpp"
#include "groundedq/qfunc.hpp"
#include "oracle.hpp"

using namespace gq;
using oracle::Poly;

namespace {

Series S(int order, std::vector<int> c) {
    std::vector<Int> v(c.begin(), c.end());
    v.resize(order + 1);
    return Series(order, v);
}

Poly P(const Series& s) { return oracle::from_series(s); }

}  // namespace

TEST(Series, Arithmetic) {
    EXPECT_EQ(S(4, {1, 1}) * S(4, {1, -1}), S(4, {1, 0, -1}));
    const Series s = S(5, {3, -1, 4, 1, -5, 9});
    EXPECT_TRUE((s + -s).is_zero());
    EXPECT_EQ(S(3, {1, 1, 1}) * S(3, {1, 1}), S(3, {1, 2, 2, 1}));
}

TEST(Series, MismatchedOrdersAreUsageErrors) {
    EXPECT_THROW(S(3, {1}) + S(4, {1}), usage_error);
}

TEST(Series, InvertUnit) {
    EXPECT_EQ(invert_unit(S(3, {1, -1})), S(3, {1, 1, 1, 1}));
    EXPECT_EQ(invert_unit(Series::one(5)), Series::one(5));
    EXPECT_EQ(invert_unit(S(4, {1, -1}) * S(4, {1, 0, -1})), S(4, {1, 1, 2, 2, 3}));
    EXPECT_ANY_THROW(invert_unit(S(3, {2, 1})));
}

TEST(Pochhammer, Examples) {
    // distinct parts, the level-1 display
    EXPECT_EQ(P(pochhammer(Monomial{-1, 0, 1}, 1, kInf, 8)), (Poly{1, 1, 1, 2, 2, 3, 4, 5, 6}));
    EXPECT_EQ(pochhammer(Monomial{1, 0, 1}, 1, 0, 5), Series::one(5));
    EXPECT_EQ(P(invert_unit(pochhammer(Monomial{1, 0, 1}, 2, kInf, 6))), (Poly{1, 1, 1, 2, 2, 3, 4}));
    EXPECT_ANY_THROW(pochhammer(Monomial{1, 0, 0}, 1, kInf, 5));
}

TEST(Pochhammer, InverseRoundTrip) {
    for (Monomial m : {Monomial{1, 0, 1}, Monomial{-1, 0, 1}, Monomial{1, 0, 2}, Monomial{-1, 0, 3}}) {
        const Series p = pochhammer(m, 2, kInf, 20);
        EXPECT_EQ(p * invert_unit(p), Series::one(20)) << m.str();
    }
}

TEST(QFunctions, Binomial) {
    EXPECT_EQ(P(q_binomial(4, 2)), (Poly{1, 1, 2, 1, 1}));
    EXPECT_EQ(P(q_binomial(7, 0)), (Poly{1}));
    EXPECT_EQ(P(q_binomial(5, 2)), (Poly{1, 1, 2, 2, 2, 1, 1}));
    EXPECT_ANY_THROW(q_binomial(2, 3));
    for (int n = 0; n <= 14; ++n)
        for (int k = 0; k <= n; ++k) {
            const Series b = q_binomial(n, k);
            EXPECT_EQ(P(b), oracle::q_binomial(n, k)) << n << "," << k;
            EXPECT_TRUE(b.palindromic());
            EXPECT_EQ(b.degree(), k * (n - k));
        }
}

TEST(QFunctions, Yamanouchi) {
    EXPECT_EQ(P(q_yamanouchi(5, 3)), (Poly{1, 1, 2, 2, 3, 3, 4, 3, 3, 2, 2, 1, 1}));
    EXPECT_EQ(P(q_yamanouchi(6, 0)), (Poly{1}));
    EXPECT_EQ(P(q_yamanouchi(4, 2)), (Poly{1, 1, 2, 1, 2, 1, 1}));
    for (int n = 0; n <= 14; ++n)
        for (int k = 0; k <= n && n + k <= 14; ++k) {
            const Series y = q_yamanouchi(n, k);
            EXPECT_EQ(P(y), oracle::q_yamanouchi(n, k)) << n << "," << k;
            EXPECT_TRUE(y.palindromic());
        }
}

TEST(QFunctions, GroundedProduct) {
    EXPECT_EQ(P(grounded_product_gf(2, 0, 6)), (Poly{1, 1, 2, 3, 4, 6, 9}));
    EXPECT_EQ(grounded_product_gf(1, 1, 8), pochhammer(Monomial{-1, 0, 1}, 1, kInf, 8));
    EXPECT_EQ(P(grounded_product_gf(2, 1, 6)), (Poly{1, 2, 2, 4, 6, 8, 12}));
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i) {
            EXPECT_EQ(P(grounded_product_gf(n, i, 30)), oracle::grounded_product(n, i, 30));
            EXPECT_EQ(grounded_product_gf(n, i, 30), grounded_product_gf(n, n - i, 30));
        }
    EXPECT_ANY_THROW(grounded_product_gf(2, 3, 5));
}

TEST(QFunctions, HeineRejectsNonTruncating) {
    EXPECT_ANY_THROW(heine_sum({-1, 0, 0}, std::nullopt, {1, 0, 0}, 2, {5, 5}));
}

TEST(SumSides, Examples) {
    EXPECT_EQ(P(sum_side("p2b", {6, 6}).at_t1()), (Poly{1, 2, 2, 4, 6, 8, 12}));
    EXPECT_EQ(P(sum_side("rr1", {0, 6}).t_coeff(0)), (Poly{1, 1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(sum_side("staircase-distinct", {0, 8}).t_coeff(0), pochhammer(Monomial{-1, 0, 1}, 1, kInf, 8));
    EXPECT_THROW(sum_side("nope", {3, 3}), usage_error);
}

TEST(SumSides, AgainstBruteForce) {
    // gap-2 partitions with parts >= 1 and >= 2, and distinct parts
    EXPECT_EQ(P(sum_side("rr1", {0, 30}).t_coeff(0)), oracle::gap_partitions(2, 1, 30));
    EXPECT_EQ(P(sum_side("rr2", {0, 30}).t_coeff(0)), oracle::gap_partitions(2, 2, 30));
    EXPECT_EQ(P(sum_side("staircase-distinct", {0, 30}).t_coeff(0)), oracle::gap_partitions(1, 1, 30));
    // the bivariate level-2 sums count grounded partitions by odd parts
    const auto b = sum_side("p2b", {16, 16});
    const auto a = sum_side("p2a", {16, 16});
    const auto ob = oracle::grounded_odd_counts(2, 1, 16);
    const auto oa = oracle::grounded_odd_counts(2, 0, 16);
    for (int t = 0; t <= 16; ++t) {
        EXPECT_EQ(P(b.t_coeff(t)), ob[t]) << "t^" << t;
        EXPECT_EQ(P(a.t_coeff(t)), oa[t]) << "t^" << t;
    }
}

TEST(Identities, Catalogue) {
    EXPECT_TRUE(verify_identity("p2b", 24).equal);
    EXPECT_TRUE(verify_identity("decomp2", 30).equal);
    EXPECT_TRUE(verify_identity("rr1", 40).equal);
    EXPECT_THROW(verify_identity("nope", 5), usage_error);
    for (const auto& n : identity_names()) {
        const auto r = verify_identity(n, is_bivariate_identity(n) ? 16 : 30);
        EXPECT_TRUE(r.equal) << n << ": " << r.detail;
    }
}
