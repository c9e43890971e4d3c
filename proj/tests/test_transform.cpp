#include "numeric_oracle.hpp"
#include "salem/roots.hpp"
#include "salem/transform.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace salem;

namespace {

const IntPoly kQ0 = IntPoly::from_descending({1, 1, -5, -5, 4, 3});
const IntPoly kP0 = IntPoly::from_descending({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

/// x^k * C(x + 1/x) by binomial expansion of each power of (x + 1/x).
std::map<int, Integer> laurent_substitute(const IntPoly& c, int k) {
    std::map<int, Integer> out;
    for (int j = 0; j <= c.degree(); ++j) {
        for (int i = 0; i <= j; ++i) out[k + j - 2 * i] += c.coeff(j) * binomial(j, i);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

IntPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coef(rng);
    c.back() = 1;
    return IntPoly(std::move(c));
}

IntPoly random_monic_reciprocal(std::mt19937_64& rng, int two_d, long bound) {
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Integer> half(static_cast<std::size_t>(two_d / 2) + 1);
    for (auto& v : half) v = coef(rng);
    half[0] = 1;
    auto full = palindrome_from_half(half);
    return IntPoly::from_descending(std::span<const Integer>(full));
}

}  // namespace

TEST(ChebBasis, ListedValues) {
    ChebBasis c(6);
    EXPECT_EQ(c[1], IntPoly::constant(1));
    EXPECT_EQ(c[2], IntPoly::from_descending({1, 0}));
    EXPECT_EQ(c[3], IntPoly::from_descending({1, 0, -2}));
    EXPECT_EQ(c[4], IntPoly::from_descending({1, 0, -3, 0}));
    EXPECT_EQ(c[5], IntPoly::from_descending({1, 0, -4, 0, 2}));
    EXPECT_EQ(c[6], IntPoly::from_descending({1, 0, -5, 0, 5, 0}));
}

TEST(ChebBasis, LucasRecurrence) {
    auto v = lucas_basis(10);
    ASSERT_EQ(v.size(), 11u);
    EXPECT_EQ(v[0], IntPoly::constant(2));
    EXPECT_EQ(v[1], IntPoly::from_descending({1, 0}));
    for (int k = 1; k < 10; ++k) EXPECT_EQ(v[k + 1], IntPoly::from_descending({1, 0}) * v[k] - v[k - 1]);
}

TEST(ChebBasis, TraceIdentityUpTo32) {
    ChebBasis c(33);
    for (int k = 1; k <= 32; ++k) {
        std::map<int, Integer> expected{{0, 1}, {2 * k, 1}};
        EXPECT_EQ(laurent_substitute(c[k + 1], k), expected) << "k = " << k;
    }
}

TEST(Reciprocal, Examples) {
    EXPECT_TRUE(is_reciprocal(IntPoly::from_descending({1, 1, 1})));
    EXPECT_FALSE(is_reciprocal(IntPoly::from_descending({1, 1, 0})));
    EXPECT_TRUE(is_reciprocal(kP0));
}

TEST(PToQ, Examples) {
    EXPECT_EQ(p_to_q(kP0), kQ0);
    EXPECT_EQ(p_to_q(IntPoly::from_descending({1, 1, 1})), IntPoly::from_descending({1, 1}));
    EXPECT_EQ(p_to_q(IntPoly::from_descending({1, -1, -1, -1, 1})), IntPoly::from_descending({1, -1, -3}));
}

TEST(PToQ, Errors) {
    EXPECT_THROW(p_to_q(IntPoly::from_descending({1, 0, 0, 1})), OddDegree);
    EXPECT_THROW(p_to_q(IntPoly::from_descending({2, 1, 2})), NotMonic);
    EXPECT_THROW(p_to_q(IntPoly::from_descending({1, 1, 2})), NotReciprocal);
}

TEST(QToP, Examples) {
    EXPECT_EQ(q_to_p(kQ0), kP0);
    EXPECT_EQ(q_to_p(IntPoly::from_descending({1, -3})), IntPoly::from_descending({1, -3, 1}));
    EXPECT_EQ(q_to_p(IntPoly::from_descending({1, -1, -3})), IntPoly::from_descending({1, -1, -1, -1, 1}));
    EXPECT_THROW(q_to_p(IntPoly::from_descending({2, 1})), NotMonic);
}

TEST(HalfCoeffs, PalindromeRoundTrip) {
    std::vector<Integer> half{1, -1, 0, 0, 0, -1, 1};
    auto full = palindrome_from_half(half);
    ASSERT_EQ(full.size(), 13u);
    IntPoly p = IntPoly::from_descending(std::span<const Integer>(full));
    EXPECT_TRUE(is_reciprocal(p));
    EXPECT_EQ(half_coeffs(p), half);
}

TEST(RoundTrip, ReciprocalToHalfAndBack) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(1, 32);
    for (int t = 0; t < 300; ++t) {
        IntPoly p = random_monic_reciprocal(rng, 2 * pick(rng), 5);
        EXPECT_EQ(q_to_p(p_to_q(p)), p) << p.to_string();
    }
    for (int d = 1; d <= 32; ++d) {
        IntPoly p = random_monic_reciprocal(rng, 2 * d, 5);
        EXPECT_EQ(q_to_p(p_to_q(p)), p);
    }
}

TEST(RoundTrip, HalfToReciprocalAndBack) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> pick(1, 32);
    for (int t = 0; t < 300; ++t) {
        IntPoly q = random_monic(rng, pick(rng), 5);
        IntPoly p = q_to_p(q);
        EXPECT_EQ(p.degree(), 2 * q.degree());
        EXPECT_TRUE(is_reciprocal(p));
        EXPECT_EQ(p_to_q(p), q) << q.to_string();
    }
}

TEST(RootCorrespondence, NumericCheck) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> pick(1, 6);
    int inner_checked = 0, outer_checked = 0;
    for (int t = 0; t < 400; ++t) {
        IntPoly q = random_monic(rng, pick(rng), 5);
        if (squarefree_part(q).degree() != q.degree()) continue;
        const auto pz = oracle::numeric_roots(q_to_p(q));
        for (double y : oracle::numeric_real_roots(q)) {
            if (std::abs(std::abs(y) - 2) < 1e-3) continue;
            if (std::abs(y) < 2) {
                int on_circle = 0;
                for (const auto& z : pz) {
                    if (std::abs((z + 1.0 / z).real() - y) < 1e-9 && std::abs(std::abs(z) - 1) < 1e-9) ++on_circle;
                }
                EXPECT_GE(on_circle, 2) << q.to_string() << " y = " << y;
                ++inner_checked;
            } else if (y > 2) {
                // the real pair tau, 1/tau with tau + 1/tau = y
                const double tau = (y + std::sqrt(y * y - 4)) / 2;
                int found = 0;
                for (const auto& z : pz) {
                    if (std::abs(z.imag()) > 1e-9) continue;
                    if (std::abs(z.real() - tau) < 1e-9 || std::abs(z.real() - 1 / tau) < 1e-9) ++found;
                }
                EXPECT_EQ(found, 2) << q.to_string() << " y = " << y;
                ++outer_checked;
            }
        }
    }
    EXPECT_GT(inner_checked, 100);
    EXPECT_GT(outer_checked, 50);
}
