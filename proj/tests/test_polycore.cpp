#include "numeric_oracle.hpp"
#include "oracles.hpp"
#include "salem/polynomial.hpp"
#include "salem/roots.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace salem;

namespace {

const IntPoly kQ0 = IntPoly::from_descending({1, 1, -5, -5, 4, 3});
const IntPoly kP0 = IntPoly::from_descending({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
const Rational kR(3770, 1813);

std::vector<int> chain_signs_at(const SturmChain& chain, const Rational& x) {
    std::vector<int> s;
    for (const auto& p : chain.polys()) s.push_back(sign_at(p, x));
    return s;
}

}  // namespace

TEST(IntPoly, ConstructionAndAccessors) {
    IntPoly p = IntPoly::from_descending({0, 0, 3, -1, 2});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coeff(0), 2);
    EXPECT_EQ(p.coeff(2), 3);
    EXPECT_EQ(p.coeff(9), 0);
    EXPECT_FALSE(p.is_monic());
    EXPECT_TRUE(IntPoly().is_zero());
    EXPECT_EQ(IntPoly().degree(), -1);
    EXPECT_EQ(kQ0.to_string(), "x^5 + x^4 - 5x^3 - 5x^2 + 4x + 3");
}

TEST(IntPoly, Arithmetic) {
    IntPoly a = IntPoly::from_descending({1, -1});
    IntPoly b = IntPoly::from_descending({1, 1});
    EXPECT_EQ(a * b, IntPoly::from_descending({1, 0, -1}));
    EXPECT_EQ(a + b, IntPoly::from_descending({2, 0}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(pow(b, 3), IntPoly::from_descending({1, 3, 3, 1}));
    EXPECT_EQ(kQ0.derivative(), IntPoly::from_descending({5, 4, -15, -10, 4}));
    EXPECT_EQ(IntPoly::from_descending({-6, 4, 2}).content(), 2);
    EXPECT_EQ(IntPoly::from_descending({-6, 4, 2}).primitive_part(), IntPoly::from_descending({3, -2, -1}));
}

TEST(IntPoly, ExactDivisionAndGcd) {
    IntPoly a = IntPoly::from_descending({1, 0, -1});
    auto q = divide_exact(a, IntPoly::from_descending({1, -1}));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, IntPoly::from_descending({1, 1}));
    EXPECT_FALSE(divide_exact(a, IntPoly::from_descending({1, 2})));
    IntPoly g = gcd(IntPoly::from_descending({2, 0, -2}), IntPoly::from_descending({3, 6, 3}));
    EXPECT_EQ(g, IntPoly::from_descending({1, 1}));
    EXPECT_EQ(gcd(kQ0, kQ0.derivative()), IntPoly::constant(1));
}

TEST(Eval, Examples) {
    EXPECT_EQ(eval(IntPoly::from_descending({1, -1, -3}), Rational(2)), -1);
    EXPECT_EQ(eval(kQ0, Rational(2)), -1);
    EXPECT_EQ(eval(kQ0, Rational(0)), 3);
    EXPECT_EQ(eval(IntPoly::from_descending({7, 0, 0, -4}), Rational(0)), -4);
    EXPECT_EQ(eval(IntPoly::from_descending({2, 0, -1}), Rational(1, 2)), Rational(-1, 2));
}

TEST(Eval, ScaledMatchesRational) {
    const Rational x(-7, 3);
    EXPECT_EQ(Rational(eval_scaled(kQ0, x)), eval(kQ0, x) * Rational(pow_of(3, 5)));
    EXPECT_EQ(sign_at(kQ0, x), sign(eval(kQ0, x)));
}

TEST(Eval, RingHomomorphismOnSamples) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 17);
    for (int t = 0; t < 300; ++t) {
        IntPoly p = oracle::random_poly(rng, 8, 10, false);
        IntPoly q = oracle::random_poly(rng, 8, 10, false);
        Rational x = make_rational(num(rng), den(rng));
        EXPECT_EQ(eval(p * q, x), eval(p, x) * eval(q, x));
        EXPECT_EQ(eval(p + q, x), eval(p, x) + eval(q, x));
    }
}

TEST(Sturm, TextbookChains) {
    SturmChain c1 = sturm_chain(IntPoly::from_descending({1, 0, -1}));
    ASSERT_EQ(c1.size(), 3u);
    for (const Rational& x : {Rational(-3), Rational(0), Rational(5, 2)}) {
        std::vector<int> expected{sign(x * x - 1), sign(x), 1};
        EXPECT_EQ(chain_signs_at(c1, x), expected);
    }
    SturmChain c2 = sturm_chain(IntPoly::from_descending({1, 0, 1}));
    ASSERT_EQ(c2.size(), 3u);
    for (const Rational& x : {Rational(-3), Rational(1, 3), Rational(7)}) {
        std::vector<int> expected{1, sign(x), -1};
        EXPECT_EQ(chain_signs_at(c2, x), expected);
    }
    SturmChain c3 = sturm_chain(IntPoly::from_descending({1, -1, -3}));
    ASSERT_EQ(c3.size(), 3u);
    EXPECT_TRUE(c3[2].is_constant());
    EXPECT_GT(c3[2].coeff(0), 0);
}

TEST(Sturm, ChainStartsWithInputAndDerivative) {
    SturmChain c = sturm_chain(kQ0);
    EXPECT_EQ(c[0], kQ0);
    EXPECT_EQ(c[1], kQ0.derivative());
    EXPECT_TRUE(c.polys().back().is_constant());
    EXPECT_FALSE(c.polys().back().is_zero());
}

TEST(Sturm, SquarefreeChainsEndInNonzeroConstant) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        IntPoly p = squarefree_part(oracle::random_poly(rng, 8, 10, false));
        if (p.degree() < 1) continue;
        SturmChain c = sturm_chain(p);
        EXPECT_TRUE(c.polys().back().is_constant()) << p.to_string();
        EXPECT_FALSE(c.polys().back().is_zero()) << p.to_string();
    }
}

TEST(CountRoots, Examples) {
    EXPECT_EQ(count_roots(IntPoly::from_descending({1, 0, 1}), Interval(-2, 2)), 0);
    EXPECT_EQ(count_roots(kQ0, Interval(-2, 2)), 4);
    EXPECT_EQ(count_roots(kQ0, Interval(2, kR)), 1);
    EXPECT_EQ(count_roots(IntPoly::from_descending({1, -1, -3}), Interval(2, kR)), 0);
    EXPECT_EQ(count_real_roots(kQ0), 5);
    EXPECT_EQ(count_real_roots(kP0), 2);
}

TEST(CountRoots, EndpointRootIsAnError) {
    IntPoly p = IntPoly::from_descending({1, 0, -4});
    EXPECT_THROW(count_roots(p, Interval(2, 3)), EndpointRoot);
    EXPECT_THROW(count_roots(p, Interval(-3, -2)), EndpointRoot);
    EXPECT_EQ(count_roots(p, Interval(Rational(19, 10), Rational(21, 10))), 1);
}

TEST(CountRoots, IntervalRejectsEmpty) { EXPECT_THROW(Interval(2, 2), Error); }

TEST(CountRoots, AgreesWithNumericRootFinder) {
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        IntPoly p = oracle::random_poly(rng, 8, 10, false);
        IntPoly sf = squarefree_part(p);
        const Integer m = cauchy_bound(p);
        const int exact = count_roots(p, Interval(Rational(-m), Rational(m)));
        const auto numeric = oracle::numeric_real_roots(sf);
        EXPECT_EQ(exact, static_cast<int>(numeric.size())) << p.to_string();
        ++checked;

        // A random subinterval, unless a root sits too close to an endpoint
        // for double precision to classify it.
        std::uniform_int_distribution<long> pick(-40, 40);
        long a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const Rational lo = make_rational(a, 4), hi = make_rational(b, 4);
        if (sign_at(p, lo) == 0 || sign_at(p, hi) == 0) continue;
        bool near = false;
        int inside = 0;
        for (double r : numeric) {
            near |= std::abs(r - lo.get_d()) < 1e-6 || std::abs(r - hi.get_d()) < 1e-6;
            inside += r > lo.get_d() && r < hi.get_d();
        }
        if (!near) {
            EXPECT_EQ(count_roots(p, Interval(lo, hi)), inside) << p.to_string();
        }
    }
    EXPECT_EQ(checked, 1000);
}

TEST(RefineRoot, Examples) {
    Interval a = refine_root(IntPoly::from_descending({1, 0, -4}), Interval(1, 3), Rational(1, 1000));
    EXPECT_LT(a.width(), Rational(1, 1000));
    EXPECT_TRUE(a.lo <= 2 && 2 <= a.hi);

    Interval b = refine_root(IntPoly::from_descending({1, -1, -3}), Interval(2, 3), Rational(1, 1000000));
    EXPECT_LT(b.width(), Rational(1, 1000000));
    const double root = (1 + std::sqrt(13.0)) / 2;
    EXPECT_LT(b.lo.get_d(), root + 1e-12);
    EXPECT_GT(b.hi.get_d(), root - 1e-12);
}

TEST(RefineRoot, LehmerToThirteenDigits) {
    const Rational width(1, Integer("10000000000000"));
    Interval iv = refine_root(kP0, Interval(Rational(1), Rational(49, 37)), width);
    EXPECT_LT(iv.width(), width);
    EXPECT_NE(sign_at(kP0, iv.lo), sign_at(kP0, iv.hi));
    EXPECT_NE(sign_at(kP0, iv.lo), 0);
    // 1.176280... is the known value; the remaining digits are cross-checked by Newton.
    EXPECT_EQ(floor_of(iv.lo * 1000000), 1176280);
    const double newton = oracle::newton(kP0, 1.17);
    EXPECT_NEAR(iv.midpoint().get_d(), newton, 1e-13);
    EXPECT_NEAR(newton, 1.1762808182599175, 1e-15);
}

TEST(RefineRoot, NoSignChange) {
    EXPECT_THROW(refine_root(IntPoly::from_descending({1, 0, -4}), Interval(3, 4), Rational(1, 10)), NoSignChange);
    EXPECT_THROW(refine_root(IntPoly::from_descending({1, 0, -4}), Interval(2, 4), Rational(1, 10)), NoSignChange);
}

TEST(RefineRoot, ExactRationalRoot) {
    Interval iv = refine_root(IntPoly::from_descending({2, -1}), Interval(0, 1), Rational(1, 100));
    EXPECT_LT(iv.width(), Rational(1, 100));
    EXPECT_TRUE(iv.lo < Rational(1, 2) && Rational(1, 2) < iv.hi);
}

TEST(RefineRoot, OutputIsNestedAndBracketsSignChange) {
    std::mt19937_64 rng(77);
    int refined = 0;
    for (int t = 0; t < 400; ++t) {
        IntPoly p = squarefree_part(oracle::random_poly(rng, 8, 10, false));
        if (p.degree() < 1) continue;
        const Integer m = cauchy_bound(p);
        // Isolate one root by splitting (-M, M) until a piece holds exactly one.
        std::vector<Interval> work{Interval(Rational(-m), Rational(m))};
        while (!work.empty()) {
            Interval iv = work.back();
            work.pop_back();
            if (sign_at(p, iv.lo) == 0 || sign_at(p, iv.hi) == 0) continue;
            const int n = count_roots(p, iv);
            if (n == 0) continue;
            if (n == 1) {
                const Rational w = iv.width() / 1024;
                Interval out = refine_root(p, iv, w);
                EXPECT_TRUE(iv.contains(out));
                EXPECT_LT(out.width(), w);
                EXPECT_EQ(sign_at(p, out.lo) * sign_at(p, out.hi), -1);
                EXPECT_EQ(count_roots(p, out), 1);
                ++refined;
                continue;
            }
            const Rational mid = iv.midpoint() + iv.width() / 7919;
            work.emplace_back(iv.lo, mid);
            work.emplace_back(mid, iv.hi);
        }
    }
    EXPECT_GT(refined, 200);
}

TEST(SquarefreePart, Examples) {
    EXPECT_EQ(squarefree_part(IntPoly::from_descending({1, 0, -2, 0, 1})), IntPoly::from_descending({1, 0, -1}));
    EXPECT_EQ(squarefree_part(kQ0), kQ0);
    EXPECT_EQ(squarefree_part(IntPoly::from_descending({2, 0, -2})), IntPoly::from_descending({1, 0, -1}));
    EXPECT_EQ(squarefree_part(IntPoly::from_descending({-1, 0, 1})), IntPoly::from_descending({1, 0, -1}));
}
