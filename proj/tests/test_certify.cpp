#include "oracles.hpp"
#include "salem/certify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace salem;

namespace {

const IntPoly kQ0 = IntPoly::from_descending({1, 1, -5, -5, 4, 3});
const IntPoly kP0 = IntPoly::from_descending({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});

IntPoly q_from_half(std::vector<Integer> half) {
    auto full = palindrome_from_half(half);
    return p_to_q(IntPoly::from_descending(std::span<const Integer>(full)));
}

RejectReason reason_of(const CertifyResult& r) {
    const auto* rej = std::get_if<Rejection>(&r);
    return rej ? rej->reason : throw std::logic_error("expected a rejection");
}

}  // namespace

TEST(Certify, LehmerCertificate) {
    Threshold thr(default_eta());
    CertifyResult res = certify(kQ0, thr);
    ASSERT_TRUE(std::holds_alternative<SalemCertificate>(res));
    const auto& cert = std::get<SalemCertificate>(res);
    EXPECT_EQ(cert.p, kP0);
    EXPECT_EQ(cert.q1, kQ0);
    EXPECT_EQ(cert.inner_roots, 4);
    EXPECT_EQ(cert.outer_roots, 1);
    EXPECT_LT(cert.tau_bracket.width(), tau_bracket_width());
    EXPECT_GT(cert.tau_bracket.lo, 1);
    EXPECT_LT(cert.tau_bracket.hi, Rational(49, 37));
    EXPECT_EQ(sign_at(kP0, cert.tau_bracket.lo) * sign_at(kP0, cert.tau_bracket.hi), -1);
    const std::string tau = compute_tau(cert);
    EXPECT_EQ(tau.substr(0, 8), "1.176280");
    EXPECT_EQ(tau, "1.176280818260");
}

TEST(Certify, Rejections) {
    Threshold thr(default_eta());
    EXPECT_EQ(reason_of(certify(IntPoly::from_descending({1, -3}), thr)), RejectReason::DegreeTooSmall);
    EXPECT_EQ(reason_of(certify(IntPoly::from_descending({1, -1, -3}), thr)), RejectReason::OuterRootCount);
    EXPECT_EQ(reason_of(certify(IntPoly::from_descending({2, 1, -3}), thr)), RejectReason::NotMonic);
    EXPECT_EQ(reason_of(certify(IntPoly::from_descending({1, 0, -4}), thr)), RejectReason::RootAtBoundary);
    // x^2 + 1 has no real roots
    EXPECT_EQ(reason_of(certify(IntPoly::from_descending({1, 0, 1}), thr)), RejectReason::InnerRootCount);
    // (x - 1) Q0 has the right layout but is reducible
    EXPECT_EQ(reason_of(certify(IntPoly::from_descending({1, -1}) * kQ0, thr)), RejectReason::HalfReducible);
}

TEST(Certify, TableValues) {
    Threshold thr(default_eta());
    auto a = certify(q_from_half({1, -1, 0, 0, 0, -1, 1}), thr);
    ASSERT_TRUE(std::holds_alternative<SalemCertificate>(a));
    EXPECT_EQ(compute_tau(std::get<SalemCertificate>(a)), "1.302268805094");
    auto b = certify(q_from_half({1, 0, 0, 0, -1, -1, -1}), thr);
    ASSERT_TRUE(std::holds_alternative<SalemCertificate>(b));
    EXPECT_EQ(compute_tau(std::get<SalemCertificate>(b)), "1.315914431926");
}

TEST(Certify, DegreeEightSalemNumber) {
    // Independent value of the largest root of x^8 - x^5 - x^4 - x^3 + 1: 1.2806381562677576...
    Threshold thr(default_eta());
    auto res = certify(q_from_half({1, 0, 0, -1, -1}), thr);
    ASSERT_TRUE(std::holds_alternative<SalemCertificate>(res));
    const auto& cert = std::get<SalemCertificate>(res);
    EXPECT_EQ(compute_tau(cert), "1.280638156268");
    EXPECT_NEAR(oracle::newton(cert.p, 1.28), 1.2806381562677576, 1e-15);
}

TEST(RoundDecimal, HalfUpAndPadding) {
    EXPECT_EQ(round_decimal(Rational(1, 8), 2), "0.13");
    EXPECT_EQ(round_decimal(Rational(1, 3), 4), "0.3333");
    EXPECT_EQ(round_decimal(Rational(2, 3), 4), "0.6667");
    EXPECT_EQ(round_decimal(Rational(1, 1000), 2), "0.00");
    EXPECT_EQ(round_decimal(Rational(5, 1000), 2), "0.01");
    EXPECT_EQ(round_decimal(Rational(19999, 10000), 3), "2.000");
    EXPECT_EQ(round_decimal(Rational(-5, 4), 1), "-1.2");
    EXPECT_EQ(round_decimal(Rational(7, 2), 0), "4");
}

TEST(ComputeTau, StableUnderFurtherRefinement) {
    Threshold thr(default_eta());
    auto cert = std::get<SalemCertificate>(certify(kQ0, thr));
    const std::string tau = compute_tau(cert);
    SalemCertificate tight = cert;
    tight.tau_bracket = refine_root(cert.p, cert.tau_bracket, cert.tau_bracket.width() / Integer("1000000000"));
    EXPECT_EQ(compute_tau(tight), tau);
}

TEST(Certify, InvariantsOnExhaustiveQuartics) {
    // Every quartic in the Vieta box with the sign pattern is a candidate;
    // each accepted one must satisfy the certificate invariants.
    Threshold thr(default_eta());
    Threshold wider(Rational(6623, 5000));
    int accepted = 0;
    std::set<std::string> taus;
    oracle::enumerate_vieta_box(4, thr, [&](const IntPoly& q) {
        CertifyResult res = certify(q, thr);
        const auto* cert = std::get_if<SalemCertificate>(&res);
        if (!cert) return;
        ++accepted;
        const IntPoly& p = cert->p;
        EXPECT_EQ(p, q_to_p(cert->q1));
        EXPECT_TRUE(is_reciprocal(p));
        EXPECT_TRUE(is_irreducible(p));
        EXPECT_EQ(count_roots(cert->q1, Interval(-2, 2)), cert->q1.degree() - 1);
        EXPECT_EQ(count_roots(cert->q1, Interval(2, thr.r())), 1);
        // P: one real root in (1, eta), its reciprocal in (1/eta, 1), the
        // rest on the unit circle.
        EXPECT_EQ(count_roots(p, Interval(1, thr.eta())), 1);
        EXPECT_EQ(count_roots(p, Interval(1 / thr.eta(), 1)), 1);
        const Rational m(cauchy_bound(p));
        EXPECT_EQ(count_roots(p, Interval(thr.eta(), m)), 0);
        EXPECT_EQ(count_roots(p, Interval(-m, -thr.eta())), 0);
        EXPECT_EQ(count_roots(p, Interval(-thr.eta(), -1)), 0);
        EXPECT_EQ(count_roots(p, Interval(-1, -1 / thr.eta())), 0);
        EXPECT_EQ(count_real_roots(p), 2);
        EXPECT_TRUE(Interval(1, thr.eta()).contains(cert->tau_bracket));
        // tau + 1/tau is the root of q1 in (2, R)
        const Interval& t = cert->tau_bracket;
        Interval y(t.lo + 1 / t.lo, t.hi + 1 / t.hi);
        EXPECT_EQ(sign_at(cert->q1, y.lo) * sign_at(cert->q1, y.hi), -1);
        // accepted at eta stays accepted at a larger admissible threshold
        auto again = certify(q, wider);
        ASSERT_TRUE(std::holds_alternative<SalemCertificate>(again));
        EXPECT_EQ(compute_tau(std::get<SalemCertificate>(again)), compute_tau(*cert));
        taus.insert(compute_tau(*cert));
    });
    EXPECT_EQ(accepted, 1);
    EXPECT_EQ(taus, std::set<std::string>{"1.280638156268"});
}
