#pragma once
// Certification of half-polynomials as Salem numbers below a threshold, and
// correctly rounded decimal values of the certified root.

#include "salem/constraints.hpp"
#include "salem/factorize.hpp"
#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"
#include "salem/roots.hpp"
#include "salem/transform.hpp"

#include <string>
#include <variant>

namespace salem {

/// Digits after the decimal point in reported Salem numbers.
inline constexpr int kTauDigits = 12;

enum class RejectReason {
    NotMonic,
    DegreeTooSmall,
    RootAtBoundary,
    InnerRootCount,
    OuterRootCount,
    HalfReducible,
    FullReducible,
};

inline const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::NotMonic: return "not_monic";
        case RejectReason::DegreeTooSmall: return "degree_too_small";
        case RejectReason::RootAtBoundary: return "root_at_boundary";
        case RejectReason::InnerRootCount: return "inner_root_count";
        case RejectReason::OuterRootCount: return "outer_root_count";
        case RejectReason::HalfReducible: return "half_reducible";
        case RejectReason::FullReducible: return "full_reducible";
    }
    return "unknown";
}

struct Rejection {
    RejectReason reason;
    std::string detail;
};

struct SalemCertificate {
    IntPoly q1;
    IntPoly p;
    Rational eta;
    int inner_roots = 0;
    int outer_roots = 0;
    /// Contains the Salem number; width below 10^-13, inside (1, eta).
    Interval tau_bracket;
};

using CertifyResult = std::variant<SalemCertificate, Rejection>;

inline const Rational& tau_bracket_width() {
    static const Rational w(1, Integer("10000000000000"));
    return w;
}

/// Accepts q1 iff it is monic, irreducible, of degree d' >= 2, with d' - 1
/// roots in (-2, 2), one root in (2, R), no root at +-2, and the reciprocal
/// polynomial x^d' q1(x + 1/x) is irreducible. Cheap checks run first.
inline CertifyResult certify(const IntPoly& q1, const Threshold& thr) {
    if (!q1.is_monic()) return Rejection{RejectReason::NotMonic, q1.to_string()};
    const int d = q1.degree();
    if (d < 2) return Rejection{RejectReason::DegreeTooSmall, "degree " + std::to_string(d)};
    if (sign_at(q1, Rational(2)) == 0 || sign_at(q1, Rational(-2)) == 0) {
        return Rejection{RejectReason::RootAtBoundary, "root at +-2"};
    }
    if (sign_at(q1, thr.r()) == 0) return Rejection{RejectReason::RootAtBoundary, "root at R"};
    SturmChain chain = sturm_chain(q1);
    const int inner = count_roots(chain, Interval(-2, 2));
    if (inner != d - 1) {
        return Rejection{RejectReason::InnerRootCount, std::to_string(inner) + " roots in (-2, 2)"};
    }
    const int outer = count_roots(chain, Interval(2, thr.r()));
    if (outer != 1) {
        return Rejection{RejectReason::OuterRootCount, std::to_string(outer) + " roots in (2, R)"};
    }
    if (!is_irreducible(q1)) return Rejection{RejectReason::HalfReducible, q1.to_string()};
    IntPoly p = q_to_p(q1);
    if (!is_irreducible(p)) return Rejection{RejectReason::FullReducible, p.to_string()};

    // P(1) = q1(2) and P(eta) = eta^d q1(R) are nonzero, and the single root
    // of q1 in (2, R) maps to the single root of P in (1, eta).
    Interval bracket = refine_root(p, Interval(1, thr.eta()), tau_bracket_width());
    return SalemCertificate{q1, p, thr.eta(), inner, outer, bracket};
}

/// floor(x * 10^digits + 1/2) rendered with exactly `digits` fractional digits.
inline std::string round_decimal(const Rational& x, int digits) {
    Integer scale = pow_of(10, static_cast<unsigned long>(digits));
    Integer n = floor_of(x * Rational(scale) + Rational(1, 2));
    const bool negative = n < 0;
    if (negative) n = -n;
    Integer whole = n / scale;
    if (digits <= 0) return (negative ? "-" : "") + whole.get_str();
    std::string frac = Integer(n % scale).get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return (negative ? "-" : "") + whole.get_str() + "." + frac;
}

/// The Salem number rounded to 12 decimals. The bracket is refined until both
/// endpoints round to the same value.
inline std::string compute_tau(const SalemCertificate& cert) {
    Interval bracket = cert.tau_bracket;
    while (true) {
        std::string lo = round_decimal(bracket.lo, kTauDigits);
        if (lo == round_decimal(bracket.hi, kTauDigits)) return lo;
        bracket = refine_root(cert.p, bracket, bracket.width() / 16);
    }
}

}  // namespace salem
