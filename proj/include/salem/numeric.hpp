#pragma once
// Arbitrary-precision scalars and the exception hierarchy shared by all modules.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace salem {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A polynomial vanishes exactly at an interval endpoint.
class EndpointRoot : public Error {
public:
    using Error::Error;
};

/// Bisection was asked to refine an interval without a sign change.
class NoSignChange : public Error {
public:
    using Error::Error;
};

class NotReciprocal : public Error {
public:
    using Error::Error;
};

class NotMonic : public Error {
public:
    using Error::Error;
};

class OddDegree : public Error {
public:
    using Error::Error;
};

/// More than one factor of a solver hit has a root in (2, R). The sign
/// constraints forbid this, so it points at an internal inconsistency.
class MultipleQualifying : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Reduced fraction num/den; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Integer floor_of(const Rational& v) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

inline Integer ceil_of(const Rational& v) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

inline Integer pow_of(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

static_assert(sizeof(long) == 8, "64-bit long required");

inline bool fits_int64(const Integer& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Integer& v) {
    if (!fits_int64(v)) {
        throw Error("integer does not fit in 64 bits: " + v.get_str());
    }
    return static_cast<std::int64_t>(v.get_si());
}

/// Parses "p/q" into a reduced rational. Decimal notation is rejected.
inline Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
        throw InvalidConfig("expected a fraction p/q, got '" + text + "'");
    }
    const auto is_integer_text = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    if (!is_integer_text(text.substr(0, slash)) || !is_integer_text(text.substr(slash + 1))) {
        throw InvalidConfig("malformed fraction '" + text + "'");
    }
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0) {
        throw InvalidConfig("malformed fraction '" + text + "'");
    }
    if (den == 0) {
        throw InvalidConfig("zero denominator in '" + text + "'");
    }
    return make_rational(num, den);
}

inline std::string to_string(const Rational& v) {
    return v.get_str();
}

}  // namespace salem
