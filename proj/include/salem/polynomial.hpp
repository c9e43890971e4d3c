#pragma once
// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include "salem/numeric.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace salem {

/// Coefficient i multiplies x^i. Trailing zeros are stripped, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// Coefficients listed from the highest power down, as they are usually written.
    static IntPoly from_descending(std::initializer_list<long> coeffs) {
        std::vector<Integer> c(coeffs.begin(), coeffs.end());
        std::reverse(c.begin(), c.end());
        return IntPoly(std::move(c));
    }

    static IntPoly from_descending(std::span<const Integer> coeffs) {
        std::vector<Integer> c(coeffs.rbegin(), coeffs.rend());
        return IntPoly(std::move(c));
    }

    static IntPoly constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

    static IntPoly monomial(std::size_t k, const Integer& c = 1) {
        std::vector<Integer> v(k + 1);
        v[k] = c;
        return IntPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    const Integer& leading() const { return coeffs_.back(); }

    /// Coefficients from the highest power down.
    std::vector<Integer> descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

    IntPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Integer> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(d));
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Divided by its content, with a positive leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        Integer g = content();
        if (leading() < 0) g = -g;
        return divide_by(g);
    }

    IntPoly divide_by(const Integer& c) const {
        std::vector<Integer> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
        }
        return IntPoly(std::move(out));
    }

    IntPoly operator-() const {
        auto c = coeffs_;
        for (auto& v : c) v = -v;
        return IntPoly(std::move(c));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const Integer& s, const IntPoly& p) {
        if (s == 0) return {};
        auto c = p.coeffs_;
        for (auto& v : c) v *= s;
        return IntPoly(std::move(c));
    }

    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Deterministic total order (degree first, then coefficients from the top).
    friend bool operator<(const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
        }
        return false;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Integer& c = coeffs_[i];
            if (c == 0) continue;
            Integer mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || i == 0) os << mag.get_str();
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline IntPoly pow(const IntPoly& p, unsigned k) {
    IntPoly result = IntPoly::constant(1);
    for (unsigned i = 0; i < k; ++i) result *= p;
    return result;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without leaving the integers.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("pseudo_remainder: division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    const Integer& lb = b.leading();
    for (int top = a.degree(); top >= db; --top) {
        Integer lead = r[top];
        for (auto& v : r) v *= lb;
        if (lead != 0) {
            for (int j = 0; j <= db; ++j) r[top - db + j] -= lead * b.coeffs()[j];
        }
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

/// Returns a / b when the division is exact over the integers.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    std::vector<Integer> q(a.degree() - db + 1);
    const Integer& lb = b.leading();
    for (int top = a.degree(); top >= db; --top) {
        if (r[top] == 0) continue;
        if (!mpz_divisible_p(r[top].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer t;
        mpz_divexact(t.get_mpz_t(), r[top].get_mpz_t(), lb.get_mpz_t());
        q[top - db] = t;
        for (int j = 0; j <= db; ++j) r[top - db + j] -= t * b.coeffs()[j];
    }
    for (int i = 0; i < db; ++i) {
        if (r[i] != 0) return std::nullopt;
    }
    return IntPoly(std::move(q));
}

/// Primitive gcd with positive leading coefficient (content is discarded).
inline IntPoly gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly{} : r.primitive_part();
    }
    return a.primitive_part();
}

/// Integer M with every complex root of p strictly inside |z| < M (Cauchy bound).
inline Integer cauchy_bound(const IntPoly& p) {
    if (p.degree() < 1) return 1;
    Rational worst = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = make_rational(abs(p.coeffs()[i]), abs(p.leading()));
        if (r > worst) worst = r;
    }
    return floor_of(worst) + 2;
}

}  // namespace salem
