#pragma once
// Polynomials over the prime field Z/p for word-sized p (p < 2^31).

#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"

#include <cstdint>
#include <algorithm>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace salem::modp {

using Word = std::uint64_t;

/// Coefficient i multiplies x^i; trailing zeros are stripped.
struct Poly {
    std::vector<Word> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    Word lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

inline Word mul_mod(Word a, Word b, Word p) { return (a * b) % p; }

inline Word pow_mod(Word a, Word e, Word p) {
    Word r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline Word inv_mod(Word a, Word p) { return pow_mod(a, p - 2, p); }

inline Poly reduce(const IntPoly& f, Word p) {
    Poly out;
    out.c.resize(f.coeffs().size());
    Integer r;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p);
        out.c[i] = r.get_ui();
    }
    out.trim();
    return out;
}

inline Poly x_poly() { return Poly{{0, 1}}; }

inline Poly add(const Poly& a, const Poly& b, Word p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Word x = i < a.c.size() ? a.c[i] : 0;
        Word y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + y) % p;
    }
    r.trim();
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, Word p) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Word x = i < a.c.size() ? a.c[i] : 0;
        Word y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = (x + p - y) % p;
    }
    r.trim();
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, Word p) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
    }
    r.trim();
    return r;
}

inline Poly scale(const Poly& a, Word s, Word p) {
    Poly r = a;
    for (auto& v : r.c) v = mul_mod(v, s, p);
    r.trim();
    return r;
}

inline Poly make_monic(const Poly& a, Word p) {
    if (a.is_zero()) return a;
    return scale(a, inv_mod(a.lead(), p), p);
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Word p) {
    if (b.is_zero()) throw Error("modp::divmod by zero polynomial");
    Poly r = a;
    if (a.degree() < b.degree()) return {Poly{}, r};
    Poly q;
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const Word inv = inv_mod(b.lead(), p);
    const int db = b.degree();
    for (int top = a.degree(); top >= db; --top) {
        Word t = mul_mod(r.c[top], inv, p);
        q.c[top - db] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) {
            r.c[top - db + j] = (r.c[top - db + j] + p - mul_mod(t, b.c[j], p)) % p;
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

inline Poly rem(const Poly& a, const Poly& b, Word p) { return divmod(a, b, p).second; }

/// Monic gcd.
inline Poly gcd(Poly a, Poly b, Word p) {
    while (!b.is_zero()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/// (g, s, t) with s a + t b = g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b, Word p) {
    Poly r0 = a, r1 = b;
    Poly s0{{1}}, s1{};
    Poly t0{}, t1{{1}};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Word inv = inv_mod(r0.lead(), p);
    return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly derivative(const Poly& a, Word p) {
    Poly r;
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul_mod(a.c[i], i % p, p);
    r.trim();
    return r;
}

/// base^e mod m.
inline Poly pow_mod(const Poly& base, const Integer& e, const Poly& m, Word p) {
    Poly result{{1}};
    result = rem(result, m, p);
    Poly b = rem(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
    }
    return result;
}

inline bool is_squarefree(const Poly& f, Word p) {
    Poly d = derivative(f, p);
    if (d.is_zero()) return false;
    return gcd(f, d, p).degree() == 0;
}

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (product of all irreducible factors of degree k, k).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, Word p) {
    std::vector<std::pair<Poly, int>> out;
    const Poly x = x_poly();
    Poly h = rem(x, f, p);
    const Integer pp(static_cast<unsigned long>(p));
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        h = pow_mod(h, pp, f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            f = divmod(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Degrees of the irreducible factors, from a distinct-degree split.
inline std::vector<int> factor_degrees(const std::vector<std::pair<Poly, int>>& ddf) {
    std::vector<int> degs;
    for (const auto& [g, k] : ddf) {
        for (int i = 0; i < g.degree() / k; ++i) degs.push_back(k);
    }
    return degs;
}

/// Cantor-Zassenhaus equal-degree split of a monic product of degree-k
/// irreducibles, for odd p. The generator is seeded so results are stable.
inline std::vector<Poly> equal_degree(const Poly& g, int k, Word p) {
    if (p == 2) throw Error("equal_degree requires an odd prime");
    if (g.degree() == k) return {g};
    std::vector<Poly> out;
    std::vector<Poly> work{g};
    std::mt19937_64 rng(0x5a1e3ULL + static_cast<unsigned>(g.degree()) * 131 + p);
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(k));
    e = (e - 1) / 2;
    while (!work.empty()) {
        Poly f = std::move(work.back());
        work.pop_back();
        if (f.degree() == k) {
            out.push_back(std::move(f));
            continue;
        }
        while (true) {
            Poly a;
            a.c.resize(static_cast<std::size_t>(f.degree()));
            std::uniform_int_distribution<Word> coef(0, p - 1);
            for (auto& v : a.c) v = coef(rng);
            a.trim();
            if (a.degree() < 1) continue;
            Poly d = gcd(a, f, p);
            if (d.degree() <= 0) {
                Poly b = pow_mod(a, e, f, p);
                d = gcd(sub(b, Poly{{1}}, p), f, p);
            }
            if (d.degree() > 0 && d.degree() < f.degree()) {
                work.push_back(divmod(f, d, p).first);
                work.push_back(std::move(d));
                break;
            }
        }
    }
    return out;
}

/// Complete factorization of a monic squarefree f into monic irreducibles.
inline std::vector<Poly> factor_squarefree(const Poly& f, Word p) {
    std::vector<Poly> out;
    for (const auto& [g, k] : distinct_degree(f, p)) {
        for (auto& h : equal_degree(g, k, p)) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace salem::modp
