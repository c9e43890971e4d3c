#pragma once
// Factorization of integer polynomials into irreducibles (Zassenhaus):
// factor modulo a small prime, Hensel-lift past the Mignotte bound, then
// recombine lifted factors by trial division over the integers.

#include "salem/constraints.hpp"
#include "salem/modp.hpp"
#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"
#include "salem/roots.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace salem {

struct Factorization {
    /// Signed content of the input.
    Integer unit = 1;
    /// Primitive irreducible factors with positive leading coefficient, sorted.
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly expand() const {
        IntPoly out = IntPoly::constant(unit);
        for (const auto& [f, m] : factors) out *= pow(f, static_cast<unsigned>(m));
        return out;
    }

    std::size_t count() const { return factors.size(); }
};

namespace detail {

inline const std::vector<modp::Word>& small_primes() {
    static const std::vector<modp::Word> primes = [] {
        constexpr modp::Word limit = 4000;
        std::vector<bool> composite(limit, false);
        std::vector<modp::Word> out;
        for (modp::Word i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (modp::Word j = i * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

/// Usable prime: does not divide the leading coefficient and keeps f squarefree.
inline bool good_prime(const IntPoly& f, modp::Word p) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) return false;
    return modp::is_squarefree(modp::reduce(f, p), p);
}

/// Subset sums of the given degrees, as a membership table over 0..n.
inline std::vector<bool> subset_sums(const std::vector<int>& degs, int n) {
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (int d : degs) {
        for (int s = n; s >= d; --s) {
            if (reach[s - d]) reach[s] = true;
        }
    }
    return reach;
}

inline IntPoly lift_poly(const modp::Poly& a) {
    std::vector<Integer> c(a.c.begin(), a.c.end());
    return IntPoly(std::move(c));
}

inline Integer mod_nonneg(const Integer& v, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Coefficients reduced into (-m/2, m/2].
inline IntPoly symmetric_mod(const IntPoly& a, const Integer& m) {
    std::vector<Integer> c(a.coeffs().size());
    const Integer half = m / 2;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = mod_nonneg(a.coeffs()[i], m);
        if (c[i] > half) c[i] -= m;
    }
    return IntPoly(std::move(c));
}

inline IntPoly nonneg_mod(const IntPoly& a, const Integer& m) {
    std::vector<Integer> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_nonneg(a.coeffs()[i], m);
    return IntPoly(std::move(c));
}

/// Lifts f = g0 h0 (mod p) with h0 monic to f = g h (mod p^k); g keeps the
/// exact leading coefficient of f.
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const modp::Poly& g0, const modp::Poly& h0,
                                               modp::Word p, unsigned k) {
    auto [one, s, t] = modp::ext_gcd(g0, h0, p);
    if (one.degree() != 0) throw Error("hensel_pair: factors are not coprime mod p");
    std::vector<Integer> gc(g0.c.begin(), g0.c.end());
    gc.back() = f.leading();
    IntPoly g(std::move(gc));
    IntPoly h = lift_poly(h0);
    Integer pj = p;
    for (unsigned j = 1; j < k; ++j) {
        IntPoly diff = f - g * h;
        auto e_int = diff.divide_by(pj);
        modp::Poly e = modp::reduce(e_int, p);
        if (!e.is_zero()) {
            auto [quo, sigma] = modp::divmod(modp::mul(s, e, p), h0, p);
            modp::Poly tau = modp::add(modp::mul(t, e, p), modp::mul(quo, g0, p), p);
            g += pj * lift_poly(tau);
            h += pj * lift_poly(sigma);
        }
        pj *= p;
    }
    return {g, h};
}

/// Monic lifts (mod p^k, coefficients in [0, p^k)) of the monic modular factors of f.
inline std::vector<IntPoly> hensel_lift(const IntPoly& f, std::span<const modp::Poly> factors, modp::Word p,
                                        unsigned k, const Integer& modulus) {
    if (factors.size() == 1) {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), modulus.get_mpz_t()) == 0) {
            throw Error("hensel_lift: leading coefficient not invertible");
        }
        return {nonneg_mod(inv * f, modulus)};
    }
    const std::size_t mid = factors.size() / 2;
    modp::Poly g0{{static_cast<modp::Word>(mod_nonneg(f.leading(), p).get_ui())}};
    for (std::size_t i = 0; i < mid; ++i) g0 = modp::mul(g0, factors[i], p);
    modp::Poly h0{{1}};
    for (std::size_t i = mid; i < factors.size(); ++i) h0 = modp::mul(h0, factors[i], p);
    auto [g, h] = hensel_pair(f, g0, h0, p, k);
    auto left = hensel_lift(g, factors.subspan(0, mid), p, k, modulus);
    auto right = hensel_lift(h, factors.subspan(mid), p, k, modulus);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

struct PrimeSurvey {
    std::optional<modp::Word> irreducible_mod;
    modp::Word best_prime = 0;
    std::vector<std::pair<modp::Poly, int>> best_ddf;
    std::vector<bool> allowed_degrees;
};

/// Distinct-degree patterns modulo up to `max_primes` usable primes.
/// Allowed factor degrees are the intersection of the subset-sum sets.
inline PrimeSurvey survey_primes(const IntPoly& f, int max_primes, bool include_two) {
    PrimeSurvey out;
    const int n = f.degree();
    out.allowed_degrees.assign(static_cast<std::size_t>(n) + 1, true);
    std::size_t best_count = static_cast<std::size_t>(-1);
    int used = 0;
    for (modp::Word p : small_primes()) {
        if (used >= max_primes) break;
        if (p == 2 && !include_two) continue;
        if (!good_prime(f, p)) continue;
        ++used;
        auto ddf = modp::distinct_degree(modp::make_monic(modp::reduce(f, p), p), p);
        auto degs = modp::factor_degrees(ddf);
        if (degs.size() == 1) {
            out.irreducible_mod = p;
            return out;
        }
        auto sums = subset_sums(degs, n);
        for (int s = 0; s <= n; ++s) out.allowed_degrees[s] = out.allowed_degrees[s] && sums[s];
        if (p != 2 && degs.size() < best_count) {
            best_count = degs.size();
            out.best_prime = p;
            out.best_ddf = std::move(ddf);
        }
    }
    return out;
}

/// Mignotte-style bound |lc| * 2^n * ||f||_2 on the coefficients of
/// lc(f) / lc(g) * g for any integer factor g of f.
inline Integer factor_coefficient_bound(const IntPoly& f) {
    Integer norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
    return abs(f.leading()) * two_pow * root;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Irreducible factors of a primitive squarefree f with positive leading coefficient.
inline std::vector<IntPoly> zassenhaus(const IntPoly& f) {
    if (f.degree() <= 1) return {f};
    PrimeSurvey survey = survey_primes(f, 20, false);
    if (survey.irreducible_mod) return {f};
    const int n = f.degree();
    bool only_trivial = true;
    for (int s = 1; s < n; ++s) only_trivial = only_trivial && !survey.allowed_degrees[s];
    if (only_trivial) return {f};
    const modp::Word p = survey.best_prime;
    if (p == 0) throw Error("zassenhaus: no usable prime for " + f.to_string());

    std::vector<modp::Poly> modular;
    for (const auto& [g, k] : survey.best_ddf) {
        for (auto& h : modp::equal_degree(g, k, p)) modular.push_back(std::move(h));
    }

    const Integer bound = 2 * factor_coefficient_bound(f);
    unsigned k = 1;
    Integer modulus = p;
    while (modulus <= bound) {
        modulus *= p;
        ++k;
    }
    std::vector<IntPoly> lifted = hensel_lift(f, modular, p, k, modulus);

    std::vector<IntPoly> result;
    IntPoly rest = f;
    std::size_t size = 1;
    while (2 * size <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        do {
            int deg = 0;
            for (auto i : idx) deg += lifted[i].degree();
            if (!survey.allowed_degrees[deg]) continue;
            const Integer& lc = rest.leading();
            // Constant-term screen before forming the full product.
            Integer c0 = lc;
            for (auto i : idx) c0 = mod_nonneg(c0 * lifted[i].coeff(0), modulus);
            if (c0 > modulus / 2) c0 -= modulus;
            const Integer target = lc * rest.coeff(0);
            if (c0 == 0 ? target != 0 : !mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) continue;

            IntPoly cand = IntPoly::constant(lc);
            for (auto i : idx) cand = nonneg_mod(cand * lifted[i], modulus);
            cand = symmetric_mod(cand, modulus).primitive_part();
            auto quotient = divide_exact(rest, cand);
            if (!quotient) continue;
            result.push_back(cand);
            rest = *quotient;
            std::vector<IntPoly> remaining;
            for (std::size_t i = 0; i < lifted.size(); ++i) {
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(std::move(lifted[i]));
            }
            lifted = std::move(remaining);
            found = true;
            break;
        } while (next_combination(idx, lifted.size()));
        if (!found) ++size;
    }
    if (rest.degree() > 0) result.push_back(rest.primitive_part());
    return result;
}

}  // namespace detail

/// Complete factorization over the integers; the product of the result equals p.
inline Factorization factor(const IntPoly& p) {
    if (p.is_zero()) throw Error("factor: zero polynomial");
    Factorization out;
    out.unit = p.content();
    if (p.leading() < 0) out.unit = -out.unit;
    IntPoly prim = p.divide_by(out.unit);
    if (prim.degree() >= 1) {
        IntPoly sqf = squarefree_part(prim);
        for (auto& g : detail::zassenhaus(sqf)) {
            int mult = 0;
            IntPoly rest = prim;
            while (auto q = divide_exact(rest, g)) {
                ++mult;
                rest = std::move(*q);
            }
            out.factors.emplace_back(std::move(g), mult);
            prim = rest;
        }
        if (prim.degree() > 0) throw Error("factor: multiplicity bookkeeping left " + prim.to_string());
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!(out.expand() == p)) throw Error("factor: reconstruction mismatch for " + p.to_string());
    return out;
}

/// Prime (possibly 2) modulo which f stays irreducible, scanning the first
/// `max_primes` usable primes.
inline std::optional<modp::Word> irreducible_mod_prime(const IntPoly& f, int max_primes = 20) {
    if (f.degree() < 1) return std::nullopt;
    return detail::survey_primes(f, max_primes, true).irreducible_mod;
}

inline bool is_irreducible_mod(const IntPoly& f, modp::Word p) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) return false;
    auto fp = modp::make_monic(modp::reduce(f, p), p);
    if (!modp::is_squarefree(fp, p)) return false;
    return modp::factor_degrees(modp::distinct_degree(fp, p)).size() == 1;
}

inline bool is_irreducible(const IntPoly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return p.content() == 1;
    if (irreducible_mod_prime(p)) return true;
    Factorization f = factor(p);
    return (f.unit == 1 || f.unit == -1) && f.count() == 1 && f.factors[0].second == 1;
}

/// Root layout of a single factor relative to (-2, 2) and (2, R).
struct FactorLayout {
    bool boundary_root = false;
    int inner = 0;
    int outer = 0;
};

inline FactorLayout factor_layout(const IntPoly& f, const Threshold& thr) {
    FactorLayout out;
    if (sign_at(f, Rational(2)) == 0 || sign_at(f, Rational(-2)) == 0 || sign_at(f, thr.r()) == 0) {
        out.boundary_root = true;
        return out;
    }
    SturmChain chain = sturm_chain(f);
    out.inner = count_roots(chain, Interval(-2, 2));
    out.outer = count_roots(chain, Interval(2, thr.r()));
    return out;
}

/// The irreducible factor with one root in (2, R) and all others in (-2, 2),
/// or nullopt when no factor qualifies. Throws MultipleQualifying when two
/// factors have a root in (2, R).
inline std::optional<IntPoly> select_salem_factor(const Factorization& fact, const Threshold& thr) {
    std::optional<IntPoly> chosen;
    int with_outer_root = 0;
    bool layout_ok = true;
    for (const auto& [f, mult] : fact.factors) {
        if (f.degree() < 1) continue;
        FactorLayout lay = factor_layout(f, thr);
        if (lay.outer > 0) {
            if (++with_outer_root > 1) {
                throw MultipleQualifying("more than one factor has a root in (2, R): " + chosen->to_string() +
                                         " and " + f.to_string());
            }
            chosen = f;
        }
        if (lay.boundary_root || lay.inner + lay.outer != f.degree() || lay.outer > 1) layout_ok = false;
    }
    if (!layout_ok || !chosen || chosen->degree() < 2) return std::nullopt;
    return chosen;
}

}  // namespace salem
