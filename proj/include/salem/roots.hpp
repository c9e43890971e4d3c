#pragma once
// Exact evaluation, Sturm chains and real-root counting/refinement.
//
// Every decision here is made in exact rational arithmetic. Open intervals
// whose endpoints are roots are reported through EndpointRoot rather than
// nudged, because a root at +-2 means a cyclotomic factor upstream.

#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"

#include <vector>

namespace salem {

/// Open interval (lo, hi) with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (!(lo < hi)) throw Error("Interval requires lo < hi");
    }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
};

/// den^deg * p(num/den), an integer with the sign of p(x).
inline Integer eval_scaled(const IntPoly& p, const Rational& x) {
    if (p.is_zero()) return 0;
    const Integer& n = x.get_num();
    const Integer& d = x.get_den();
    const auto& c = p.coeffs();
    Integer acc = c.back();
    Integer dpow = d;
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc *= n;
        mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
        if (i > 0) dpow *= d;
    }
    return acc;
}

inline Rational eval(const IntPoly& p, const Rational& x) {
    if (p.degree() <= 0) return Rational(p.coeff(0));
    return make_rational(eval_scaled(p, x), pow_of(x.get_den(), p.degree()));
}

inline int sign_at(const IntPoly& p, const Rational& x) { return sign(eval_scaled(p, x)); }

/// Sign of p(x) as x -> +inf (positive = true) or x -> -inf.
inline int sign_at_infinity(const IntPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    return (positive || p.degree() % 2 == 0) ? s : -s;
}

class SturmChain {
public:
    explicit SturmChain(std::vector<IntPoly> chain) : chain_(std::move(chain)) {}

    const std::vector<IntPoly>& polys() const { return chain_; }
    std::size_t size() const { return chain_.size(); }
    const IntPoly& operator[](std::size_t i) const { return chain_[i]; }

    int variations_at(const Rational& x) const {
        return count_variations([&](const IntPoly& p) { return sign_at(p, x); });
    }

    int variations_at_infinity(bool positive) const {
        return count_variations([&](const IntPoly& p) { return sign_at_infinity(p, positive); });
    }

private:
    template <class SignFn>
    int count_variations(SignFn&& sign_of) const {
        int last = 0;
        int changes = 0;
        for (const auto& p : chain_) {
            int s = sign_of(p);
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    std::vector<IntPoly> chain_;
};

/// Sturm chain p, p', -rem, ... with every remainder kept as a primitive
/// integer polynomial. Only positive factors are ever removed, so sign
/// variations match the textbook rational chain.
inline SturmChain sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw Error("sturm_chain: zero polynomial");
    std::vector<IntPoly> chain{p};
    IntPoly d = p.derivative();
    if (d.is_zero()) return SturmChain(std::move(chain));
    chain.push_back(d);
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem multiplies by lc(b)^(da - db + 1); undo a negative scale.
        const int power = a.degree() - b.degree() + 1;
        if (b.leading() < 0 && power % 2 == 1) r = -r;
        Integer g = r.content();
        r = r.divide_by(g);
        chain.push_back(-r);
    }
    return SturmChain(std::move(chain));
}

/// Distinct real roots of p in the open interval, via Sturm's theorem.
/// Throws EndpointRoot when p vanishes at either endpoint.
inline int count_roots(const SturmChain& chain, const Interval& iv) {
    const IntPoly& p = chain[0];
    if (sign_at(p, iv.lo) == 0 || sign_at(p, iv.hi) == 0) {
        throw EndpointRoot("polynomial " + p.to_string() + " vanishes at an endpoint of (" + iv.lo.get_str() +
                           ", " + iv.hi.get_str() + ")");
    }
    return chain.variations_at(iv.lo) - chain.variations_at(iv.hi);
}

inline int count_roots(const IntPoly& p, const Interval& iv) { return count_roots(sturm_chain(p), iv); }

/// Number of distinct real roots of p.
inline int count_real_roots(const IntPoly& p) {
    SturmChain chain = sturm_chain(p);
    return chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
}

/// Bisects iv down to width < `width`, keeping a sign change of p across the
/// returned endpoints. Midpoints are dyadic when the input endpoints are.
inline Interval refine_root(const IntPoly& p, const Interval& iv, const Rational& width) {
    Rational lo = iv.lo;
    Rational hi = iv.hi;
    int slo = sign_at(p, lo);
    const int shi = sign_at(p, hi);
    if (slo == 0 || shi == 0 || slo == shi) {
        throw NoSignChange("no sign change of " + p.to_string() + " on (" + lo.get_str() + ", " + hi.get_str() + ")");
    }
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) {
            // Exact rational root: shrink symmetrically around it.
            Rational delta = width / 4;
            if (delta > (hi - lo) / 4) delta = (hi - lo) / 4;
            lo = mid - delta;
            hi = mid + delta;
            slo = sign_at(p, lo);
            if (slo == 0 || slo == sign_at(p, hi)) {
                throw NoSignChange("root of even multiplicity at " + mid.get_str());
            }
            break;
        }
        if (sm == slo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return Interval(lo, hi);
}

/// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw Error("squarefree_part: zero polynomial");
    if (p.degree() < 1) return IntPoly::constant(1);
    IntPoly g = gcd(p, p.derivative());
    auto q = divide_exact(p.primitive_part(), g);
    if (!q) throw Error("squarefree_part: gcd does not divide input");
    return q->primitive_part();
}

}  // namespace salem
