#pragma once
// Separator sampling and the integer feasibility system over a_0..a_{d-1}.

#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"
#include "salem/roots.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace salem {

/// Upper bound eta on the Salem number and its trace-side image R = eta + 1/eta.
class Threshold {
public:
    explicit Threshold(Rational eta) : eta_(std::move(eta)) {
        if (!(eta_ > 1)) throw InvalidConfig("threshold must exceed 1, got " + eta_.get_str());
        // eta lies below the plastic constant iff x^3 - x - 1 < 0 there (the
        // cubic is increasing on x > 1 and eta is rational, so never a root).
        if (sign_at(IntPoly::from_descending({1, 0, -1, -1}), eta_) >= 0) {
            throw InvalidConfig("threshold " + eta_.get_str() + " is not below the plastic constant");
        }
        r_ = eta_ + 1 / eta_;
    }

    const Rational& eta() const { return eta_; }
    /// eta + 1/eta
    const Rational& r() const { return r_; }

private:
    Rational eta_;
    Rational r_;
};

inline const Rational& default_eta() {
    static const Rational eta(49, 37);
    return eta;
}

/// Interior separators -2 < beta_1 < ... < beta_{d-2} < 2 of one trial.
struct SeparatorTuple {
    int d = 0;
    std::vector<Rational> betas;

    /// (-2, beta_1, ..., beta_{d-2}, 2, R)
    std::vector<Rational> points(const Threshold& thr) const {
        std::vector<Rational> pts;
        pts.reserve(betas.size() + 3);
        pts.emplace_back(-2);
        pts.insert(pts.end(), betas.begin(), betas.end());
        pts.emplace_back(2);
        pts.push_back(thr.r());
        return pts;
    }
};

/// d-2 distinct grid points k / 2^grid_log2 drawn uniformly from (-2, 2), sorted.
template <class Rng>
SeparatorTuple sample_separators(int d, Rng& rng, int grid_log2 = 16) {
    if (d < 2) throw InvalidConfig("sample_separators needs d >= 2");
    const long den = 1L << grid_log2;
    std::uniform_int_distribution<long> pick(-2 * den + 1, 2 * den - 1);
    std::set<long> drawn;
    while (static_cast<int>(drawn.size()) < d - 2) drawn.insert(pick(rng));
    SeparatorTuple sep;
    sep.d = d;
    sep.betas.reserve(drawn.size());
    for (long k : drawn) sep.betas.push_back(make_rational(k, den));
    return sep;
}

/// Integer linear system  sum_i rows[j].coeffs[i] * a_i >= rows[j].bound
/// with lower[i] <= a_i <= upper[i].
struct ConstraintSystem {
    struct Row {
        std::vector<Integer> coeffs;
        Integer bound;
    };

    int d = 0;
    std::vector<Row> rows;
    std::vector<Integer> lower;
    std::vector<Integer> upper;

    std::size_t num_vars() const { return lower.size(); }

    bool satisfied_by(const std::vector<Integer>& a) const {
        if (a.size() != num_vars()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < lower[i] || a[i] > upper[i]) return false;
        }
        for (const auto& row : rows) {
            Integer lhs = 0;
            for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(lhs.get_mpz_t(), row.coeffs[i].get_mpz_t(), a[i].get_mpz_t());
            if (lhs < row.bound) return false;
        }
        return true;
    }
};

/// |a_i| <= ceil(binom(d, d-i) R^{d-i}) for a monic degree-d polynomial with all roots in (-R, R).
inline std::vector<Integer> vieta_bounds(int d, const Rational& r) {
    std::vector<Integer> b(static_cast<std::size_t>(d));
    Rational rp = 1;
    for (int k = 1; k <= d; ++k) {
        rp *= r;
        b[d - k] = ceil_of(binomial(d, k) * rp);
    }
    return b;
}

/// Sign-alternation rows for q(x) = x^d + sum a_i x^i at the separator points:
/// (-1)^{d-j} q(s_j) > 0, cleared by den(s_j)^d and tightened to >= 1.
inline ConstraintSystem build_system(const SeparatorTuple& sep, const Threshold& thr) {
    const int d = sep.d;
    if (static_cast<int>(sep.betas.size()) != d - 2) throw Error("build_system: separator tuple has wrong length");
    ConstraintSystem sys;
    sys.d = d;
    const auto pts = sep.points(thr);
    for (int j = 0; j <= d; ++j) {
        const Integer& num = pts[j].get_num();
        const Integer& den = pts[j].get_den();
        const int sgn = ((d - j) % 2 == 0) ? 1 : -1;
        ConstraintSystem::Row row;
        row.coeffs.resize(static_cast<std::size_t>(d));
        // coefficient of a_i: num^i den^{d-i}
        Integer np = 1;
        for (int i = 0; i < d; ++i) {
            row.coeffs[i] = sgn * np * pow_of(den, static_cast<unsigned long>(d - i));
            np *= num;
        }
        // np is now num^d, the monic term, which moves to the bound side.
        row.bound = 1 - sgn * np;
        sys.rows.push_back(std::move(row));
    }
    auto b = vieta_bounds(d, thr.r());
    sys.upper = b;
    sys.lower.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) sys.lower[i] = -b[i];
    return sys;
}

}  // namespace salem
