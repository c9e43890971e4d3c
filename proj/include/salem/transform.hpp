#pragma once
// Trace transform between monic reciprocal polynomials P of degree 2d and
// monic polynomials Q of degree d, related by P(x) = x^d Q(x + 1/x).

#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace salem {

/// V_0 = 2, V_1 = x, V_{k+1} = x V_k - V_{k-1}; V_k(x + 1/x) = x^k + x^-k.
inline std::vector<IntPoly> lucas_basis(int max_k) {
    std::vector<IntPoly> v;
    v.push_back(IntPoly::constant(2));
    if (max_k >= 1) v.push_back(IntPoly::monomial(1));
    const IntPoly x = IntPoly::monomial(1);
    for (int k = 1; k < max_k; ++k) v.push_back(x * v[k] - v[k - 1]);
    return v;
}

/// Chebyshev polynomials for the interval (-2, 2) in the indexing used for
/// Salem tables: C_1 = 1, C_{k+1} = V_k for k >= 1. Entry 0 is unused (zero).
struct ChebBasis {
    std::vector<IntPoly> polys;

    explicit ChebBasis(int max_index) {
        auto v = lucas_basis(std::max(max_index - 1, 0));
        polys.resize(static_cast<std::size_t>(max_index) + 1);
        if (max_index >= 1) polys[1] = IntPoly::constant(1);
        for (int k = 2; k <= max_index; ++k) polys[k] = v[k - 1];
    }

    const IntPoly& operator[](int k) const { return polys.at(static_cast<std::size_t>(k)); }
};

inline bool is_reciprocal(const IntPoly& p) {
    const auto& c = p.coeffs();
    return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

/// Q with P(x) = x^d Q(x + 1/x), i.e. Q = C_{d+1} + c_1 C_d + ... + c_d C_1.
inline IntPoly p_to_q(const IntPoly& p) {
    if (p.degree() < 2 || p.degree() % 2 != 0) {
        throw OddDegree("p_to_q needs even degree >= 2, got " + std::to_string(p.degree()));
    }
    if (!p.is_monic()) throw NotMonic("p_to_q needs a monic polynomial: " + p.to_string());
    if (!is_reciprocal(p)) throw NotReciprocal("p_to_q needs a reciprocal polynomial: " + p.to_string());
    const int d = p.degree() / 2;
    ChebBasis basis(d + 1);
    IntPoly q;
    // c_k is the coefficient of x^{2d-k}; it multiplies C_{d+1-k}.
    for (int k = 0; k <= d; ++k) {
        const Integer& c = p.coeffs()[2 * d - k];
        if (c != 0) q += c * basis[d + 1 - k];
    }
    return q;
}

/// x^d q(x + 1/x) = sum_k b_k x^{d-k} (x^2 + 1)^k.
inline IntPoly q_to_p(const IntPoly& q) {
    if (!q.is_monic() || q.degree() < 1) throw NotMonic("q_to_p needs a monic polynomial of degree >= 1");
    const int d = q.degree();
    std::vector<Integer> out(2 * static_cast<std::size_t>(d) + 1);
    // row holds binom(k, j), the coefficients of (x^2 + 1)^k.
    std::vector<Integer> row{1};
    for (int k = 0; k <= d; ++k) {
        const Integer& b = q.coeffs()[k];
        if (b != 0) {
            for (int j = 0; j <= k; ++j) out[d - k + 2 * j] += b * row[j];
        }
        std::vector<Integer> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return IntPoly(std::move(out));
}

/// Expands the leading half 1, c_1, ..., c_d into the full palindromic
/// coefficient list (highest power first).
inline std::vector<Integer> palindrome_from_half(const std::vector<Integer>& half) {
    std::vector<Integer> full = half;
    if (half.size() >= 2) full.insert(full.end(), half.rbegin() + 1, half.rend());
    return full;
}

/// Leading half 1, c_1, ..., c_d of a reciprocal polynomial.
inline std::vector<Integer> half_coeffs(const IntPoly& p) {
    auto desc = p.descending();
    desc.resize(static_cast<std::size_t>(p.degree() / 2) + 1);
    return desc;
}

}  // namespace salem
