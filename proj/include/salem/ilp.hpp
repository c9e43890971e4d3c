#pragma once
// Exact integer feasibility for ConstraintSystem.
//
// The LP relaxation is kept in a bounded-variable tableau: every row j gets a
// slack s_j = A_j . a with the bound s_j >= b_j, and each structural variable
// carries its box. Feasibility is restored by pivoting a violated basic
// variable against the lowest-indexed nonbasic variable that can move it
// (Bland's rule), which terminates without an objective. Branch-and-bound
// tightens structural bounds in place and re-checks from the current basis.

#include "salem/constraints.hpp"
#include "salem/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace salem {

class LpRelaxation {
public:
    explicit LpRelaxation(const ConstraintSystem& sys)
        : n_(sys.num_vars()), m_(sys.rows.size()), lower_(n_ + m_), upper_(n_ + m_), value_(n_ + m_),
          is_basic_(n_ + m_, false), index_(n_ + m_), basic_(m_), nonbasic_(n_),
          tableau_(m_, std::vector<Rational>(n_)) {
        for (std::size_t i = 0; i < n_; ++i) {
            lower_[i] = Rational(sys.lower[i]);
            upper_[i] = Rational(sys.upper[i]);
            if (*lower_[i] > 0) {
                value_[i] = *lower_[i];
            } else if (*upper_[i] < 0) {
                value_[i] = *upper_[i];
            }
            nonbasic_[i] = i;
            index_[i] = i;
        }
        for (std::size_t j = 0; j < m_; ++j) {
            const std::size_t var = n_ + j;
            lower_[var] = Rational(sys.rows[j].bound);
            is_basic_[var] = true;
            index_[var] = j;
            basic_[j] = var;
            Rational v = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                tableau_[j][i] = Rational(sys.rows[j].coeffs[i]);
                v += tableau_[j][i] * value_[i];
            }
            value_[var] = v;
        }
    }

    std::size_t num_vars() const { return n_; }
    const Rational& value(std::size_t var) const { return value_[var]; }
    const Rational& lower(std::size_t var) const { return *lower_[var]; }
    const Rational& upper(std::size_t var) const { return *upper_[var]; }

    std::vector<Rational> point() const { return {value_.begin(), value_.begin() + static_cast<long>(n_)}; }

    /// Replaces the box of structural variable `var`. The caller keeps lo <= hi.
    void set_bounds(std::size_t var, const Rational& lo, const Rational& hi) {
        lower_[var] = lo;
        upper_[var] = hi;
        if (!is_basic_[var]) {
            if (value_[var] < lo) {
                shift_nonbasic(var, lo);
            } else if (value_[var] > hi) {
                shift_nonbasic(var, hi);
            }
        }
    }

    /// Moves the assignment to a point satisfying every row and bound, or
    /// returns false when the current bounds admit no rational point.
    bool check() {
        while (true) {
            std::size_t row = m_;
            std::size_t best_var = n_ + m_;
            for (std::size_t r = 0; r < m_; ++r) {
                const std::size_t b = basic_[r];
                if (b < best_var && violated(b)) {
                    best_var = b;
                    row = r;
                }
            }
            if (row == m_) return true;

            const bool raise = lower_[best_var] && value_[best_var] < *lower_[best_var];
            std::size_t col = n_;
            std::size_t entering = n_ + m_;
            for (std::size_t c = 0; c < n_; ++c) {
                const std::size_t k = nonbasic_[c];
                if (k >= entering) continue;
                const int s = sgn(tableau_[row][c]);
                if (s == 0) continue;
                const bool increase = raise ? s > 0 : s < 0;
                const bool can_move = increase ? (!upper_[k] || value_[k] < *upper_[k])
                                               : (!lower_[k] || value_[k] > *lower_[k]);
                if (can_move) {
                    entering = k;
                    col = c;
                }
            }
            if (col == n_) return false;
            ++pivots_;
            pivot_and_update(row, col, raise ? *lower_[best_var] : *upper_[best_var]);
        }
    }

    std::size_t pivots() const { return pivots_; }

private:
    bool violated(std::size_t var) const {
        return (lower_[var] && value_[var] < *lower_[var]) || (upper_[var] && value_[var] > *upper_[var]);
    }

    void shift_nonbasic(std::size_t var, const Rational& target) {
        const std::size_t c = index_[var];
        Rational delta = target - value_[var];
        for (std::size_t r = 0; r < m_; ++r) {
            if (sgn(tableau_[r][c]) != 0) value_[basic_[r]] += tableau_[r][c] * delta;
        }
        value_[var] = target;
    }

    void pivot_and_update(std::size_t row, std::size_t col, const Rational& target) {
        const std::size_t leaving = basic_[row];
        const std::size_t entering = nonbasic_[col];
        Rational theta = (target - value_[leaving]) / tableau_[row][col];
        value_[leaving] = target;
        value_[entering] += theta;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r != row && sgn(tableau_[r][col]) != 0) value_[basic_[r]] += tableau_[r][col] * theta;
        }
        pivot(row, col);
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tableau_[row];
        const Rational inv = 1 / pr[col];
        for (std::size_t j = 0; j < n_; ++j) {
            if (j != col) pr[j] *= -inv;
        }
        pr[col] = inv;
        Rational t;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row) continue;
            auto& cur = tableau_[r];
            if (sgn(cur[col]) == 0) continue;
            t = cur[col];
            for (std::size_t j = 0; j < n_; ++j) {
                if (j != col && sgn(pr[j]) != 0) cur[j] += t * pr[j];
            }
            cur[col] = t * inv;
        }
        const std::size_t leaving = basic_[row];
        const std::size_t entering = nonbasic_[col];
        basic_[row] = entering;
        nonbasic_[col] = leaving;
        is_basic_[entering] = true;
        is_basic_[leaving] = false;
        index_[entering] = row;
        index_[leaving] = col;
    }

    std::size_t n_;
    std::size_t m_;
    std::vector<std::optional<Rational>> lower_;
    std::vector<std::optional<Rational>> upper_;
    std::vector<Rational> value_;
    std::vector<bool> is_basic_;
    std::vector<std::size_t> index_;
    std::vector<std::size_t> basic_;
    std::vector<std::size_t> nonbasic_;
    std::vector<std::vector<Rational>> tableau_;
    std::size_t pivots_ = 0;
};

/// A rational point satisfying the rows within the given box, if one exists.
inline std::optional<std::vector<Rational>> lp_feasible(const ConstraintSystem& sys) {
    LpRelaxation lp(sys);
    if (!lp.check()) return std::nullopt;
    return lp.point();
}

struct FeasibilityResult {
    std::optional<std::vector<Integer>> assignment;
    std::size_t nodes = 0;
    std::size_t max_depth = 0;

    bool feasible() const { return assignment.has_value(); }
};

namespace detail {

class BranchAndBound {
public:
    explicit BranchAndBound(const ConstraintSystem& sys) : lp_(sys) {}

    FeasibilityResult run() {
        FeasibilityResult out;
        if (dfs(0)) out.assignment = std::move(solution_);
        out.nodes = nodes_;
        out.max_depth = max_depth_;
        return out;
    }

private:
    bool dfs(std::size_t depth) {
        ++nodes_;
        if (depth > max_depth_) max_depth_ = depth;
        if (!lp_.check()) return false;

        // Most fractional variable; ties go to the lowest index.
        const Rational half(1, 2);
        std::optional<std::size_t> branch_var;
        Rational best_dist = -1;
        for (std::size_t i = 0; i < lp_.num_vars(); ++i) {
            const Rational& v = lp_.value(i);
            if (v.get_den() == 1) continue;
            Rational frac = v - Rational(floor_of(v));
            Rational dist = frac < half ? frac : 1 - frac;
            if (dist > best_dist) {
                best_dist = dist;
                branch_var = i;
            }
        }
        if (!branch_var) {
            solution_.clear();
            for (std::size_t i = 0; i < lp_.num_vars(); ++i) solution_.push_back(lp_.value(i).get_num());
            return true;
        }

        const std::size_t i = *branch_var;
        const Rational lo = lp_.lower(i);
        const Rational hi = lp_.upper(i);
        const Rational v = lp_.value(i);
        const Rational down(floor_of(v));
        const Rational up = down + 1;
        const bool down_first = v - down <= half;
        for (int child = 0; child < 2; ++child) {
            const bool go_down = (child == 0) == down_first;
            const Rational& new_lo = go_down ? lo : up;
            const Rational& new_hi = go_down ? down : hi;
            if (new_lo > new_hi) continue;
            lp_.set_bounds(i, new_lo, new_hi);
            if (dfs(depth + 1)) return true;
            lp_.set_bounds(i, lo, hi);
        }
        return false;
    }

    LpRelaxation lp_;
    std::vector<Integer> solution_;
    std::size_t nodes_ = 0;
    std::size_t max_depth_ = 0;
};

}  // namespace detail

/// Depth-first branch-and-bound over the integer boxes. Infeasible means no
/// integer point in the boxes satisfies every row.
inline FeasibilityResult ilp_feasible(const ConstraintSystem& sys) {
    for (std::size_t i = 0; i < sys.num_vars(); ++i) {
        if (sys.lower[i] > sys.upper[i]) return {};
    }
    FeasibilityResult res = detail::BranchAndBound(sys).run();
    if (res.assignment && !sys.satisfied_by(*res.assignment)) {
        throw Error("ilp_feasible: assignment fails exact re-check");
    }
    return res;
}

}  // namespace salem
