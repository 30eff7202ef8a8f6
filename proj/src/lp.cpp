#include "statel/lp.hpp"

#include <algorithm>
#include <cassert>

#include "statel/errors.hpp"

namespace statel {

namespace {

// Dense full-tableau simplex over exact rationals.  The systems this
// artifact generates have few rows and many columns, so a dense tableau with
// O(rows*cols) pivots is the right trade-off.
class Simplex {
public:
    Simplex(const LinearSystem& sys, const Limits& limits) : sys_(sys), limits_(limits) {
        build();
    }

    // Phase 1; returns false on infeasible.
    bool find_feasible() {
        if (constant_row_violated_) return false;
        install_phase1_objective();
        run();
        if (obj_value_ != Rational(0)) return false;  // artificials stuck > 0
        remove_artificials();
        return true;
    }

    // Phase 2 over the system objective.  Pre: find_feasible() returned true.
    LpStatus improve() {
        install_phase2_objective();
        return run();
    }

    std::vector<Rational> extract_point() const {
        std::vector<Rational> cols(num_cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) cols[basis_[i]] = rhs_[i];
        std::vector<Rational> out(sys_.vars.size());
        for (std::size_t v = 0; v < sys_.vars.size(); ++v) {
            out[v] = cols[pos_col_[v]];
            if (neg_col_[v] >= 0) out[v] -= cols[neg_col_[v]];
        }
        return out;
    }

    std::vector<Rational> extract_ray() const {
        std::vector<Rational> cols(num_cols_);
        cols[unbounded_col_] = Rational(1);
        for (std::size_t i = 0; i < rows_.size(); ++i) cols[basis_[i]] = -col_cache_[i];
        std::vector<Rational> out(sys_.vars.size());
        for (std::size_t v = 0; v < sys_.vars.size(); ++v) {
            out[v] = cols[pos_col_[v]];
            if (neg_col_[v] >= 0) out[v] -= cols[neg_col_[v]];
        }
        return out;
    }

private:
    void build() {
        // columns: structural (free vars split into x+ - x-), then slacks,
        // then artificials
        pos_col_.resize(sys_.vars.size());
        neg_col_.assign(sys_.vars.size(), -1);
        int col = 0;
        for (std::size_t v = 0; v < sys_.vars.size(); ++v) {
            pos_col_[v] = col++;
            if (!sys_.vars[v].nonneg) neg_col_[v] = col++;
        }
        num_structural_ = col;

        // keep only non-trivial rows; a single-variable row c*x >= 0 with
        // c > 0 on a nonnegative variable (or <= 0 with c < 0) restates the
        // variable bound
        std::vector<const LinearConstraint*> kept;
        for (const LinearConstraint& row : sys_.rows) {
            if (row.coeffs.empty()) {
                bool ok = row.rel == Relation::Le   ? Rational(0) <= row.rhs
                          : row.rel == Relation::Ge ? Rational(0) >= row.rhs
                                                    : row.rhs.is_zero();
                if (!ok) constant_row_violated_ = true;
                continue;
            }
            if (row.coeffs.size() == 1 && row.rhs.is_zero()) {
                const auto& [v, c] = row.coeffs.front();
                if (sys_.vars[v].nonneg && ((row.rel == Relation::Ge && c.sign() > 0) ||
                                            (row.rel == Relation::Le && c.sign() < 0)))
                    continue;
            }
            kept.push_back(&row);
        }

        const std::size_t m = kept.size();
        int slack_cols = 0;
        for (const LinearConstraint* row : kept)
            if (row->rel != Relation::Eq) ++slack_cols;
        num_cols_ = num_structural_ + slack_cols;  // artificials appended later

        rows_.assign(m, std::vector<Rational>(num_structural_ + slack_cols));
        rhs_.assign(m, Rational(0));

        int next_slack = num_structural_;
        std::vector<int> slack_of(m, -1);
        for (std::size_t i = 0; i < m; ++i) {
            const LinearConstraint& row = *kept[i];
            for (const auto& [v, c] : row.coeffs) {
                rows_[i][pos_col_[v]] += c;
                if (neg_col_[v] >= 0) rows_[i][neg_col_[v]] -= c;
            }
            rhs_[i] = row.rhs;
            if (row.rel != Relation::Eq) {
                slack_of[i] = next_slack++;
                rows_[i][slack_of[i]] = row.rel == Relation::Le ? Rational(1) : Rational(-1);
            }
            if (rhs_[i].sign() < 0) {
                for (Rational& a : rows_[i]) a = -a;
                rhs_[i] = -rhs_[i];
            }
        }

        // initial basis: slack where its coefficient is +1 after sign
        // normalization, artificial otherwise
        basis_.assign(m, -1);
        for (std::size_t i = 0; i < m; ++i) {
            if (slack_of[i] >= 0 && rows_[i][slack_of[i]] == Rational(1)) {
                basis_[i] = slack_of[i];
            } else {
                int art = num_cols_ + static_cast<int>(artificial_rows_.size());
                artificial_rows_.push_back(static_cast<int>(i));
                basis_[i] = art;
            }
        }
        first_artificial_ = num_cols_;
        num_cols_ += static_cast<int>(artificial_rows_.size());
        for (std::size_t i = 0; i < m; ++i) rows_[i].resize(num_cols_, Rational(0));
        for (std::size_t a = 0; a < artificial_rows_.size(); ++a)
            rows_[artificial_rows_[a]][first_artificial_ + static_cast<int>(a)] = Rational(1);
    }

    void install_phase1_objective() {
        // minimize the sum of artificials: reduced costs = cost row minus the
        // rows whose basic variable is artificial.  obj_value_ holds -z, the
        // convention the pivot update maintains.
        obj_.assign(num_cols_, Rational(0));
        obj_value_ = Rational(0);
        for (int col = first_artificial_; col < num_cols_; ++col) obj_[col] = Rational(1);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < first_artificial_) continue;
            for (int j = 0; j < num_cols_; ++j) obj_[j] -= rows_[i][j];
            obj_value_ -= rhs_[i];
        }
        phase1_ = true;
    }

    void install_phase2_objective() {
        obj_.assign(num_cols_, Rational(0));
        obj_value_ = Rational(0);
        const Objective& objective = *sys_.objective;
        const Rational sign = objective.maximize ? Rational(-1) : Rational(1);
        for (const auto& [v, c] : objective.coeffs) {
            obj_[pos_col_[v]] += sign * c;
            if (neg_col_[v] >= 0) obj_[neg_col_[v]] -= sign * c;
        }
        // price out the basic columns
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational c = obj_[basis_[i]];
            if (c.is_zero()) continue;
            for (int j = 0; j < num_cols_; ++j) obj_[j] -= c * rows_[i][j];
            obj_value_ -= c * rhs_[i];
        }
        phase1_ = false;
    }

    // Bland: entering = lowest-index column with negative reduced cost;
    // leaving = min ratio, ties broken by lowest basic variable index.
    LpStatus run() {
        while (true) {
            if (++pivots_ > limits_.max_pivots)
                throw CapacityExceeded("simplex pivot limit exceeded");
            int enter = -1;
            for (int j = 0; j < num_cols_; ++j) {
                if (phase1_ == false && j >= first_artificial_) break;  // artificials retired
                if (obj_[j].sign() < 0 && !column_basic(j)) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return LpStatus::Optimal;

            int leave = -1;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter].sign() <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) {
                unbounded_col_ = enter;
                col_cache_.resize(rows_.size());
                for (std::size_t i = 0; i < rows_.size(); ++i) col_cache_[i] = rows_[i][enter];
                return LpStatus::Unbounded;
            }
            pivot(leave, enter);
        }
    }

    bool column_basic(int j) const {
        return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
    }

    void pivot(int row, int col) {
        Rational inv = Rational(1) / rows_[row][col];
        for (Rational& a : rows_[row]) a *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            Rational f = rows_[i][col];
            if (f.is_zero()) continue;
            for (int j = 0; j < num_cols_; ++j)
                if (!rows_[row][j].is_zero()) rows_[i][j] -= f * rows_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        Rational f = obj_[col];
        if (!f.is_zero()) {
            for (int j = 0; j < num_cols_; ++j)
                if (!rows_[row][j].is_zero()) obj_[j] -= f * rows_[row][j];
            obj_value_ -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    // After a zero-value phase 1, pivot artificials out of the basis; rows
    // where that is impossible are redundant and get removed.
    void remove_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            int col = -1;
            for (int j = 0; j < first_artificial_; ++j) {
                if (!rows_[i][j].is_zero() && !column_basic(j)) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                pivot(static_cast<int>(i), col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(i));
                rhs_.erase(rhs_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
            }
        }
        // artificial columns are left in place but barred from entering
        // (phase 2 never scans past first_artificial_)
    }

    const LinearSystem& sys_;
    const Limits& limits_;

    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<int> basis_;
    std::vector<Rational> obj_;
    Rational obj_value_;
    std::vector<int> pos_col_;
    std::vector<int> neg_col_;
    std::vector<int> artificial_rows_;
    int num_structural_ = 0;
    int num_cols_ = 0;
    int first_artificial_ = 0;
    bool constant_row_violated_ = false;
    bool phase1_ = true;
    long pivots_ = 0;
    int unbounded_col_ = -1;
    std::vector<Rational> col_cache_;
};

Rational evaluate(const std::vector<std::pair<int, Rational>>& coeffs,
                  const std::vector<Rational>& point) {
    Rational v(0);
    for (const auto& [j, c] : coeffs) v += c * point[static_cast<std::size_t>(j)];
    return v;
}

bool row_satisfied(const LinearConstraint& row, const std::vector<Rational>& point) {
    Rational lhs = evaluate(row.coeffs, point);
    switch (row.rel) {
        case Relation::Le: return lhs <= row.rhs;
        case Relation::Eq: return lhs == row.rhs;
        case Relation::Ge: return lhs >= row.rhs;
    }
    return false;
}

void verify_point(const LinearSystem& sys, const std::vector<Rational>& point) {
    for (const LinearConstraint& row : sys.rows)
        if (!row_satisfied(row, point))
            throw Error("simplex returned a point violating row '" + row.label + "'");
    for (std::size_t v = 0; v < sys.vars.size(); ++v)
        if (sys.vars[v].nonneg && point[v].sign() < 0)
            throw Error("simplex returned a negative value for " + sys.vars[v].name);
}

}  // namespace

LpOutcome lp_feasible(const LinearSystem& sys, const Limits& limits) {
    Simplex solver(sys, limits);
    LpOutcome out;
    if (!solver.find_feasible()) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    out.status = LpStatus::Feasible;
    out.point = solver.extract_point();
    verify_point(sys, out.point);
    return out;
}

LpOutcome lp_optimize(const LinearSystem& sys, const Limits& limits) {
    if (!sys.objective) throw Error("lp_optimize: system has no objective");
    Simplex solver(sys, limits);
    LpOutcome out;
    if (!solver.find_feasible()) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    LpStatus st = solver.improve();
    if (st == LpStatus::Unbounded) {
        out.status = LpStatus::Unbounded;
        out.ray = solver.extract_ray();
        return out;
    }
    out.status = LpStatus::Optimal;
    out.point = solver.extract_point();
    verify_point(sys, out.point);
    out.value = evaluate(sys.objective->coeffs, out.point);
    return out;
}

std::vector<mpz_class> integerize(const std::vector<Rational>& point, const LinearSystem& sys) {
    for (const LinearConstraint& row : sys.rows)
        if (row.scale_class() == ScaleClass::None)
            throw ScaleClassViolation("row '" + row.label + "' (" + row.rhs.str() +
                                      " rhs) is not scale-robust");

    mpz_class lcm(1);
    for (const Rational& v : point) {
        if (v.sign() < 0) throw Error("integerize: point has a negative coordinate");
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    }

    std::vector<mpz_class> out(point.size());
    std::vector<Rational> scaled(point.size());
    Rational factor(lcm, mpz_class(1));
    for (std::size_t i = 0; i < point.size(); ++i) {
        scaled[i] = point[i] * factor;
        assert(scaled[i].den() == 1);
        out[i] = scaled[i].num();
    }
    for (const LinearConstraint& row : sys.rows)
        if (!row_satisfied(row, scaled))
            throw Error("integerize: scaled point violates row '" + row.label + "'");
    return out;
}

}  // namespace statel
