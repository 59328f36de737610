#include "sprp/mip/simplex.hpp"

#include <stdexcept>

namespace sprp::mip {

namespace {
enum class Where : unsigned char { Basic, AtLower, AtUpper };
}

struct SimplexEngine::Impl {
    const Model& model;
    std::size_t n = 0;  // structural columns
    std::size_t m = 0;  // rows

    std::vector<std::vector<Rat>> tab_;  // current dictionary over all columns
    std::vector<Rat> rhs_;
    std::vector<Rat> lb_, ub_, value_;
    std::vector<Where> where_;
    std::vector<int> basis_;
    std::vector<Rat> cost_;  // reduced-cost row for the model objective
    std::int64_t pivots_ = 0;
    int stall_ = 0;
    bool ready_ = false;  // tableau holds a dual-feasible optimal basis

    Rat scratch_a_, scratch_b_, scratch_c_;

    explicit Impl(const Model& mdl) : model(mdl) {
        n = model.variables.size();
        m = model.constraints.size();
    }

    std::size_t cols() const { return lb_.size(); }
    static int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

    // |x| <=> |y| without allocating: |n_x| d_y <=> |n_y| d_x.
    static int cmp_abs(const Rat& x, const Rat& y) {
        static thread_local mpz_class a, b;
        mpz_mul(a.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(y.get_mpq_t()));
        mpz_mul(b.get_mpz_t(), mpq_numref(y.get_mpq_t()), mpq_denref(x.get_mpq_t()));
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    }

    // Slack box of row i for the current structural bounds.
    void slack_box(std::size_t i, Rat& lo, Rat& hi, bool& impossible) const {
        const Constraint& c = model.constraints[i];
        Rat amin = 0, amax = 0;
        for (const auto& t : c.terms) {
            if (sgn(t.coeff) == 0) continue;
            if (t.coeff > 0) {
                amin += t.coeff * lb_[t.var];
                amax += t.coeff * ub_[t.var];
            } else {
                amin += t.coeff * ub_[t.var];
                amax += t.coeff * lb_[t.var];
            }
        }
        lo = 0;
        hi = 0;
        impossible = false;
        switch (c.sense) {
            case Sense::LE:
                hi = std::max(Rat(0), Rat(c.rhs - amin));
                impossible = c.rhs < amin;
                break;
            case Sense::GE:
                lo = std::min(Rat(0), Rat(c.rhs - amax));
                impossible = c.rhs > amax;
                break;
            case Sense::EQ:
                impossible = c.rhs < amin || c.rhs > amax;
                break;
        }
    }

    // Builds the tableau at the current structural bounds and runs the
    // primal two-phase method. Returns false on infeasibility.
    bool cold_start() {
        ready_ = false;
        lb_.resize(n);
        ub_.resize(n);
        tab_.assign(m, std::vector<Rat>(n, Rat(0)));
        rhs_.assign(m, Rat(0));
        value_.assign(n, Rat(0));
        where_.assign(n, Where::AtLower);
        bool impossible_row = false;
        for (std::size_t i = 0; i < m; ++i) {
            const Constraint& c = model.constraints[i];
            for (const auto& t : c.terms) tab_[i][t.var] += t.coeff;
            rhs_[i] = c.rhs;
            Rat lo, hi;
            bool impossible;
            slack_box(i, lo, hi, impossible);
            impossible_row = impossible_row || impossible;
            lb_.push_back(lo);
            ub_.push_back(hi);
            value_.push_back(Rat(0));
            where_.push_back(Where::Basic);
        }
        if (impossible_row) return false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) tab_[i].push_back(Rat(i == k ? 1 : 0));

        // Start: structurals nonbasic at their lower bound, slacks basic.
        basis_.resize(m);
        for (std::size_t j = 0; j < n; ++j) value_[j] = lb_[j];
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t s = n + i;
            basis_[i] = static_cast<int>(s);
            Rat v = rhs_[i];
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(tab_[i][j]) != 0) v -= tab_[i][j] * value_[j];
            value_[s] = v;
        }
        if (!phase_one()) return false;
        phase_two_costs();
        primal_optimize();
        ready_ = true;
        return true;
    }

    // Adds artificial columns so the initial basis sits inside its boxes,
    // then minimizes their sum.
    bool phase_one() {
        std::vector<std::size_t> artificial;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t s = basis_[i];
            if (value_[s] >= lb_[s] && value_[s] <= ub_[s]) continue;
            Rat target = value_[s] > ub_[s] ? ub_[s] : lb_[s];
            Rat gap = value_[s] - target;  // positive iff above the box
            int sign = gap > 0 ? 1 : -1;
            std::size_t a = cols();
            for (std::size_t r = 0; r < m; ++r) tab_[r].push_back(Rat(r == i ? sign : 0));
            // Keep every basic column a positive unit vector: a negative
            // artificial flips its whole row instead.
            if (sign < 0)
                for (auto& v : tab_[i])
                    if (sgn(v) != 0) v = -v;
            lb_.push_back(Rat(0));
            ub_.push_back(sign > 0 ? gap : -gap);
            value_.push_back(sign > 0 ? gap : -gap);
            where_.push_back(Where::Basic);
            where_[s] = value_[s] > ub_[s] ? Where::AtUpper : Where::AtLower;
            value_[s] = target;
            basis_[i] = static_cast<int>(a);
            artificial.push_back(a);
        }
        if (artificial.empty()) {
            cost_.assign(cols(), Rat(0));
            return true;
        }
        cost_.assign(cols(), Rat(0));
        for (std::size_t a : artificial) cost_[a] = 1;
        price_out_basics();
        primal_optimize();
        Rat infeasibility = 0;
        for (std::size_t a : artificial) infeasibility += value_[a];
        if (sgn(infeasibility) != 0) return false;
        for (std::size_t a : artificial) {
            lb_[a] = 0;
            ub_[a] = 0;
        }
        return true;
    }

    void phase_two_costs() {
        cost_.assign(cols(), Rat(0));
        for (const auto& t : model.objective) cost_[t.var] += t.coeff;
        price_out_basics();
    }

    // Makes the cost row consistent with the basis (zero on basic columns).
    void price_out_basics() {
        for (std::size_t i = 0; i < m; ++i) {
            Rat c = cost_[basis_[i]];
            if (sgn(c) == 0) continue;
            for (std::size_t j = 0; j < cols(); ++j)
                if (sgn(tab_[i][j]) != 0) cost_[j] -= c * tab_[i][j];
        }
    }

    bool movable(std::size_t j) const { return where_[j] != Where::Basic && lb_[j] != ub_[j]; }

    bool eligible(std::size_t j) const {
        if (!movable(j)) return false;
        int s = sgn(cost_[j]);
        return where_[j] == Where::AtLower ? s < 0 : s > 0;
    }

    void primal_optimize() {
        const int kStallLimit = 40;
        while (true) {
            std::size_t enter = cols();
            if (stall_ >= kStallLimit) {  // Bland's rule while stalled
                for (std::size_t j = 0; j < cols(); ++j)
                    if (eligible(j)) {
                        enter = j;
                        break;
                    }
            } else {
                const Rat* best = nullptr;
                for (std::size_t j = 0; j < cols(); ++j) {
                    if (!eligible(j)) continue;
                    if (!best || cmp_abs(cost_[j], *best) > 0) {
                        best = &cost_[j];
                        enter = j;
                    }
                }
            }
            if (enter == cols()) return;  // optimal

            int dir = where_[enter] == Where::AtLower ? 1 : -1;
            // Ratio test: largest step t >= 0 keeping everything boxed.
            Rat& step = scratch_a_;
            Rat limit = ub_[enter] - lb_[enter];  // bound-flip step
            int leave_row = -1;
            Where leave_to = Where::AtLower;
            for (std::size_t i = 0; i < m; ++i) {
                const Rat& a = tab_[i][enter];
                if (sgn(a) == 0) continue;
                std::size_t b = basis_[i];
                // The basic value moves by -dir * a * t.
                int movement = -dir * sgn(a);
                if (movement > 0)
                    mpq_sub(step.get_mpq_t(), ub_[b].get_mpq_t(), value_[b].get_mpq_t());
                else
                    mpq_sub(step.get_mpq_t(), value_[b].get_mpq_t(), lb_[b].get_mpq_t());
                mpq_div(step.get_mpq_t(), step.get_mpq_t(), a.get_mpq_t());
                mpq_abs(step.get_mpq_t(), step.get_mpq_t());
                int cmp = mpq_cmp(step.get_mpq_t(), limit.get_mpq_t());
                bool tighter = cmp < 0;
                // Ties to the smallest variable index (Bland-safe).
                if (cmp == 0 && leave_row >= 0 && b < static_cast<std::size_t>(basis_[leave_row]))
                    tighter = true;
                if (tighter) {
                    mpq_swap(limit.get_mpq_t(), step.get_mpq_t());
                    leave_row = static_cast<int>(i);
                    leave_to = movement > 0 ? Where::AtUpper : Where::AtLower;
                }
            }

            stall_ = sgn(limit) == 0 ? stall_ + 1 : 0;
            if (dir < 0) mpq_neg(limit.get_mpq_t(), limit.get_mpq_t());
            if (leave_row < 0) {
                // Bound flip: the entering variable crosses its box.
                shift_basics(enter, limit);
                where_[enter] = where_[enter] == Where::AtLower ? Where::AtUpper : Where::AtLower;
                value_[enter] = where_[enter] == Where::AtLower ? lb_[enter] : ub_[enter];
                continue;
            }
            pivot(static_cast<std::size_t>(leave_row), enter, limit, leave_to);
        }
    }

    // value[basic(i)] -= tab[i][enter] * delta for every row.
    void shift_basics(std::size_t enter, const Rat& delta) {
        if (sgn(delta) == 0) return;
        mpq_ptr tmp = scratch_b_.get_mpq_t();
        for (std::size_t i = 0; i < m; ++i) {
            const Rat& a = tab_[i][enter];
            if (sgn(a) == 0) continue;
            mpq_mul(tmp, a.get_mpq_t(), delta.get_mpq_t());
            mpq_sub(value_[basis_[i]].get_mpq_t(), value_[basis_[i]].get_mpq_t(), tmp);
        }
    }

    void pivot(std::size_t row, std::size_t enter, const Rat& delta, Where leave_to) {
        ++pivots_;
        std::size_t leave = basis_[row];
        shift_basics(enter, delta);
        value_[enter] = (where_[enter] == Where::AtLower ? lb_[enter] : ub_[enter]) + delta;
        where_[enter] = Where::Basic;
        where_[leave] = leave_to;
        value_[leave] = leave_to == Where::AtLower ? lb_[leave] : ub_[leave];
        basis_[row] = static_cast<int>(enter);

        // Row reduction, allocation-free: eliminate the entering column from
        // every other row using the scaled pivot row.
        std::vector<Rat>& prow = tab_[row];
        if (mpq_cmp_si(prow[enter].get_mpq_t(), 1, 1) != 0) {
            Rat inv = prow[enter];
            mpq_inv(inv.get_mpq_t(), inv.get_mpq_t());
            for (auto& v : prow)
                if (sgn(v) != 0) mpq_mul(v.get_mpq_t(), v.get_mpq_t(), inv.get_mpq_t());
        }
        static thread_local std::vector<std::uint32_t> pattern;
        pattern.clear();
        for (std::size_t j = 0; j < cols(); ++j)
            if (sgn(prow[j]) != 0) pattern.push_back(static_cast<std::uint32_t>(j));

        mpq_ptr tmp = scratch_b_.get_mpq_t();
        auto eliminate = [&](std::vector<Rat>& target) {
            mpq_set(scratch_c_.get_mpq_t(), target[enter].get_mpq_t());
            mpq_srcptr f = scratch_c_.get_mpq_t();
            if (mpq_sgn(f) == 0) return;
            for (std::uint32_t j : pattern) {
                mpq_mul(tmp, f, prow[j].get_mpq_t());
                mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), tmp);
            }
        };
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            eliminate(tab_[i]);
        }
        eliminate(cost_);
    }

    // Moves the boxes to the given bounds; nonbasic variables follow their
    // bound, which keeps the dictionary consistent and dual feasible.
    void apply_bounds(const std::vector<Rat>& lower, const std::vector<Rat>& upper) {
        for (std::size_t j = 0; j < n; ++j) {
            lb_[j] = lower[j];
            ub_[j] = upper[j];
        }
        for (std::size_t i = 0; i < m; ++i) {
            Rat lo, hi;
            bool impossible;
            slack_box(i, lo, hi, impossible);
            // An impossible row surfaces as dual infeasibility below.
            lb_[n + i] = lo;
            ub_[n + i] = hi;
        }
        Rat& delta = scratch_a_;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (where_[j] == Where::Basic) continue;
            if (lb_[j] == ub_[j]) {
                // One-point box: both sides coincide, AtLower is canonical.
                where_[j] = Where::AtLower;
            } else {
                // A column that a previous solve had fixed may re-open with
                // a reduced-cost sign that only fits the other bound; the
                // dual bound flip restores sign feasibility.
                int s = sgn(cost_[j]);
                if (s > 0)
                    where_[j] = Where::AtLower;
                else if (s < 0)
                    where_[j] = Where::AtUpper;
            }
            const Rat& target = where_[j] == Where::AtLower ? lb_[j] : ub_[j];
            if (value_[j] == target) continue;
            mpq_sub(delta.get_mpq_t(), target.get_mpq_t(), value_[j].get_mpq_t());
            shift_basics(j, delta);
            value_[j] = target;
        }
    }

    // Bounded dual simplex: drive every basic variable back into its box
    // while the reduced costs stay sign-feasible. Returns 1 on success, 0 on
    // proven infeasibility, -1 when the pivot budget runs out.
    int dual_optimize(std::int64_t budget) {
        std::int64_t used = 0;
        int dual_stall = 0;
        Rat worst;
        while (true) {
            // Leaving variable: the most violated basic; smallest variable
            // index while stalled (Bland-style, guarantees finiteness).
            int row = -1;
            bool above = false;
            bool have_worst = false;
            Rat& viol = scratch_b_;
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t b = basis_[i];
                int side = value_[b] > ub_[b] ? 1 : value_[b] < lb_[b] ? -1 : 0;
                if (side == 0) continue;
                if (dual_stall >= 40) {
                    if (row < 0 || b < static_cast<std::size_t>(basis_[row])) {
                        row = static_cast<int>(i);
                        above = side > 0;
                    }
                    continue;
                }
                if (side > 0)
                    mpq_sub(viol.get_mpq_t(), value_[b].get_mpq_t(), ub_[b].get_mpq_t());
                else
                    mpq_sub(viol.get_mpq_t(), lb_[b].get_mpq_t(), value_[b].get_mpq_t());
                if (!have_worst || mpq_cmp(viol.get_mpq_t(), worst.get_mpq_t()) > 0) {
                    worst = viol;
                    have_worst = true;
                    row = static_cast<int>(i);
                    above = side > 0;
                }
            }
            if (row < 0) return 1;  // primal feasible again: optimal
            if (used++ >= budget) return -1;

            std::size_t leave = basis_[row];
            const std::vector<Rat>& prow = tab_[row];
            // x_leave changes by -prow[j] * delta_j when nonbasic j moves by
            // delta_j; it must decrease when above its box, increase below.
            std::size_t enter = cols();
            bool enter_found = false;
            Rat best_ratio;
            for (std::size_t j = 0; j < cols(); ++j) {
                if (!movable(j) || sgn(prow[j]) == 0) continue;
                int move_dir = where_[j] == Where::AtLower ? 1 : -1;
                int effect = -sgn(prow[j]) * move_dir;
                if (above ? effect >= 0 : effect <= 0) continue;
                // Dual ratio |d_j / prow_j|: the smallest keeps every
                // reduced cost sign-feasible after the update.
                Rat& ratio = scratch_a_;
                mpq_div(ratio.get_mpq_t(), cost_[j].get_mpq_t(), prow[j].get_mpq_t());
                mpq_abs(ratio.get_mpq_t(), ratio.get_mpq_t());
                bool better;
                if (!enter_found) {
                    better = true;
                } else {
                    int cmp = mpq_cmp(ratio.get_mpq_t(), best_ratio.get_mpq_t());
                    better = cmp < 0 || (cmp == 0 && j < enter);
                }
                if (better) {
                    best_ratio = ratio;
                    enter = j;
                    enter_found = true;
                }
            }
            if (!enter_found) return 0;  // cannot re-enter the box: infeasible

            // Step that puts the leaving variable exactly on its bound. The
            // entering variable may overshoot its own box; it then becomes a
            // later leaving candidate, and the pivot budget bounds the loop.
            const Rat& target = above ? ub_[leave] : lb_[leave];
            Rat delta = (value_[leave] - target) / prow[enter];
            dual_stall = sgn(delta) == 0 ? dual_stall + 1 : 0;
            pivot(static_cast<std::size_t>(row), enter, delta,
                  above ? Where::AtUpper : Where::AtLower);
        }
    }

    LpResult solve(const std::vector<Rat>& lower, const std::vector<Rat>& upper) {
        LpResult out;
        for (std::size_t j = 0; j < n; ++j)
            if (lower[j] > upper[j]) return out;

        bool solved = false;
        if (ready_) {
            apply_bounds(lower, upper);
            std::int64_t budget = static_cast<std::int64_t>(4 * m + 128);
            int verdict = dual_optimize(budget);
            if (verdict == 0) return out;
            solved = verdict == 1;
        }
        if (!solved) {
            if (lb_.size() < n) {
                lb_.resize(n);
                ub_.resize(n);
            }
            for (std::size_t j = 0; j < n; ++j) {
                lb_[j] = lower[j];
                ub_[j] = upper[j];
            }
            if (!cold_start()) return out;
        }

        out.feasible = true;
        out.x.assign(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) out.x[j] = value_[j];
        out.objective = 0;
        for (const auto& t : model.objective) out.objective += t.coeff * out.x[t.var];
        return out;
    }
};

SimplexEngine::SimplexEngine(const Model& model) : impl_(std::make_unique<Impl>(model)) {}
SimplexEngine::~SimplexEngine() = default;
SimplexEngine::SimplexEngine(SimplexEngine&&) noexcept = default;
SimplexEngine& SimplexEngine::operator=(SimplexEngine&&) noexcept = default;

LpResult SimplexEngine::solve(const std::vector<Rat>& lower, const std::vector<Rat>& upper) {
    std::int64_t before = impl_->pivots_;
    LpResult out = impl_->solve(lower, upper);
    out.pivots = impl_->pivots_ - before;
    return out;
}

LpResult solve_lp_relaxation(const Model& model, const std::vector<Rat>& lower,
                             const std::vector<Rat>& upper) {
    if (lower.size() != model.variables.size() || upper.size() != model.variables.size())
        throw std::invalid_argument("lp: bound vectors must cover all variables");
    SimplexEngine engine(model);
    return engine.solve(lower, upper);
}

}  // namespace sprp::mip
