#include "patmat/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace patmat {
namespace {

template <class T>
struct Tolerances;

template <>
struct Tolerances<Rational> {
    static bool neg(const Rational& v) { return v.sign() < 0; }
    static bool pos(const Rational& v) { return v.sign() > 0; }
    static bool zero(const Rational& v) { return v.is_zero(); }
};

template <>
struct Tolerances<double> {
    static constexpr double kPivotTol = 1e-10;
    static bool neg(double v) { return v < -kPivotTol; }
    static bool pos(double v) { return v > kPivotTol; }
    static bool zero(double v) { return std::fabs(v) <= kPivotTol; }
};

// Full-tableau two-phase simplex over standard form min c.x, Ax=b, x>=0.
// Column layout: structural columns (split free vars), then slack/surplus,
// then one artificial per row. Both cost rows are carried through pivots.
template <class T, bool Exact>
class Simplex {
  public:
    explicit Simplex(const LPProblem<T>& prob) : prob_(prob) { build(); }

    LPSolution<T> run() {
        LPSolution<T> sol;
        // Phase 1: minimize the sum of artificials.
        if (!iterate(/*phase1=*/true)) throw std::logic_error("simplex: phase 1 unbounded");
        if (Tolerances<T>::pos(phase1_objective())) {
            sol.status = LPStatus::Infeasible;
            sol.certificate = farkas_certificate();
            return sol;
        }
        expel_artificials();
        if (!iterate(/*phase1=*/false)) {
            sol.status = LPStatus::Unbounded;
            sol.certificate = unbounded_ray();
            return sol;
        }
        sol.status = LPStatus::Optimal;
        sol.primal = extract_primal();
        sol.dual = extract_dual();
        sol.objective = T(0);
        for (std::size_t j = 0; j < prob_.num_vars(); ++j)
            sol.objective += prob_.objective[j] * sol.primal[j];
        return sol;
    }

  private:
    const LPProblem<T>& prob_;
    std::size_t m_ = 0;             // rows
    std::size_t ncols_ = 0;         // structural + slack + artificial
    std::size_t art0_ = 0;          // first artificial column
    std::vector<std::vector<T>> tab_;  // m rows, ncols_+1 (rhs last)
    std::vector<T> cost1_, cost2_;     // reduced-cost rows, ncols_+1 (obj last)
    std::vector<int> basis_;           // column basic in each row
    std::vector<int> rowsign_;
    // per original var: column of positive part; free vars also get neg part
    std::vector<std::size_t> pos_col_, neg_col_;
    std::size_t price_start_ = 0;

    void build() {
        const std::size_t nv = prob_.num_vars();
        m_ = prob_.constraints.size();
        for (const auto& c : prob_.constraints)
            if (c.coeffs.size() != nv)
                throw std::invalid_argument("lp_solve: constraint row length mismatch");
        if (!prob_.bounds.empty() && prob_.bounds.size() != nv)
            throw std::invalid_argument("lp_solve: bounds length mismatch");

        std::size_t cols = 0;
        pos_col_.resize(nv);
        neg_col_.assign(nv, SIZE_MAX);
        for (std::size_t j = 0; j < nv; ++j) {
            pos_col_[j] = cols++;
            if (prob_.kind(j) == VarKind::Free) neg_col_[j] = cols++;
        }
        std::size_t slack0 = cols;
        std::size_t nslack = 0;
        for (const auto& c : prob_.constraints)
            if (c.rel != Relation::Equal) ++nslack;
        art0_ = slack0 + nslack;
        ncols_ = art0_ + m_;

        tab_.assign(m_, std::vector<T>(ncols_ + 1, T(0)));
        rowsign_.assign(m_, 1);
        basis_.assign(m_, -1);

        std::size_t s = slack0;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& c = prob_.constraints[i];
            int sign = Tolerances<T>::neg(c.rhs) ? -1 : 1;
            rowsign_[i] = sign;
            for (std::size_t j = 0; j < nv; ++j) {
                T v = c.coeffs[j];
                if (sign < 0) v = -v;
                tab_[i][pos_col_[j]] = v;
                if (neg_col_[j] != SIZE_MAX) tab_[i][neg_col_[j]] = -v;
            }
            if (c.rel != Relation::Equal) {
                T sc = (c.rel == Relation::LessEq) ? T(1) : T(-1);
                tab_[i][s++] = (sign < 0) ? -sc : sc;
            }
            tab_[i][art0_ + i] = T(1);
            tab_[i][ncols_] = (sign < 0) ? T(0) - c.rhs : c.rhs;
            basis_[i] = static_cast<int>(art0_ + i);
        }

        // Phase-2 costs on structural columns.
        cost2_.assign(ncols_ + 1, T(0));
        for (std::size_t j = 0; j < nv; ++j) {
            cost2_[pos_col_[j]] = prob_.objective[j];
            if (neg_col_[j] != SIZE_MAX) cost2_[neg_col_[j]] = T(0) - prob_.objective[j];
        }
        // Phase-1 reduced costs with the all-artificial basis:
        // c1_j - sum_i A_ij for non-artificial j, objective -sum b_i.
        cost1_.assign(ncols_ + 1, T(0));
        for (std::size_t j = 0; j < art0_; ++j) {
            T s1(0);
            for (std::size_t i = 0; i < m_; ++i) s1 += tab_[i][j];
            cost1_[j] = T(0) - s1;
        }
        T sb(0);
        for (std::size_t i = 0; i < m_; ++i) sb += tab_[i][ncols_];
        cost1_[ncols_] = T(0) - sb;
    }

    T phase1_objective() const { return T(0) - cost1_[ncols_]; }

    bool is_artificial(std::size_t j) const { return j >= art0_; }

    void pivot(std::size_t r, std::size_t c) {
        T inv = T(1) / tab_[r][c];
        for (auto& v : tab_[r]) v = v * inv;
        tab_[r][c] = T(1);
        auto elim = [&](std::vector<T>& row) {
            T f = row[c];
            if (f == T(0)) return;
            for (std::size_t j = 0; j <= ncols_; ++j) row[j] -= f * tab_[r][j];
            row[c] = T(0);
        };
        for (std::size_t i = 0; i < m_; ++i)
            if (i != r) elim(tab_[i]);
        elim(cost1_);
        elim(cost2_);
        basis_[r] = static_cast<int>(c);
    }

    // Entering column choice. Exact: Bland (lowest index with negative
    // reduced cost). Float: partial pricing, most negative within a
    // rotating window of candidates.
    std::size_t choose_entering(const std::vector<T>& cost, bool allow_artificial) {
        const std::size_t limit = allow_artificial ? ncols_ : art0_;
        if constexpr (Exact) {
            for (std::size_t j = 0; j < limit; ++j)
                if (Tolerances<T>::neg(cost[j])) return j;
            return SIZE_MAX;
        } else {
            constexpr std::size_t kWindow = 64;
            std::size_t best = SIZE_MAX, seen = 0;
            T bestv = T(0);
            for (std::size_t k = 0; k < limit && seen < kWindow; ++k) {
                std::size_t j = (price_start_ + k) % limit;
                if (Tolerances<T>::neg(cost[j])) {
                    ++seen;
                    if (best == SIZE_MAX || cost[j] < bestv) { best = j; bestv = cost[j]; }
                }
            }
            if (best == SIZE_MAX) {
                for (std::size_t j = 0; j < limit; ++j)
                    if (Tolerances<T>::neg(cost[j])) { best = j; break; }
            }
            if (best != SIZE_MAX) price_start_ = (best + 1) % limit;
            return best;
        }
    }

    // Exact ratio test: Bland's leaving rule (lowest basic index on ties).
    std::size_t choose_leaving_exact(std::size_t c) const {
        std::size_t r = SIZE_MAX;
        for (std::size_t i = 0; i < m_; ++i) {
            if (!Tolerances<Rational>::pos(tab_[i][c])) continue;
            if (r == SIZE_MAX) { r = i; continue; }
            T lhs = tab_[i][ncols_] * tab_[r][c];
            T rhs = tab_[r][ncols_] * tab_[i][c];
            if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[r])) r = i;
        }
        return r;
    }

    // Float ratio test: among rows within a relative band of the minimum
    // ratio, pivot on the largest element. Tiny pivots are what corrupt a
    // long-running dense tableau.
    std::size_t choose_leaving_float(std::size_t c) const {
        double theta = 0;
        std::size_t r = SIZE_MAX;
        for (std::size_t i = 0; i < m_; ++i) {
            double piv = tab_[i][c];
            if (piv <= Tolerances<double>::kPivotTol) continue;
            double ratio = tab_[i][ncols_] / piv;
            if (r == SIZE_MAX || ratio < theta) { theta = ratio; r = i; }
        }
        if (r == SIZE_MAX) return r;
        double band = theta + 1e-9 * std::fabs(theta) + 1e-12;
        double best_piv = tab_[r][c];
        for (std::size_t i = 0; i < m_; ++i) {
            double piv = tab_[i][c];
            if (piv <= Tolerances<double>::kPivotTol) continue;
            double ratio = tab_[i][ncols_] / piv;
            if (ratio <= band && piv > best_piv) { best_piv = piv; r = i; }
        }
        return r;
    }

    // Entering rule for a stalled float run: lowest eligible index, the
    // same anti-cycling order the exact mode uses throughout.
    std::size_t choose_entering_bland(const std::vector<T>& cost, std::size_t limit) {
        for (std::size_t j = 0; j < limit; ++j)
            if (Tolerances<T>::neg(cost[j])) return j;
        return SIZE_MAX;
    }

    // Returns false on unboundedness.
    bool iterate(bool phase1) {
        auto& cost = phase1 ? cost1_ : cost2_;
        [[maybe_unused]] double last_objective = 0;
        [[maybe_unused]] long stalled = 0;
        bool bland = false;
        for (long iter = 0;; ++iter) {
            std::size_t c;
            if constexpr (Exact) {
                c = choose_entering(cost, phase1);
            } else {
                const std::size_t limit = phase1 ? ncols_ : art0_;
                c = bland ? choose_entering_bland(cost, limit)
                          : choose_entering(cost, phase1);
            }
            if (c == SIZE_MAX) return true;
            std::size_t r;
            if constexpr (Exact) r = choose_leaving_exact(c);
            else r = choose_leaving_float(c);
            if (r == SIZE_MAX) {
                if constexpr (!Exact) {
                    // Roundoff can leave a marginally negative reduced cost
                    // over an all-nonpositive column; bar it rather than
                    // declaring unboundedness.
                    if (cost[c] > -1e-7) {
                        cost[c] = T(0);
                        continue;
                    }
                }
                return false;
            }
            pivot(r, c);
            if constexpr (!Exact) {
                // Degenerate pivot chains can cycle under aggressive
                // pricing; fall back to Bland's order once the objective
                // stops moving.
                double obj = cost[ncols_];
                if (iter == 0 || std::fabs(obj - last_objective) > 1e-13 * (1 + std::fabs(obj))) {
                    last_objective = obj;
                    stalled = 0;
                    bland = false;
                } else if (++stalled > 200) {
                    bland = true;
                }
                if (iter > 2000000)
                    throw std::runtime_error("simplex: iteration limit exceeded");
            }
        }
    }

    // Drive artificial variables out of the basis where possible.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(art0_)) continue;
            std::size_t c = SIZE_MAX;
            for (std::size_t j = 0; j < art0_; ++j)
                if (!Tolerances<T>::zero(tab_[i][j])) { c = j; break; }
            if (c != SIZE_MAX) pivot(i, c);
            // else: redundant row, artificial stays basic at value zero
        }
    }

    std::vector<T> extract_primal() const {
        std::vector<T> x(prob_.num_vars(), T(0));
        std::vector<T> std_x(ncols_, T(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0) std_x[basis_[i]] = tab_[i][ncols_];
        for (std::size_t j = 0; j < prob_.num_vars(); ++j) {
            x[j] = std_x[pos_col_[j]];
            if (neg_col_[j] != SIZE_MAX) x[j] -= std_x[neg_col_[j]];
        }
        return x;
    }

    // y_i recovered from the artificial column of row i: its phase-2
    // reduced cost is -yhat_i, and the original dual is rowsign * yhat.
    std::vector<T> extract_dual() const {
        std::vector<T> y(m_, T(0));
        for (std::size_t i = 0; i < m_; ++i) {
            T yhat = T(0) - cost2_[art0_ + i];
            y[i] = rowsign_[i] < 0 ? T(0) - yhat : yhat;
        }
        return y;
    }

    std::vector<T> farkas_certificate() const {
        std::vector<T> y(m_, T(0));
        for (std::size_t i = 0; i < m_; ++i) {
            T yhat = T(1) - cost1_[art0_ + i];
            y[i] = rowsign_[i] < 0 ? T(0) - yhat : yhat;
        }
        return y;
    }

    std::vector<T> unbounded_ray() {
        std::size_t c = SIZE_MAX;
        for (std::size_t j = 0; j < art0_ && c == SIZE_MAX; ++j) {
            if (!Tolerances<T>::neg(cost2_[j])) continue;
            bool any_pos = false;
            for (std::size_t i = 0; i < m_; ++i)
                if (Tolerances<T>::pos(tab_[i][j])) { any_pos = true; break; }
            if (!any_pos) c = j;
        }
        if (c == SIZE_MAX) return {};
        std::vector<T> dstd(ncols_, T(0));
        dstd[c] = T(1);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < static_cast<int>(ncols_))
                dstd[basis_[i]] = T(0) - tab_[i][c];
        std::vector<T> d(prob_.num_vars(), T(0));
        for (std::size_t j = 0; j < prob_.num_vars(); ++j) {
            d[j] = dstd[pos_col_[j]];
            if (neg_col_[j] != SIZE_MAX) d[j] -= dstd[neg_col_[j]];
        }
        return d;
    }
};

}  // namespace

LPSolution<Rational> lp_solve_exact(const LPProblem<Rational>& prob) {
    Simplex<Rational, true> s(prob);
    LPSolution<Rational> sol = s.run();
    if (sol.status == LPStatus::Optimal) check_duality_exact(prob, sol);
    return sol;
}

LPSolution<double> lp_solve_float(const LPProblem<double>& prob) {
    Simplex<double, false> s(prob);
    return s.run();
}

LPProblem<double> to_float(const LPProblem<Rational>& prob) {
    LPProblem<double> out;
    out.objective.reserve(prob.objective.size());
    for (const auto& v : prob.objective) out.objective.push_back(v.to_double());
    out.bounds = prob.bounds;
    out.constraints.reserve(prob.constraints.size());
    for (const auto& c : prob.constraints) {
        LPConstraint<double> fc;
        fc.rel = c.rel;
        fc.rhs = c.rhs.to_double();
        fc.coeffs.reserve(c.coeffs.size());
        for (const auto& v : c.coeffs) fc.coeffs.push_back(v.to_double());
        out.constraints.push_back(std::move(fc));
    }
    return out;
}

void check_duality_exact(const LPProblem<Rational>& prob, const LPSolution<Rational>& sol) {
    if (sol.status != LPStatus::Optimal) return;
    const std::size_t nv = prob.num_vars();
    const std::size_t m = prob.constraints.size();
    // Primal feasibility.
    for (std::size_t j = 0; j < nv; ++j)
        if (prob.kind(j) == VarKind::NonNegative && sol.primal[j].sign() < 0)
            throw std::logic_error("lp duality check: primal sign violated");
    Rational dual_obj(0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = prob.constraints[i];
        Rational lhs(0);
        for (std::size_t j = 0; j < nv; ++j) lhs += c.coeffs[j] * sol.primal[j];
        bool ok = (c.rel == Relation::LessEq)    ? lhs <= c.rhs
                  : (c.rel == Relation::GreaterEq) ? lhs >= c.rhs
                                                   : lhs == c.rhs;
        if (!ok) throw std::logic_error("lp duality check: primal infeasible");
        if (c.rel == Relation::LessEq && sol.dual[i].sign() > 0)
            throw std::logic_error("lp duality check: dual sign violated");
        if (c.rel == Relation::GreaterEq && sol.dual[i].sign() < 0)
            throw std::logic_error("lp duality check: dual sign violated");
        dual_obj += sol.dual[i] * c.rhs;
    }
    // Dual feasibility: A^T y == c on free vars, <= c on nonnegative ones.
    for (std::size_t j = 0; j < nv; ++j) {
        Rational aty(0);
        for (std::size_t i = 0; i < m; ++i) aty += prob.constraints[i].coeffs[j] * sol.dual[i];
        if (prob.kind(j) == VarKind::Free) {
            if (aty != prob.objective[j])
                throw std::logic_error("lp duality check: dual equality violated");
        } else if (aty > prob.objective[j]) {
            throw std::logic_error("lp duality check: dual inequality violated");
        }
    }
    if (dual_obj != sol.objective)
        throw std::logic_error("lp duality check: objective gap");
}

}  // namespace patmat
