#pragma once

#include <vector>

#include "patmat/rational.hpp"

namespace patmat {

enum class Relation { LessEq, Equal, GreaterEq };
enum class VarKind { Free, NonNegative };
enum class LPStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LPConstraint {
    std::vector<T> coeffs;
    Relation rel = Relation::LessEq;
    T rhs = T(0);
};

// min objective . x  subject to the rows; variable kinds per `bounds`
// (defaults to all-NonNegative when `bounds` is empty).
template <class T>
struct LPProblem {
    std::vector<T> objective;
    std::vector<LPConstraint<T>> constraints;
    std::vector<VarKind> bounds;

    std::size_t num_vars() const { return objective.size(); }
    VarKind kind(std::size_t j) const {
        return bounds.empty() ? VarKind::NonNegative : bounds[j];
    }
};

// Dual sign conventions for the min problem: y <= 0 on LessEq rows,
// y >= 0 on GreaterEq rows, free on Equal rows; at an optimum
// b.dual == objective and (A^T y)_j == c_j on free variables,
// <= c_j on nonnegative ones.
//
// status == Infeasible: `certificate` holds a Farkas vector y per row
// (same sign conventions) with A^T y <= 0 (== 0 on free vars) and b.y > 0.
// status == Unbounded: `certificate` holds a primal ray d with A d
// respecting all relations homogeneously and objective . d < 0.
template <class T>
struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<T> primal;
    std::vector<T> dual;
    T objective = T(0);
    std::vector<T> certificate;
};

// Exact rational simplex (Bland's pivoting rule, always terminates).
LPSolution<Rational> lp_solve_exact(const LPProblem<Rational>& prob);

// Floating simplex, partial pricing, 1e-10 pivot tolerance.
LPSolution<double> lp_solve_float(const LPProblem<double>& prob);

LPProblem<double> to_float(const LPProblem<Rational>& prob);

// Throws std::logic_error if an Optimal solution violates feasibility,
// dual feasibility, or objective equality (exact arithmetic).
void check_duality_exact(const LPProblem<Rational>& prob, const LPSolution<Rational>& sol);

}  // namespace patmat
