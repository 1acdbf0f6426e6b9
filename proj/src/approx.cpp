#include "patmat/approx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace patmat {

namespace {

constexpr int kExactArity = 8;
constexpr int kFloatArity = 12;

std::vector<uint32_t> masks_up_to(int t, int d) {
    std::vector<uint32_t> masks;
    for (uint32_t s = 0; s < (1u << t); ++s)
        if (__builtin_popcount(s) <= d) masks.push_back(s);
    return masks;
}

// LP for best_approx: variables (eps, alpha_S ...), rows per input x:
//   eps + sum alpha_S chi_S(x) >= f(x)
//   eps - sum alpha_S chi_S(x) >= -f(x)
template <class T>
LPProblem<T> approx_lp(const BooleanFunction& f, const std::vector<uint32_t>& masks) {
    const uint32_t size = f.table_size();
    LPProblem<T> lp;
    lp.objective.assign(1 + masks.size(), T(0));
    lp.objective[0] = T(1);
    lp.bounds.assign(1 + masks.size(), VarKind::Free);
    lp.bounds[0] = VarKind::NonNegative;
    lp.constraints.reserve(2 * size);
    for (uint32_t x = 0; x < size; ++x) {
        LPConstraint<T> hi, lo;
        hi.rel = lo.rel = Relation::GreaterEq;
        hi.coeffs.assign(1 + masks.size(), T(0));
        lo.coeffs.assign(1 + masks.size(), T(0));
        hi.coeffs[0] = lo.coeffs[0] = T(1);
        for (std::size_t k = 0; k < masks.size(); ++k) {
            int chi = character(masks[k], x);
            hi.coeffs[1 + k] = T(chi);
            lo.coeffs[1 + k] = T(-chi);
        }
        hi.rhs = T(f(x));
        lo.rhs = T(-f(x));
        lp.constraints.push_back(std::move(hi));
        lp.constraints.push_back(std::move(lo));
    }
    return lp;
}

void require_exact_arity(const BooleanFunction& f) {
    if (f.arity() > kExactArity)
        throw std::length_error("approx: exact mode supports t <= 8");
}

}  // namespace

mpz_class monomials_up_to(int t, int d) {
    mpz_class n = 0, b;
    for (int i = 0; i <= d && i <= t; ++i) {
        mpz_bin_uiui(b.get_mpz_t(), t, i);
        n += b;
    }
    return n;
}

ApproxResult best_approx(const BooleanFunction& f, int d) {
    require_exact_arity(f);
    if (d < 0 || d > f.arity()) throw std::invalid_argument("best_approx: bad degree");
    auto masks = masks_up_to(f.arity(), d);
    auto sol = lp_solve_exact(approx_lp<Rational>(f, masks));
    if (sol.status != LPStatus::Optimal) throw std::logic_error("best_approx: LP not optimal");
    ApproxResult out;
    out.d = d;
    out.value = sol.objective;
    for (std::size_t k = 0; k < masks.size(); ++k) out.coeffs[masks[k]] = sol.primal[1 + k];
    return out;
}

// Float mode solves the dual program: maximize sum f psi over psi with unit
// l1 mass and vanishing low-order coefficients. Its tableau has one row per
// monomial instead of two rows per input, which keeps the dense simplex
// well-conditioned up to t = 12.
double best_approx_float(const BooleanFunction& f, int d) {
    if (f.arity() > kFloatArity)
        throw std::length_error("approx: float mode supports t <= 12");
    const uint32_t size = f.table_size();
    auto masks = masks_up_to(f.arity(), d);
    LPProblem<double> lp;
    // variables: u_x, v_x with psi = u - v
    lp.objective.assign(2 * size, 0.0);
    for (uint32_t x = 0; x < size; ++x) {
        lp.objective[2 * x] = -f(x);
        lp.objective[2 * x + 1] = f(x);
    }
    lp.bounds.assign(2 * size, VarKind::NonNegative);
    for (uint32_t s_mask : masks) {
        LPConstraint<double> c;
        c.rel = Relation::Equal;
        c.rhs = 0.0;
        c.coeffs.assign(2 * size, 0.0);
        for (uint32_t x = 0; x < size; ++x) {
            double chi = character(s_mask, x);
            c.coeffs[2 * x] = chi;
            c.coeffs[2 * x + 1] = -chi;
        }
        lp.constraints.push_back(std::move(c));
    }
    LPConstraint<double> mass;
    mass.rel = Relation::LessEq;
    mass.rhs = 1.0;
    mass.coeffs.assign(2 * size, 1.0);
    lp.constraints.push_back(std::move(mass));
    auto sol = lp_solve_float(lp);
    if (sol.status != LPStatus::Optimal) throw std::logic_error("best_approx_float: LP not optimal");
    return -sol.objective;
}

std::vector<Rational> e_profile(const BooleanFunction& f) {
    std::vector<Rational> prof;
    prof.reserve(f.arity() + 1);
    for (int d = 0; d <= f.arity(); ++d) prof.push_back(best_approx(f, d).value);
    return prof;
}

int approx_degree(const BooleanFunction& f, const Rational& eps) {
    if (eps.sign() < 0 || eps >= Rational(1))
        throw std::invalid_argument("approx_degree: eps must be in [0,1)");
    for (int d = 0; d <= f.arity(); ++d)
        if (best_approx(f, d).value <= eps) return d;
    throw std::logic_error("approx_degree: E(f,t) != 0");
}

int approx_degree_float(const BooleanFunction& f, double eps) {
    for (int d = 0; d <= f.arity(); ++d)
        if (best_approx_float(f, d) <= eps + 1e-9) return d;
    throw std::logic_error("approx_degree_float: E(f,t) != 0");
}

DualWitness dual_witness_at(const BooleanFunction& f, int d) {
    require_exact_arity(f);
    const int t = f.arity();
    auto masks = masks_up_to(t, d);
    auto sol = lp_solve_exact(approx_lp<Rational>(f, masks));
    if (sol.status != LPStatus::Optimal) throw std::logic_error("dual_witness_at: LP not optimal");

    DualWitness w;
    w.d = d;
    w.value = sol.objective;
    w.values.resize(f.table_size());
    Rational norm(0);
    for (uint32_t x = 0; x < f.table_size(); ++x) {
        w.values[x] = sol.dual[2 * x] - sol.dual[2 * x + 1];
        norm += w.values[x].abs();
    }

    if (w.value.sign() > 0) {
        if (norm != Rational(1))
            throw std::logic_error("dual_witness_at: optimal dual not normalized");
        return w;
    }

    // E(f,d) == 0. Any normalized psi orthogonal to levels <= d with zero
    // correlation is an optimal dual; build one when the tableau returned
    // a deficient vector (only possible for d < t).
    if (d >= t) return w;
    if (!norm.is_zero()) {
        for (auto& v : w.values) v /= norm;
        return w;
    }
    auto spec = fourier(f);
    uint32_t first = 0;
    bool have_first = false;
    for (uint32_t s = 0; s < (1u << t); ++s) {
        if (__builtin_popcount(s) <= d) continue;
        if (spec.coeff[s].is_zero()) {
            // psi = 2^-t chi_s is orthogonal to f and to low levels
            Rational a = Rational::pow2(-t);
            for (uint32_t x = 0; x < f.table_size(); ++x)
                w.values[x] = character(s, x) > 0 ? a : -a;
            return w;
        }
        if (!have_first) { first = s; have_first = true; }
        else {
            // combine two high characters to cancel the correlation
            Rational a(1), b = -spec.coeff[first] / spec.coeff[s];
            Rational l1(0);
            std::vector<Rational> vals(f.table_size());
            for (uint32_t x = 0; x < f.table_size(); ++x) {
                vals[x] = a * Rational(character(first, x)) + b * Rational(character(s, x));
                l1 += vals[x].abs();
            }
            for (uint32_t x = 0; x < f.table_size(); ++x) w.values[x] = vals[x] / l1;
            return w;
        }
    }
    throw std::logic_error("dual_witness_at: no normalized witness exists");
}

DualWitness dual_witness(const BooleanFunction& f, const Rational& eps) {
    int d = approx_degree(f, eps);
    if (d == 0) throw std::domain_error("dual_witness: function is approximable at degree 0");
    DualWitness w = dual_witness_at(f, d - 1);
    w.d = d;  // orthogonal to |S| <= d-1, i.e. below level d
    w.eps = eps;
    if (!(w.value > eps)) throw std::logic_error("dual_witness: correlation not above eps");
    return w;
}

int threshold_degree(const BooleanFunction& f) {
    require_exact_arity(f);
    for (int d = 0; d <= f.arity(); ++d) {
        if (weight_real(f, d).feasible) return d;
    }
    throw std::logic_error("threshold_degree: full degree must sign-represent");
}

std::optional<OrthoDistribution> ortho_distribution(const BooleanFunction& f, int d) {
    require_exact_arity(f);
    const uint32_t size = f.table_size();
    LPProblem<Rational> lp;
    lp.objective.assign(size, Rational(0));
    lp.bounds.assign(size, VarKind::NonNegative);
    LPConstraint<Rational> total;
    total.rel = Relation::Equal;
    total.rhs = Rational(1);
    total.coeffs.assign(size, Rational(1));
    lp.constraints.push_back(std::move(total));
    for (uint32_t s = 0; s < size; ++s) {
        if (__builtin_popcount(s) >= d) continue;
        LPConstraint<Rational> c;
        c.rel = Relation::Equal;
        c.rhs = Rational(0);
        c.coeffs.resize(size);
        for (uint32_t x = 0; x < size; ++x)
            c.coeffs[x] = Rational(f(x) * character(s, x));
        lp.constraints.push_back(std::move(c));
    }
    auto sol = lp_solve_exact(lp);
    if (sol.status != LPStatus::Optimal) return std::nullopt;
    return OrthoDistribution{d, std::move(sol.primal)};
}

RealWeight weight_real(const BooleanFunction& f, int d) {
    require_exact_arity(f);
    auto masks = masks_up_to(f.arity(), d);
    const std::size_t m = masks.size();
    // variables: lambda+_S, lambda-_S, all nonnegative
    LPProblem<Rational> lp;
    lp.objective.assign(2 * m, Rational(1));
    lp.bounds.assign(2 * m, VarKind::NonNegative);
    for (uint32_t x = 0; x < f.table_size(); ++x) {
        LPConstraint<Rational> c;
        c.rel = Relation::GreaterEq;
        c.rhs = Rational(1);
        c.coeffs.assign(2 * m, Rational(0));
        for (std::size_t k = 0; k < m; ++k) {
            Rational v(f(x) * character(masks[k], x));
            c.coeffs[2 * k] = v;
            c.coeffs[2 * k + 1] = -v;
        }
        lp.constraints.push_back(std::move(c));
    }
    auto sol = lp_solve_exact(lp);
    RealWeight out;
    if (sol.status != LPStatus::Optimal) return out;
    out.feasible = true;
    out.value = sol.objective;
    for (std::size_t k = 0; k < m; ++k) {
        Rational v = sol.primal[2 * k] - sol.primal[2 * k + 1];
        if (!v.is_zero()) out.coeffs[masks[k]] = v;
    }
    return out;
}

namespace {
mpz_class round_nearest(const Rational& q) {
    // floor(q + 1/2); ties round toward +infinity
    Rational shifted = q + Rational(1, 2);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), shifted.num().get_mpz_t(), shifted.den().get_mpz_t());
    return r;
}
}  // namespace

WeightCertificate weight_int_upper(const BooleanFunction& f, int d,
                                   std::optional<Rational> delta) {
    ApproxResult best = best_approx(f, d);
    Rational e = best.value;
    if (e >= Rational(1))
        throw std::domain_error("weight_int_upper: E(f,d) = 1, no representation exists");
    Rational dlt = delta.value_or(Rational(1) - e);
    if (dlt.sign() <= 0 || dlt > Rational(1) - e)
        throw std::invalid_argument("weight_int_upper: delta must lie in (0, 1-E]");
    mpz_class n_monomials = monomials_up_to(f.arity(), d);
    Rational m = Rational(mpz_class(3 * n_monomials)) / (Rational(4) * dlt);

    WeightCertificate cert;
    cert.d = d;
    mpz_class g = 0;
    for (const auto& [mask, coeff] : best.coeffs) {
        mpz_class lam = round_nearest(m * coeff);
        if (lam != 0) {
            cert.lambda[mask] = lam;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), lam.get_mpz_t());
        }
    }
    if (g > 1)
        for (auto& [mask, lam] : cert.lambda) lam /= g;
    cert.weight = 0;
    for (const auto& [mask, lam] : cert.lambda) cert.weight += abs(lam);
    if (!certificate_sign_represents(cert, f))
        throw std::logic_error("weight_int_upper: rounding failed to sign-represent");
    return cert;
}

bool certificate_sign_represents(const WeightCertificate& cert, const BooleanFunction& f) {
    for (uint32_t x = 0; x < f.table_size(); ++x) {
        mpz_class p = 0;
        for (const auto& [mask, lam] : cert.lambda)
            p += character(mask, x) > 0 ? lam : -lam;
        if (sgn(p) != f(x)) return false;
    }
    return true;
}

std::optional<long long> weight_bruteforce(const BooleanFunction& f, int d, long long cap) {
    auto masks = masks_up_to(f.arity(), d);
    if (masks.size() > 10) throw std::length_error("weight_bruteforce: too many monomials");
    if (cap > 12) throw std::length_error("weight_bruteforce: cap too large");
    const uint32_t size = f.table_size();
    const std::size_t m = masks.size();

    // chi[k][x]
    std::vector<std::vector<int>> chi(m, std::vector<int>(size));
    for (std::size_t k = 0; k < m; ++k)
        for (uint32_t x = 0; x < size; ++x) chi[k][x] = character(masks[k], x);

    std::vector<long long> partial(size, 0);

    // DFS over monomials with weight budget; prune when some point cannot
    // reach f(x) * p(x) >= 1 even spending the whole remaining budget.
    auto feasible = [&](auto&& self, std::size_t k, long long rem) -> bool {
        if (k == m) {
            for (uint32_t x = 0; x < size; ++x)
                if (f(x) * partial[x] < 1) return false;
            return true;
        }
        for (uint32_t x = 0; x < size; ++x)
            if (f(x) * partial[x] + rem < 1) return false;
        for (long long v = -rem; v <= rem; ++v) {
            for (uint32_t x = 0; x < size; ++x) partial[x] += v * chi[k][x];
            bool ok = self(self, k + 1, rem - std::llabs(v));
            for (uint32_t x = 0; x < size; ++x) partial[x] -= v * chi[k][x];
            if (ok) return true;
        }
        return false;
    };

    for (long long w = 1; w <= cap; ++w)
        if (feasible(feasible, 0, w)) return w;
    return std::nullopt;
}

WeightDual weight_dual_distribution(const BooleanFunction& f, int d) {
    require_exact_arity(f);
    const uint32_t size = f.table_size();
    auto masks = masks_up_to(f.arity(), d);
    // variables: v, mu_0..mu_{2^t-1}
    LPProblem<Rational> lp;
    lp.objective.assign(1 + size, Rational(0));
    lp.objective[0] = Rational(1);
    lp.bounds.assign(1 + size, VarKind::NonNegative);
    LPConstraint<Rational> total;
    total.rel = Relation::Equal;
    total.rhs = Rational(1);
    total.coeffs.assign(1 + size, Rational(1));
    total.coeffs[0] = Rational(0);
    lp.constraints.push_back(std::move(total));
    for (uint32_t s_mask : masks) {
        LPConstraint<Rational> hi, lo;
        hi.rel = lo.rel = Relation::GreaterEq;
        hi.rhs = lo.rhs = Rational(0);
        hi.coeffs.assign(1 + size, Rational(0));
        lo.coeffs.assign(1 + size, Rational(0));
        hi.coeffs[0] = lo.coeffs[0] = Rational(1);
        for (uint32_t x = 0; x < size; ++x) {
            Rational v(f(x) * character(s_mask, x));
            hi.coeffs[1 + x] = -v;  // v >= E_mu[f chi_S]
            lo.coeffs[1 + x] = v;   // v >= -E_mu[f chi_S]
        }
        lp.constraints.push_back(std::move(hi));
        lp.constraints.push_back(std::move(lo));
    }
    auto sol = lp_solve_exact(lp);
    if (sol.status != LPStatus::Optimal)
        throw std::logic_error("weight_dual_distribution: LP not optimal");
    WeightDual out;
    out.value = sol.objective;
    out.mu.assign(sol.primal.begin() + 1, sol.primal.end());
    return out;
}

// --- symmetric fast path ------------------------------------------------------

Rational sym_best_error(const std::vector<int8_t>& dvalues, int d) {
    const int points = static_cast<int>(dvalues.size());
    if (points < 1) throw std::invalid_argument("sym_best_error: empty predicate");
    if (d < 0) throw std::invalid_argument("sym_best_error: bad degree");
    // variables: eps, c_0..c_d; rows per k: eps +- q(k) >= +-D(k)
    LPProblem<Rational> lp;
    lp.objective.assign(d + 2, Rational(0));
    lp.objective[0] = Rational(1);
    lp.bounds.assign(d + 2, VarKind::Free);
    lp.bounds[0] = VarKind::NonNegative;
    for (int k = 0; k < points; ++k) {
        LPConstraint<Rational> hi, lo;
        hi.rel = lo.rel = Relation::GreaterEq;
        hi.coeffs.assign(d + 2, Rational(0));
        lo.coeffs.assign(d + 2, Rational(0));
        hi.coeffs[0] = lo.coeffs[0] = Rational(1);
        mpz_class pw = 1;
        for (int j = 0; j <= d; ++j) {
            hi.coeffs[1 + j] = Rational(pw);
            lo.coeffs[1 + j] = Rational(mpz_class(-pw));
            pw *= k;
        }
        hi.rhs = Rational(dvalues[k]);
        lo.rhs = Rational(-dvalues[k]);
        lp.constraints.push_back(std::move(hi));
        lp.constraints.push_back(std::move(lo));
    }
    auto sol = lp_solve_exact(lp);
    if (sol.status != LPStatus::Optimal) throw std::logic_error("sym_best_error: LP not optimal");
    return sol.objective;
}

int sym_approx_degree(const std::vector<int8_t>& dvalues, const Rational& eps) {
    const int t = static_cast<int>(dvalues.size()) - 1;
    for (int d = 0; d <= t; ++d)
        if (sym_best_error(dvalues, d) <= eps) return d;
    throw std::logic_error("sym_approx_degree: interpolation must be exact at degree t");
}

}  // namespace patmat
