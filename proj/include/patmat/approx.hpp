#pragma once

#include <map>
#include <optional>
#include <vector>

#include "patmat/boolfn.hpp"
#include "patmat/lp.hpp"
#include "patmat/rational.hpp"

namespace patmat {

// Least uniform error of a degree-<=d approximation, with the optimal
// coefficients in the character basis.
struct ApproxResult {
    int d = 0;
    Rational value;
    std::map<uint32_t, Rational> coeffs;  // only |S| <= d
};

// psi with sum |psi| = 1, psi_hat(S) = 0 for all |S| <= orth_level, and
// sum psi(x) f(x) == value.
struct DualWitness {
    int d = 0;           // witness degree: orthogonal below this level
    Rational eps;        // the threshold it certifies (value > eps)
    Rational value;      // exact correlation with f
    std::vector<Rational> values;  // psi(x), length 2^t
};

struct OrthoDistribution {
    int d = 0;
    std::vector<Rational> weights;  // mu(x), length 2^t
};

// Integer sign-representation with bounded total weight.
struct WeightCertificate {
    int d = 0;
    std::map<uint32_t, mpz_class> lambda;  // nonzero coefficients, |S| <= d
    mpz_class weight;                      // sum |lambda_S|
};

struct RealWeight {
    bool feasible = false;  // infeasible <=> d < threshold degree <=> W infinite
    Rational value;
    std::map<uint32_t, Rational> coeffs;
};

struct WeightDual {
    Rational value;                // max_{|S|<=d} |E_mu[f chi_S]| at the optimum
    std::vector<Rational> mu;      // optimal distribution
};

// Exact LP (t <= 8).
ApproxResult best_approx(const BooleanFunction& f, int d);
// Floating LP for 8 < t <= 12.
double best_approx_float(const BooleanFunction& f, int d);

// E(f,0), ..., E(f,t).
std::vector<Rational> e_profile(const BooleanFunction& f);

// Least d with E(f,d) <= eps.
int approx_degree(const BooleanFunction& f, const Rational& eps);
int approx_degree_float(const BooleanFunction& f, double eps);

// Witness orthogonal to all |S| <= d with correlation exactly E(f,d);
// normalized (sum |psi| = 1) whenever d < t.
DualWitness dual_witness_at(const BooleanFunction& f, int d);

// The witness certifying deg_eps(f) = d: orthogonal below level d,
// correlation E(f,d-1) > eps. Throws std::domain_error when deg_eps = 0.
DualWitness dual_witness(const BooleanFunction& f, const Rational& eps);

int threshold_degree(const BooleanFunction& f);

// Feasible iff d <= threshold_degree(f); infeasibility is reported as
// nullopt, not an error.
std::optional<OrthoDistribution> ortho_distribution(const BooleanFunction& f, int d);

// Real relaxation of the threshold weight: min sum |lambda_S| over real
// sign-representations of degree <= d.
RealWeight weight_real(const BooleanFunction& f, int d);

// Rounding construction on the optimal degree-d approximant; the result is
// reduced by the gcd of its coefficients. delta defaults to 1 - E(f,d).
WeightCertificate weight_int_upper(const BooleanFunction& f, int d,
                                   std::optional<Rational> delta = std::nullopt);

// Exact W(f,d) by branch-and-bound over integer coefficient vectors with
// total weight <= cap; nullopt means "> cap". Requires <= 10 monomials and
// cap <= 12.
std::optional<long long> weight_bruteforce(const BooleanFunction& f, int d, long long cap);

// Minimax distribution: minimizes max_{|S|<=d} |E_mu[f chi_S]|.
WeightDual weight_dual_distribution(const BooleanFunction& f, int d);

bool certificate_sign_represents(const WeightCertificate& cert, const BooleanFunction& f);

// Number of monomials of degree <= d on t variables.
mpz_class monomials_up_to(int t, int d);

// --- symmetric fast path ----------------------------------------------------
// For f(x) = D(|x|), E(f,d) equals the best uniform approximation of D on
// {0..t} by a univariate degree-<=d polynomial.
Rational sym_best_error(const std::vector<int8_t>& dvalues, int d);
int sym_approx_degree(const std::vector<int8_t>& dvalues, const Rational& eps);

}  // namespace patmat
