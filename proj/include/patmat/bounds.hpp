#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patmat/approx.hpp"
#include "patmat/boolfn.hpp"
#include "patmat/pattern.hpp"
#include "patmat/rational.hpp"

namespace patmat {

struct Verification {
    std::string name;
    bool pass;
};

struct BoundReport {
    std::string name;
    std::map<std::string, std::string> inputs;
    double value = 0.0;
    std::string side;  // "lower" or "upper"
    bool vacuous = false;
    bool formula_only = false;  // instance too large to cross-verify
    std::vector<Verification> verification;
    std::vector<std::string> provenance;

    bool all_passed() const {
        for (const auto& v : verification)
            if (!v.pass) return false;
        return true;
    }
};

// Threshold-weight estimates with provenance. Lower-side estimates (exact
// or the real relaxation) are sound wherever a larger W strengthens a
// bound; upper-side estimates (exact or the rounding certificate) are
// required wherever a larger W would weaken it.
struct WeightInfo {
    bool finite = false;
    std::optional<mpz_class> exact;       // branch-and-bound, when within cap
    Rational real_lower;                  // W_R <= W
    std::optional<mpz_class> cert_upper;  // rounding certificate weight >= W

    bool have_lower() const { return finite; }
    Rational lower() const { return exact ? Rational(*exact) : real_lower; }
    std::optional<Rational> upper() const {
        if (exact) return Rational(*exact);
        if (cert_upper) return Rational(*cert_upper);
        return std::nullopt;
    }
    std::string lower_source() const {
        return exact ? "bruteforce" : "real-relaxation";
    }
    std::string upper_source() const {
        return exact ? "bruteforce" : "rounding-certificate";
    }
};

WeightInfo weight_info(const BooleanFunction& f, int d);

double log2_rational(const Rational& r);

// log4((<Psi,F> - 2 eps) / (3 ||Psi|| sqrt(|X||Y|))); the communication
// lower bound certified by a unit-l1 witness matrix.
struct GdmResult {
    double value = 0.0;
    bool vacuous = false;
    Rational correlation;   // <Psi, F>, exact
    double psi_norm = 0.0;  // spectral
};
GdmResult gdm_bound(const RationalMatrix& F, const RationalMatrix& Psi, const Rational& eps);

// (1/4) deg_eps(f) log(n/t) - (1/2) log(3/(eps - 2 delta)), cross-verified
// through the witness-matrix chain at buildable sizes.
BoundReport q_lower_adeg(const BooleanFunction& f, int n, int t, const Rational& eps,
                         const Rational& delta);

// (1/4) min{d log(n/t), log(W(f,d-1)/2t)} - (1/2) log(3/gamma).
BoundReport q_lower_weight(const BooleanFunction& f, int n, int t, int d,
                           const Rational& gamma);

// Exact rectangle search: max_{S,T} |sum_{S x T} lambda o F|. Requires
// <= 16 rows and <= 16 columns.
struct DiscBrute {
    Rational value;
    uint64_t row_mask = 0, col_mask = 0;
};
DiscBrute disc_bruteforce(const RationalMatrix& lambda, const RationalMatrix& F);

// sqrt(|X||Y|) ||P o F||.
double disc_spectral(const RationalMatrix& P, const RationalMatrix& F);

BoundReport disc_upper_weight(const BooleanFunction& f, int n, int t);
BoundReport disc_lower_weight(const BooleanFunction& f, int n, int t, int d);
BoundReport disc_upper_adeg(const BooleanFunction& f, int n, int t, const Rational& gamma);

// (<F,Psi> - eps ||Psi||_1) / ||Psi||, a lower bound on the eps-approximate
// trace norm.
double trace_norm_lower(const RationalMatrix& F, const RationalMatrix& Psi,
                        const Rational& eps);

// Approximate-rank lower bounds: bounded-error and small-bias forms.
BoundReport rank_lower_adeg(const BooleanFunction& f, int n, int t, const Rational& eps,
                            const Rational& delta);
BoundReport rank_lower_weight(const BooleanFunction& f, int n, int t, int d,
                              const Rational& gamma);

// Low-rank approximant from the optimal degree-d polynomial: A entrywise
// within E(f, d) of the sign matrix, rank from the closed form.
struct RankUpper {
    PatternSpec spec;
    Rational error;  // ||F - A||_inf, exact
    uint64_t rank = 0;
    double trace_norm = 0.0;
};
RankUpper rank_upper_construction(const BooleanFunction& f, int n, int t,
                                  const Rational& eps);

// Shift/padding pipeline for a symmetric predicate; the concrete value of
// the bounded-error bound after reduction to a quarter-size instance.
BoundReport razborov_bound(const Predicate& d, int n);

// The exact shift arithmetic used by the pipeline (alpha = 1/8).
struct ShiftIdentities {
    long k, n_minus_k, l_minus_k;
    bool exact;  // both floor identities hold
};
ShiftIdentities razborov_shift(long n, long l);

// rk F >= (n/t)^deg(f) checked exactly, with the deterministic-protocol
// cost bound attached.
BoundReport logrank_check(const BooleanFunction& f, int n, int t);

struct PaturiRow {
    int t;
    int adeg;   // deg_{1/3}
    int l0, l1;
    double reference;  // sqrt(t*l0) + sqrt(t*l1)
    double ratio;      // adeg / reference; 0 when reference == 0
};
std::vector<PaturiRow> paturi_report(const std::string& family, const std::string& params,
                                     int tmin, int tmax);

bool buildable(int n, int t);

}  // namespace patmat
