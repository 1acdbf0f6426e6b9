#include "patmat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "patmat/spectral.hpp"

namespace patmat {

namespace {

const double kInfinity = std::numeric_limits<double>::infinity();

double log2_mpz(const mpz_class& z) {
    if (z <= 0) throw std::domain_error("log2: nonpositive argument");
    long exp2;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return static_cast<double>(exp2) + std::log2(mant);
}

Rational rat_pow(const Rational& b, int e) { return Rational::pow(b, static_cast<unsigned long>(e)); }

// 2^{n+t} (n/t)^t, the entry count of the (n,t,.)-pattern matrix.
Rational entry_count(int n, int t) {
    return Rational::pow2(n + t) * rat_pow(Rational(n / t), t);
}

RationalMatrix matrix_abs(const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.entries().size(); ++i)
        out.entries()[i] = m.entries()[i].abs();
    return out;
}

std::vector<Rational> psi_from_mu(const BooleanFunction& f, const std::vector<Rational>& mu) {
    std::vector<Rational> psi(mu.size());
    for (uint32_t z = 0; z < mu.size(); ++z) psi[z] = Rational(f(z)) * mu[z];
    return psi;
}

std::string rat_str(const Rational& r) { return r.str(); }

// Reports must carry at least one verification or be flagged formula-only.
BoundReport finalize_report(BoundReport rep) {
    if (rep.verification.empty()) rep.formula_only = true;
    return rep;
}

void require_pattern_shape(const BooleanFunction& f, int n, int t) {
    if (f.arity() != t) throw std::invalid_argument("bounds: function arity != t");
    if (t < 1 || t >= n || n % t != 0)
        throw std::invalid_argument("bounds: need 1 <= t < n with t | n");
}

}  // namespace

double log2_rational(const Rational& r) {
    if (r.sign() <= 0) throw std::domain_error("log2_rational: nonpositive");
    return log2_mpz(r.num()) - log2_mpz(r.den());
}

bool buildable(int n, int t) {
    if (t < 1 || t >= n || n % t != 0) return false;
    return entry_count(n, t) <= Rational(1 << 20);
}

WeightInfo weight_info(const BooleanFunction& f, int d) {
    WeightInfo wi;
    if (d < 0) return wi;
    if (d > f.arity()) d = f.arity();
    RealWeight real = weight_real(f, d);
    if (!real.feasible) return wi;
    wi.finite = true;
    wi.real_lower = real.value;
    if (monomials_up_to(f.arity(), d) <= 10) {
        auto w = weight_bruteforce(f, d, 12);
        if (w) wi.exact = mpz_class(static_cast<long>(*w));
    }
    if (!wi.exact) {
        WeightCertificate cert = weight_int_upper(f, d);
        wi.cert_upper = cert.weight;
    }
    return wi;
}

GdmResult gdm_bound(const RationalMatrix& F, const RationalMatrix& Psi, const Rational& eps) {
    if (F.rows() != Psi.rows() || F.cols() != Psi.cols())
        throw std::invalid_argument("gdm_bound: shape mismatch");
    Rational l1 = Psi.abs_sum();
    if ((l1 - Rational(1)).abs() > Rational(1, 1000000000000LL))
        throw std::invalid_argument("gdm_bound: witness matrix must have unit l1 mass");
    GdmResult out;
    out.correlation = Psi.inner(F);
    out.psi_norm = spectral_norm(to_float(Psi));
    Rational numerator = out.correlation - Rational(2) * eps;
    if (numerator.sign() <= 0) {
        out.vacuous = true;
        out.value = -kInfinity;
        return out;
    }
    double sqrt_xy = std::sqrt(static_cast<double>(F.rows())) *
                     std::sqrt(static_cast<double>(F.cols()));
    out.value = 0.5 * (log2_rational(numerator) - std::log2(3.0 * out.psi_norm * sqrt_xy));
    return out;
}

BoundReport q_lower_adeg(const BooleanFunction& f, int n, int t, const Rational& eps,
                         const Rational& delta) {
    require_pattern_shape(f, n, t);
    if (eps.sign() < 0 || eps >= Rational(1))
        throw std::invalid_argument("q_lower_adeg: eps must be in [0,1)");
    if (delta.sign() < 0 || Rational(2) * delta >= eps)
        throw std::invalid_argument("q_lower_adeg: need 0 <= delta < eps/2");

    const int q = n / t;
    int d = approx_degree(f, eps);
    BoundReport rep;
    rep.name = "main-cc";
    rep.side = "lower";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"eps", rat_str(eps)}, {"delta", rat_str(delta)}};
    rep.inputs["deg_eps"] = std::to_string(d);
    rep.value = 0.25 * d * std::log2(static_cast<double>(q)) -
                0.5 * log2_rational(Rational(3) / (eps - Rational(2) * delta));
    if (d == 0 || rep.value <= 0) rep.vacuous = true;

    if (d >= 1 && buildable(n, t)) {
        DualWitness w = dual_witness(f, eps);
        PatternSpec pspec = witness_spec(n, t, w.values);
        RationalMatrix Psi = build(pspec);
        RationalMatrix F = build_sign(n, t, f);
        rep.verification.push_back({"K-bounded", Psi.abs_sum() == Rational(1)});
        Rational corr = F.inner(Psi);
        rep.verification.push_back({"K-M-correl", corr > eps && corr == w.value});
        Rational norm_cap = rat_pow(Rational(t, n), d) / entry_count(n, t);
        rep.verification.push_back(
            {"K-norm", spectrum_formula(pspec).top_sq() <= norm_cap});
        GdmResult gdm = gdm_bound(F, Psi, delta);
        rep.verification.push_back(
            {"gdm-dominates", !gdm.vacuous && gdm.value >= rep.value - 1e-9});
        rep.provenance.push_back("witness correlation " + rat_str(w.value));
    }
    return finalize_report(std::move(rep));
}

BoundReport q_lower_weight(const BooleanFunction& f, int n, int t, int d,
                           const Rational& gamma) {
    require_pattern_shape(f, n, t);
    if (d < 1) throw std::invalid_argument("q_lower_weight: d must be >= 1");
    if (gamma.sign() <= 0 || gamma >= Rational(1))
        throw std::invalid_argument("q_lower_weight: gamma must be in (0,1)");

    const int q = n / t;
    WeightInfo wi = weight_info(f, d - 1);
    BoundReport rep;
    rep.name = "quantum-weight";
    rep.side = "lower";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"d", std::to_string(d)}, {"gamma", rat_str(gamma)}};
    double branch_deg = d * std::log2(static_cast<double>(q));
    double branch_weight = wi.finite ? log2_rational(wi.lower() / Rational(2 * t)) : kInfinity;
    rep.value = 0.25 * std::min(branch_deg, branch_weight) -
                0.5 * log2_rational(Rational(3) / gamma);
    if (rep.value <= 0) rep.vacuous = true;
    rep.provenance.push_back(wi.finite ? "W(f,d-1) lower estimate: " + wi.lower_source() +
                                             " " + rat_str(wi.lower())
                                       : "W(f,d-1) infinite (d-1 below threshold degree)");

    if (buildable(n, t)) {
        WeightDual wd = weight_dual_distribution(f, d - 1);
        std::vector<Rational> psi = psi_from_mu(f, wd.mu);
        PatternSpec pspec = witness_spec(n, t, psi);
        RationalMatrix Psi = build(pspec);
        RationalMatrix F = build_sign(n, t, f);
        rep.verification.push_back({"weight-K-bounded", Psi.abs_sum() == Rational(1)});
        rep.verification.push_back({"weight-K-correl", F.inner(Psi) == Rational(1)});
        if (wi.exact) {
            Rational w_exact(*wi.exact);
            rep.verification.push_back(
                {"weight-upper", wd.value * wd.value * w_exact <= Rational(2 * t)});
            rep.verification.push_back(
                {"weight-lower", wd.value * w_exact >= Rational(1)});
        }
        Rational norm_cap_sq = rat_pow(Rational(t, n), d);
        if (wd.value * wd.value > norm_cap_sq) norm_cap_sq = wd.value * wd.value;
        rep.verification.push_back(
            {"weight-K-norm", spectrum_formula(pspec).top_sq() <= norm_cap_sq / entry_count(n, t)});
        GdmResult gdm = gdm_bound(F, Psi, (Rational(1) - gamma) / Rational(2));
        rep.verification.push_back(
            {"gdm-dominates", !gdm.vacuous && gdm.value >= rep.value - 1e-9});
    }
    return finalize_report(std::move(rep));
}

DiscBrute disc_bruteforce(const RationalMatrix& lambda, const RationalMatrix& F) {
    if (lambda.rows() != F.rows() || lambda.cols() != F.cols())
        throw std::invalid_argument("disc_bruteforce: shape mismatch");
    if (F.rows() > 16 || F.cols() > 16)
        throw std::length_error("disc_bruteforce: limited to 16x16");
    Rational total(0);
    for (const auto& v : lambda.entries()) {
        if (v.sign() < 0) throw std::invalid_argument("disc_bruteforce: lambda must be nonnegative");
        total += v;
    }
    if (total != Rational(1))
        throw std::invalid_argument("disc_bruteforce: lambda must sum to 1");

    RationalMatrix M = lambda.hadamard(F);
    const std::size_t R = M.rows(), C = M.cols();
    std::vector<Rational> rowsum(R, Rational(0));
    DiscBrute best;
    best.value = Rational(0);
    uint64_t gray = 0;
    for (uint64_t k = 1; k < (1ull << C); ++k) {
        uint64_t g = k ^ (k >> 1);
        uint64_t changed = g ^ gray;
        int c = __builtin_ctzll(changed);
        bool added = (g & changed) != 0;
        for (std::size_t r = 0; r < R; ++r) {
            if (added) rowsum[r] += M.at(r, c);
            else rowsum[r] -= M.at(r, c);
        }
        gray = g;
        Rational pos(0), neg(0);
        uint64_t pos_mask = 0, neg_mask = 0;
        for (std::size_t r = 0; r < R; ++r) {
            int s = rowsum[r].sign();
            if (s > 0) { pos += rowsum[r]; pos_mask |= 1ull << r; }
            else if (s < 0) { neg += rowsum[r]; neg_mask |= 1ull << r; }
        }
        if (pos > best.value) { best.value = pos; best.row_mask = pos_mask; best.col_mask = g; }
        Rational negabs = -neg;
        if (negabs > best.value) { best.value = negabs; best.row_mask = neg_mask; best.col_mask = g; }
    }
    return best;
}

double disc_spectral(const RationalMatrix& P, const RationalMatrix& F) {
    if (P.rows() != F.rows() || P.cols() != F.cols())
        throw std::invalid_argument("disc_spectral: shape mismatch");
    double sqrt_xy = std::sqrt(static_cast<double>(P.rows())) *
                     std::sqrt(static_cast<double>(P.cols()));
    return sqrt_xy * spectral_norm(to_float(P.hadamard(F)));
}

namespace {

// Shared by the discrepancy upper/lower reports: the minimizing d of
// max{2t/W(f,d-1), (t/n)^d} plus the witness distribution built there.
struct DiscUpperCore {
    int best_d = 1;
    Rational best_sq;  // squared bound
    std::vector<std::string> notes;
};

DiscUpperCore disc_upper_core(const BooleanFunction& f, int n, int t) {
    DiscUpperCore core;
    bool first = true;
    for (int d = 1; d <= t; ++d) {
        WeightInfo wi = weight_info(f, d - 1);
        Rational branch = rat_pow(Rational(t, n), d);
        if (wi.finite) {
            Rational wb = Rational(2 * t) / wi.lower();
            if (wb > branch) branch = wb;
            core.notes.push_back("d=" + std::to_string(d) + " W-source " + wi.lower_source());
        }
        if (first || branch < core.best_sq) {
            core.best_sq = branch;
            core.best_d = d;
            first = false;
        }
    }
    return core;
}

}  // namespace

BoundReport disc_upper_weight(const BooleanFunction& f, int n, int t) {
    require_pattern_shape(f, n, t);
    DiscUpperCore core = disc_upper_core(f, n, t);
    BoundReport rep;
    rep.name = "disc-upper";
    rep.side = "upper";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"d", std::to_string(core.best_d)}};
    rep.value = std::sqrt(core.best_sq.to_double());
    rep.provenance = core.notes;
    if (rep.value >= 1.0) rep.vacuous = true;

    if (buildable(n, t)) {
        WeightDual wd = weight_dual_distribution(f, core.best_d - 1);
        std::vector<Rational> psi = psi_from_mu(f, wd.mu);
        RationalMatrix Psi = witness_matrix(n, t, psi);
        RationalMatrix P = matrix_abs(Psi);
        RationalMatrix F = build_sign(n, t, f);
        double spec = disc_spectral(P, F);
        rep.verification.push_back({"disc2spectral-vs-bound", spec <= rep.value + 1e-9});
        if (F.rows() <= 16 && F.cols() <= 16) {
            DiscBrute brute = disc_bruteforce(P, F);
            rep.verification.push_back(
                {"bruteforce-vs-spectral", brute.value.to_double() <= spec + 1e-9});
        }
    }
    return finalize_report(std::move(rep));
}

BoundReport disc_lower_weight(const BooleanFunction& f, int n, int t, int d) {
    require_pattern_shape(f, n, t);
    if (d < 0) throw std::invalid_argument("disc_lower_weight: d must be >= 0");
    WeightInfo wi = weight_info(f, d);
    BoundReport rep;
    rep.name = "disc-lower";
    rep.side = "lower";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"d", std::to_string(d)}};
    auto upper = wi.upper();
    if (!wi.finite || !upper) {
        rep.value = 0;
        rep.vacuous = true;
        rep.provenance.push_back("W(f,d) infinite: vacuous");
        return finalize_report(std::move(rep));
    }
    Rational value_rat = rat_pow(Rational(t, n), d) / (Rational(8) * *upper);
    rep.value = value_rat.to_double();
    rep.provenance.push_back("W(f,d) upper estimate: " + wi.upper_source() + " " +
                             rat_str(*upper));

    if (buildable(n, t)) {
        RationalMatrix F = build_sign(n, t, f);
        if (F.rows() <= 16 && F.cols() <= 16) {
            DiscUpperCore core = disc_upper_core(f, n, t);
            WeightDual wd = weight_dual_distribution(f, core.best_d - 1);
            RationalMatrix P = matrix_abs(witness_matrix(n, t, psi_from_mu(f, wd.mu)));
            DiscBrute brute = disc_bruteforce(P, F);
            rep.verification.push_back({"lower-vs-bruteforce", brute.value >= value_rat});
        }
    }
    return finalize_report(std::move(rep));
}

BoundReport disc_upper_adeg(const BooleanFunction& f, int n, int t, const Rational& gamma) {
    require_pattern_shape(f, n, t);
    if (gamma.sign() <= 0 || gamma >= Rational(1))
        throw std::invalid_argument("disc_upper_adeg: gamma must be in (0,1)");
    Rational eps = Rational(1) - gamma;
    int d = approx_degree(f, eps);
    BoundReport rep;
    rep.name = "disc-upper-adeg";
    rep.side = "upper";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"gamma", rat_str(gamma)}, {"deg", std::to_string(d)}};
    double tail = std::pow(Rational(t, n).to_double(), 0.5 * d);
    rep.value = gamma.to_double() + tail;
    if (rep.value >= 1.0) rep.vacuous = true;

    if (d >= 1 && buildable(n, t)) {
        DualWitness w = dual_witness(f, eps);
        RationalMatrix Psi = witness_matrix(n, t, w.values);
        RationalMatrix P = matrix_abs(Psi);
        std::vector<int8_t> sign_table(w.values.size());
        for (std::size_t z = 0; z < w.values.size(); ++z)
            sign_table[z] = w.values[z].sign() < 0 ? -1 : 1;
        RationalMatrix H = build_sign(n, t, BooleanFunction(t, std::move(sign_table)));
        RationalMatrix F = build_sign(n, t, f);
        rep.verification.push_back({"disc-P-H", disc_spectral(P, H) <= tail + 1e-9});
        rep.verification.push_back({"correlation", F.inner(Psi) > eps});
        if (F.rows() <= 16 && F.cols() <= 16) {
            DiscBrute brute = disc_bruteforce(P, F);
            rep.verification.push_back({"disc-P-F", brute.value.to_double() <= rep.value + 1e-9});
        }
    }
    return finalize_report(std::move(rep));
}

double trace_norm_lower(const RationalMatrix& F, const RationalMatrix& Psi,
                        const Rational& eps) {
    bool zero = true;
    for (const auto& v : Psi.entries())
        if (!v.is_zero()) { zero = false; break; }
    if (zero) throw std::invalid_argument("trace_norm_lower: Psi must be nonzero");
    Rational numerator = F.inner(Psi) - eps * Psi.abs_sum();
    double norm = spectral_norm(to_float(Psi));
    return numerator.to_double() / norm;
}

BoundReport rank_lower_adeg(const BooleanFunction& f, int n, int t, const Rational& eps,
                            const Rational& delta) {
    require_pattern_shape(f, n, t);
    if (eps.sign() < 0 || eps >= Rational(1) || delta.sign() < 0 || delta > eps)
        throw std::invalid_argument("rank_lower_adeg: need 0 <= delta <= eps < 1");
    const int q = n / t;
    int d = approx_degree(f, eps);
    Rational ratio = (eps - delta) / (Rational(1) + delta);
    Rational value_rat = ratio * ratio * rat_pow(Rational(q), d);
    BoundReport rep;
    rep.name = "bounded-error-approx-rank";
    rep.side = "lower";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"eps", rat_str(eps)}, {"delta", rat_str(delta)},
                  {"deg_eps", std::to_string(d)}};
    rep.value = value_rat.to_double();
    if (rep.value <= 1.0) rep.vacuous = true;

    if (d >= 1 && eps > delta && buildable(n, t)) {
        DualWitness w = dual_witness(f, eps);
        RationalMatrix Psi = witness_matrix(n, t, w.values);
        RationalMatrix F = build_sign(n, t, f);
        double s = entry_count(n, t).to_double();
        double tn = trace_norm_lower(F, Psi, delta);
        double tn_formula = (eps - delta).to_double() *
                            std::pow(static_cast<double>(q), 0.5 * d) * std::sqrt(s);
        rep.verification.push_back(
            {"bounded-error-trace-norm", tn >= tn_formula * (1 - 1e-9)});
        Rational dd = (Rational(1) + delta) * (Rational(1) + delta);
        double denom = s * dd.to_double();
        rep.verification.push_back(
            {"approx-rank-approx-trace-norm", tn * tn / denom >= rep.value * (1 - 1e-9)});
        rep.verification.push_back(
            {"rank-sandwich",
             value_rat <= Rational(static_cast<long>(
                 rank_exact(PatternSpec(n, t, PhiTable::from_function(f)))))});
    }
    return finalize_report(std::move(rep));
}

BoundReport rank_lower_weight(const BooleanFunction& f, int n, int t, int d,
                              const Rational& gamma) {
    require_pattern_shape(f, n, t);
    if (d < 1) throw std::invalid_argument("rank_lower_weight: d must be >= 1");
    if (gamma.sign() <= 0 || gamma >= Rational(1))
        throw std::invalid_argument("rank_lower_weight: gamma must be in (0,1)");
    const int q = n / t;
    WeightInfo wi = weight_info(f, d - 1);
    Rational ratio = gamma / (Rational(2) - gamma);
    Rational min_term = rat_pow(Rational(q), d);
    if (wi.finite) {
        Rational wterm = wi.lower() / Rational(2 * t);
        if (wterm < min_term) min_term = wterm;
    }
    Rational value_rat = ratio * ratio * min_term;
    BoundReport rep;
    rep.name = "small-bias-approx-rank";
    rep.side = "lower";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"d", std::to_string(d)}, {"gamma", rat_str(gamma)}};
    rep.value = value_rat.to_double();
    rep.provenance.push_back(wi.finite ? "W(f,d-1) lower estimate: " + wi.lower_source()
                                       : "W(f,d-1) infinite");
    if (rep.value <= 1.0) rep.vacuous = true;

    if (buildable(n, t)) {
        WeightDual wd = weight_dual_distribution(f, d - 1);
        RationalMatrix Psi = witness_matrix(n, t, psi_from_mu(f, wd.mu));
        RationalMatrix F = build_sign(n, t, f);
        double s = entry_count(n, t).to_double();
        double tn = trace_norm_lower(F, Psi, Rational(1) - gamma);
        double min_sqrt = std::sqrt(min_term.to_double());
        double tn_formula = gamma.to_double() * min_sqrt * std::sqrt(s);
        rep.verification.push_back({"small-bias-trace-norm", tn >= tn_formula * (1 - 1e-9)});
        Rational dd = (Rational(2) - gamma) * (Rational(2) - gamma);
        rep.verification.push_back(
            {"approx-rank-approx-trace-norm",
             tn * tn / (s * dd.to_double()) >= rep.value * (1 - 1e-9)});
        rep.verification.push_back(
            {"rank-sandwich",
             value_rat <= Rational(static_cast<long>(
                 rank_exact(PatternSpec(n, t, PhiTable::from_function(f)))))});
    }
    return finalize_report(std::move(rep));
}

RankUpper rank_upper_construction(const BooleanFunction& f, int n, int t,
                                  const Rational& eps) {
    require_pattern_shape(f, n, t);
    int d = approx_degree(f, eps);
    ApproxResult best = best_approx(f, d);
    PatternSpec spec(n, t, PhiTable::from_spectrum(t, best.coeffs));
    SingularSpectrum sp = spectrum_formula(spec);
    return RankUpper{std::move(spec), best.value, sp.rank(), sp.trace_norm()};
}

ShiftIdentities razborov_shift(long n, long l) {
    // alpha = 1/8, so alpha/(1-alpha) = 1/7 and 1/(1-alpha) = 8/7
    long k = l - (n - l) / 7;
    ShiftIdentities out{k, n - k, l - k, false};
    out.exact = (out.n_minus_k == (8 * (n - l)) / 7) && (out.l_minus_k == (n - l) / 7);
    return out;
}

namespace {

struct RazborovBranch {
    bool valid = false;
    double value = 0.0;
    std::string note;
    std::vector<Verification> checks;
};

// Quarter-size reduction: f(z) = D(|z|) on floor(nn/4) variables inside the
// (2m, m, f)-pattern submatrix; the bounded-error bound with -3 slack.
RazborovBranch razborov_small(const std::vector<int8_t>& dvalues, long nn, long l,
                              const std::string& label) {
    RazborovBranch br;
    long m = nn / 4;
    if (m < 1) return br;
    std::vector<int8_t> restricted(dvalues.begin(), dvalues.begin() + m + 1);
    int adeg = sym_approx_degree(restricted, Rational(1, 3));
    br.valid = true;
    br.value = 0.25 * adeg - 3.0;  // log2(n/t) = 1 for the (2m, m) instance
    br.note = label + ": l=" + std::to_string(l) + " m=" + std::to_string(m) +
              " adeg=" + std::to_string(adeg);
    return br;
}

}  // namespace

BoundReport razborov_bound(const Predicate& d, int n) {
    if (n < 8) throw std::invalid_argument("razborov_bound: need n >= 8");
    if (d.n != n) throw std::invalid_argument("razborov_bound: predicate range mismatch");
    L0L1 ll = l0_l1(d);
    BoundReport rep;
    rep.name = "razborov";
    rep.side = "lower";
    rep.inputs = {{"n", std::to_string(n)}, {"l0", std::to_string(ll.l0)},
                  {"l1", std::to_string(ll.l1)}};
    double sym_form = std::sqrt(static_cast<double>(n) * ll.l0) + ll.l1;
    rep.provenance.push_back("symbolic form sqrt(n*l0)+l1 = " + std::to_string(sym_form));

    if (ll.l0 == 0 && ll.l1 == 0) {
        rep.vacuous = true;
        rep.provenance.push_back("constant predicate: vacuous");
        return finalize_report(std::move(rep));
    }

    std::vector<RazborovBranch> branches;

    auto shifted_branch = [&](long l, const std::string& label) -> RazborovBranch {
        RazborovBranch br;
        ShiftIdentities sh = razborov_shift(n, l);
        br.checks.push_back({label + "-shift-identities", sh.exact});
        if (sh.k == l) {
            br.note = label + ": shift degenerate (k == l)";
            return br;
        }
        long nk = n - sh.k;
        std::vector<int8_t> shifted(d.values.begin() + sh.k, d.values.end());
        bool sign_change = shifted[sh.l_minus_k] != shifted[sh.l_minus_k - 1];
        bool in_range = 8 * sh.l_minus_k <= nk;
        br.checks.push_back({label + "-shifted-sign-change", sign_change});
        br.checks.push_back({label + "-shifted-l-small", in_range});
        if (!sign_change || !in_range) return br;
        RazborovBranch small = razborov_small(shifted, nk, sh.l_minus_k, label + "-shifted");
        small.checks = br.checks;
        return small;
    };

    if (ll.l0 != 0) {
        long l = ll.l0;
        if (8 * l <= n) {
            RazborovBranch br = razborov_small(d.values, n, l, "l0-small");
            br.checks.push_back({"l0-sign-change", d.values[l] != d.values[l - 1]});
            branches.push_back(std::move(br));
        } else {
            branches.push_back(shifted_branch(l, "l0"));
        }
    }
    if (ll.l1 != 0) {
        long l = n - ll.l1 + 1;
        branches.push_back(shifted_branch(l, "l1"));
    }

    bool any_valid = false;
    for (const auto& br : branches) {
        for (const auto& c : br.checks) rep.verification.push_back(c);
        if (!br.note.empty()) rep.provenance.push_back(br.note);
        if (br.valid) {
            if (!any_valid || br.value > rep.value) rep.value = br.value;
            any_valid = true;
        }
    }
    if (!any_valid) rep.vacuous = true;
    if (rep.value <= 0) rep.vacuous = true;
    return finalize_report(std::move(rep));
}

BoundReport logrank_check(const BooleanFunction& f, int n, int t) {
    require_pattern_shape(f, n, t);
    const int q = n / t;
    int deg_f = degree(f);
    PatternSpec spec(n, t, PhiTable::from_function(f));
    uint64_t rank = rank_exact(spec);
    uint64_t floor_rank = 1;
    for (int i = 0; i < deg_f; ++i) floor_rank *= static_cast<uint64_t>(q);

    BoundReport rep;
    rep.name = "logrank";
    rep.side = "lower";
    rep.inputs = {{"fn", f.to_hex()}, {"t", std::to_string(t)}, {"n", std::to_string(n)},
                  {"deg", std::to_string(deg_f)}};
    rep.value = static_cast<double>(rank);
    rep.verification.push_back({"rank-vs-degree", rank >= floor_rank});

    MinDepthResult tree = min_depth_tree(f);
    int bits = 0;
    while ((1 << bits) < q) ++bits;
    int det_cost = tree.tree->depth() * (bits + 2);
    rep.inputs["dt"] = std::to_string(tree.tree->depth());
    rep.provenance.push_back("deterministic protocol cost <= " + std::to_string(det_cost) +
                             (tree.optimal ? "" : " (greedy tree, depth not certified minimal)"));
    return finalize_report(std::move(rep));
}

std::vector<PaturiRow> paturi_report(const std::string& family, const std::string& params,
                                     int tmin, int tmax) {
    if (tmin < 1 || tmax < tmin) throw std::invalid_argument("paturi_report: bad t range");
    std::vector<PaturiRow> rows;
    for (int t = tmin; t <= tmax; ++t) {
        Predicate d = catalog_predicate(family, t, params);
        L0L1 ll = l0_l1(d);
        int adeg = sym_approx_degree(d.values, Rational(1, 3));
        PaturiRow row;
        row.t = t;
        row.adeg = adeg;
        row.l0 = ll.l0;
        row.l1 = ll.l1;
        row.reference = std::sqrt(static_cast<double>(t) * ll.l0) +
                        std::sqrt(static_cast<double>(t) * ll.l1);
        row.ratio = row.reference > 0 ? adeg / row.reference : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace patmat
