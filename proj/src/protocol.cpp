#include "patmat/protocol.hpp"

#include <stdexcept>

namespace patmat {

namespace {
int ceil_log2(uint64_t v) {
    int bits = 0;
    while ((1ull << bits) < v) ++bits;
    return bits;
}

// ceil(log2(q^d)) via exact big-integer power
int ceil_log2_pow(uint64_t q, int d) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), q, static_cast<unsigned long>(d));
    if (p == 1) return 0;
    mpz_class pm1 = p - 1;
    return static_cast<int>(mpz_sizeinbase(pm1.get_mpz_t(), 2));
}
}  // namespace

Transcript det_protocol(const DecisionTree& tree, int n, int t, uint32_t x,
                        const ColumnIndex& col) {
    const int q = n / t;
    const int idx_bits = ceil_log2(static_cast<uint64_t>(q));
    Transcript tr;
    const DecisionTree* node = &tree;
    while (node->var != 0) {
        int j = node->var;  // 1-based variable of f
        int pos = (j - 1) * q + col.v_digits[j - 1];
        int bit = (x >> pos) & 1;
        int wbit = (col.w >> (j - 1)) & 1;
        int branch = bit ^ wbit;
        tr.messages.push_back({'B', idx_bits});  // in-block index of V_j
        tr.messages.push_back({'A', 1});         // x at that position
        tr.messages.push_back({'B', 1});         // branch framing
        tr.cost += idx_bits + 2;
        node = branch ? node->one.get() : node->zero.get();
    }
    tr.output = node->leaf;
    return tr;
}

int det_protocol_cost_bound(const DecisionTree& tree, int n, int t) {
    return tree.depth() * (ceil_log2(static_cast<uint64_t>(n / t)) + 2);
}

int rand_protocol_cost_bound(const WeightCertificate& cert, int n, int t) {
    return ceil_log2_pow(static_cast<uint64_t>(n / t), cert.d) + 2;
}

Transcript rand_weight_protocol(const WeightCertificate& cert, int n, int t,
                                uint32_t x, const ColumnIndex& col, SplitMix64& rng) {
    if (cert.lambda.empty()) throw std::invalid_argument("rand_weight_protocol: empty certificate");
    if (!cert.weight.fits_ulong_p())
        throw std::length_error("rand_weight_protocol: weight too large to sample");
    uint64_t w_total = cert.weight.get_ui();
    uint64_t r = rng.below(w_total);

    uint32_t chosen = 0;
    int lam_sign = 1;
    for (const auto& [mask, lam] : cert.lambda) {
        uint64_t wt = mpz_class(abs(lam)).get_ui();
        if (r < wt) {
            chosen = mask;
            lam_sign = sgn(lam);
            break;
        }
        r -= wt;
    }

    uint32_t xv = project(x, col, n, t);
    int out = lam_sign * character(chosen, xv) * character(chosen, col.w);

    Transcript tr;
    int bits = rand_protocol_cost_bound(cert, n, t);
    tr.messages.push_back({'B', bits - 1});  // indices of {V_j : j in S} and chi_S(w)
    tr.messages.push_back({'A', 1});         // announced product
    tr.cost = bits;
    tr.output = out;
    return tr;
}

Advantage exact_advantage(const WeightCertificate& cert, const BooleanFunction& f) {
    Rational weight(cert.weight);
    Advantage adv;
    bool first = true;
    for (uint32_t z = 0; z < f.table_size(); ++z) {
        mpz_class p = 0;
        for (const auto& [mask, lam] : cert.lambda)
            p += character(mask, z) > 0 ? lam : -lam;
        Rational v = Rational(mpz_class(f(z) * p)) / weight;
        if (first || v < adv.value) {
            adv.value = v;
            adv.argmin = z;
            first = false;
        }
    }
    return adv;
}

MonteCarlo monte_carlo_weight(const WeightCertificate& cert, const BooleanFunction& f,
                              int n, int t, uint32_t x, const ColumnIndex& col,
                              long long trials, uint64_t seed) {
    SplitMix64 rng(seed);
    int truth = f(pattern_input(x, col, n, t));
    MonteCarlo mc;
    mc.trials = trials;
    for (long long i = 0; i < trials; ++i) {
        Transcript tr = rand_weight_protocol(cert, n, t, x, col, rng);
        if (tr.output == truth) ++mc.agreements;
    }
    mc.empirical_advantage =
        trials == 0 ? 0.0 : 2.0 * static_cast<double>(mc.agreements) / static_cast<double>(trials) - 1.0;
    return mc;
}

}  // namespace patmat
