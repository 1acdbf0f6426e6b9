#pragma once

#include <cstdint>
#include <vector>

#include "patmat/approx.hpp"
#include "patmat/boolfn.hpp"
#include "patmat/pattern.hpp"

namespace patmat {

// SplitMix64: 64-bit state, s += 0x9e3779b97f4a7c15, output mixed with
// xor-shift-multiply. Identical sequences on every platform for a seed.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

struct Message {
    char speaker;  // 'A' or 'B'
    int bits;
};

struct Transcript {
    std::vector<Message> messages;
    int cost = 0;  // total bits
    int output = 0;
};

// Walks a shared decision tree for f; per queried node Bob sends the
// in-block index of the variable (ceil(log2(n/t)) bits), Alice answers
// with the bit of x there, and Bob frames the branch taken (1 bit each).
Transcript det_protocol(const DecisionTree& tree, int n, int t, uint32_t x,
                        const ColumnIndex& col);

// One run of the shared-randomness sign-representation protocol: draw S
// with probability |lambda_S| / W, output sign(lambda_S) chi_S(x|_V) chi_S(w).
// Cost is charged at the worst case ceil(log2((n/t)^d)) + 2.
Transcript rand_weight_protocol(const WeightCertificate& cert, int n, int t,
                                uint32_t x, const ColumnIndex& col, SplitMix64& rng);

int det_protocol_cost_bound(const DecisionTree& tree, int n, int t);
int rand_protocol_cost_bound(const WeightCertificate& cert, int n, int t);

// min over inputs of f(z) * E[output] = (1/W) min_z |sum lambda_S chi_S(z)|,
// computed exactly; always >= 1/W.
struct Advantage {
    Rational value;
    uint32_t argmin;  // a z attaining the minimum
};
Advantage exact_advantage(const WeightCertificate& cert, const BooleanFunction& f);

struct MonteCarlo {
    long long trials = 0;
    long long agreements = 0;           // output == f
    double empirical_advantage = 0.0;   // 2 * agreements / trials - 1
};

// Repeated runs at a fixed input (x, col); the input's true value is
// f(x|_V xor w).
MonteCarlo monte_carlo_weight(const WeightCertificate& cert, const BooleanFunction& f,
                              int n, int t, uint32_t x, const ColumnIndex& col,
                              long long trials, uint64_t seed);

}  // namespace patmat
