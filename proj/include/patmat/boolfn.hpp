#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "patmat/rational.hpp"

namespace patmat {

// Bit convention used everywhere: input index x encodes variable i
// (1-based) in bit i-1, least significant first. Output -1 means "true".
inline int bit_of(uint32_t x, int var1) { return (x >> (var1 - 1)) & 1u; }

// chi_S(x) = (-1)^{|S & x|} for subset masks S, x.
inline int character(uint32_t s_mask, uint32_t x_mask) {
    return (__builtin_popcount(s_mask & x_mask) & 1) ? -1 : 1;
}

// Truth table of a function {0,1}^t -> {-1,+1}.
class BooleanFunction {
  public:
    BooleanFunction(int arity, std::vector<int8_t> table);

    int arity() const { return arity_; }
    uint32_t table_size() const { return 1u << arity_; }
    int operator()(uint32_t x) const { return table_[x]; }
    const std::vector<int8_t>& table() const { return table_; }

    bool is_constant() const;
    bool is_symmetric() const;

    // Hex string of the table bits, -1 -> 1 and +1 -> 0; entry 4k is the
    // most significant bit of hex digit k (digits left to right).
    std::string to_hex() const;
    static BooleanFunction from_hex(int arity, const std::string& hex);

    bool operator==(const BooleanFunction& o) const {
        return arity_ == o.arity_ && table_ == o.table_;
    }

  private:
    int arity_;
    std::vector<int8_t> table_;
};

// D: {0,...,n} -> {-1,+1}.
struct Predicate {
    int n;
    std::vector<int8_t> values;  // length n+1

    Predicate(int n_, std::vector<int8_t> v);
    int operator()(int i) const { return values[i]; }
};

// f(x) = D(|x|) on t variables, t <= D.n.
BooleanFunction from_predicate(const Predicate& d, int t);

// Smallest (l0, l1) with D constant on [l0, n-l1]; both are minimal
// simultaneously because the range always contains floor(n/2).
struct L0L1 {
    int l0;
    int l1;
    bool degenerate;  // kept for interface stability; cannot occur
};
L0L1 l0_l1(const Predicate& d);

// Exact Fourier coefficients over Z_2^t: coeff[S] = 2^-t sum_x f(x) chi_S(x).
struct FourierSpectrum {
    int arity;
    std::vector<Rational> coeff;  // indexed by subset mask

    Rational max_abs() const;
    int degree() const;  // max |S| with coeff[S] != 0; 0 for constants
};

FourierSpectrum fourier(const BooleanFunction& f);
FourierSpectrum fourier_table(int arity, const std::vector<Rational>& values);
// Evaluate sum_S coeff[S] chi_S(x).
Rational evaluate_spectrum(const FourierSpectrum& s, uint32_t x);
int degree(const BooleanFunction& f);

// --- catalog -------------------------------------------------------------

BooleanFunction make_or(int t);
BooleanFunction make_and(int t);
BooleanFunction make_parity(int t);
BooleanFunction make_majority(int t);          // true iff |x| > t/2
BooleanFunction make_threshold(int t, int k);  // true iff |x| >= k
BooleanFunction make_constant(int t, int value);
BooleanFunction make_omb(int t);               // sign(1 + sum (-2)^i x_i)
// OR of m disjoint ANDs of k variables each (m*k variables total).
BooleanFunction make_mp(int m, int k);

// By-name construction, e.g. catalog("or", {{"t","2"}}).
BooleanFunction catalog_function(const std::string& name, int t,
                                 const std::string& params = "");

Predicate predicate_disjointness(int n);  // +1 iff i == 0
Predicate predicate_parity(int n);
Predicate predicate_majority(int n);
Predicate predicate_threshold(int n, int k);
Predicate predicate_constant(int n, int value);
Predicate catalog_predicate(const std::string& name, int n,
                            const std::string& params = "");

// --- decision trees -------------------------------------------------------

struct DecisionTree {
    // var == 0 marks a leaf carrying `leaf`; otherwise 1-based variable
    // index with subtrees for the 0- and 1-branch.
    int var = 0;
    int8_t leaf = 1;
    std::unique_ptr<DecisionTree> zero, one;

    int eval(uint32_t x) const;
    int depth() const;
    // Number of queried nodes along the path taken on input x.
    int path_length(uint32_t x) const;
};

struct MinDepthResult {
    std::unique_ptr<DecisionTree> tree;
    bool optimal;  // exact search for t <= 5, greedy above
};

MinDepthResult min_depth_tree(const BooleanFunction& f);
int decision_tree_depth(const BooleanFunction& f);  // depth of min_depth_tree

}  // namespace patmat
