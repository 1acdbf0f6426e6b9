#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "patmat/boolfn.hpp"
#include "patmat/matrix.hpp"
#include "patmat/rational.hpp"

namespace patmat {

// Real-valued function table on {0,1}^t.
struct PhiTable {
    int arity;
    std::vector<Rational> values;

    PhiTable(int t, std::vector<Rational> v);
    static PhiTable from_function(const BooleanFunction& f);
    // phi = sum_{S} coeffs[S] chi_S.
    static PhiTable from_spectrum(int t, const std::map<uint32_t, Rational>& coeffs);
};

// (n, t, phi) with t | n, t < n. The matrix has 2^n rows and (n/t)^t 2^t
// columns; rows are indexed by x ascending, columns by (V, w) with the
// block digits of V big-endian and w in the low bits.
struct PatternSpec {
    int n, t;
    PhiTable phi;

    PatternSpec(int n_, int t_, PhiTable phi_);
    int block() const { return n / t; }  // n/t
    uint64_t num_rows() const { return 1ull << n; }
    uint64_t num_cols() const;
    uint64_t num_entries() const { return num_rows() * num_cols(); }
};

struct ColumnIndex {
    std::vector<int> v_digits;  // t digits, each in [0, n/t)
    uint32_t w = 0;
};

ColumnIndex column_of(uint64_t ordinal, int n, int t);
uint64_t ordinal_of(const ColumnIndex& col, int n, int t);

// t-bit mask with bit j-1 = bit of x at V's j-th element.
uint32_t project(uint32_t x, const ColumnIndex& col, int n, int t);

// z such that the matrix entry at (x, col) is phi(z).
inline uint32_t pattern_input(uint32_t x, const ColumnIndex& col, int n, int t) {
    return project(x, col, n, t) ^ col.w;
}

// Dense construction; throws std::length_error above 2^20 entries.
RationalMatrix build(const PatternSpec& spec);
RationalMatrix build_sign(int n, int t, const BooleanFunction& f);

// One line of the closed-form spectrum: all S subsets sharing the exact
// squared singular value, with total multiplicity.
struct SpectrumEntry {
    Rational sigma_sq;
    double sigma;
    uint64_t multiplicity;
};

struct SingularSpectrum {
    std::vector<SpectrumEntry> entries;  // descending by sigma_sq, all nonzero

    uint64_t rank() const;
    Rational frobenius_sq() const;  // sum mult * sigma^2, exact
    std::vector<double> expand() const;  // sigma repeated by multiplicity
    double top() const { return entries.empty() ? 0.0 : entries.front().sigma; }
    Rational top_sq() const { return entries.empty() ? Rational(0) : entries.front().sigma_sq; }
    double trace_norm() const;
};

// Exact spectrum from the closed form: for each S with phi_hat(S) != 0 the
// value sqrt(2^{n+t} (n/t)^t) |phi_hat(S)| (t/n)^{|S|/2} with multiplicity
// (n/t)^{|S|}; collisions are grouped exactly on sigma^2.
SingularSpectrum spectrum_formula(const PatternSpec& spec);

double pattern_spectral_norm(const PatternSpec& spec);
uint64_t rank_exact(const PatternSpec& spec);

// The unit-l1 witness matrix of a function psi on {0,1}^t with
// sum |psi| = 1: the (n, t, 2^-n (n/t)^-t psi) construction.
RationalMatrix witness_matrix(int n, int t, const std::vector<Rational>& psi);
PatternSpec witness_spec(int n, int t, const std::vector<Rational>& psi);

// Both products of the chi_S- and chi_T-generated matrices vanish.
bool verify_sum_lemma(uint32_t s_mask, uint32_t t_mask, int n, int t);

// FNV-1a over the canonical "p/q" strings of the table, in index order.
uint64_t phi_hash(const PhiTable& phi);

// One header line "# n=<n> t=<t> phi_hash=<hex>", then one CSV row of exact
// rationals per matrix row.
void export_matrix_csv(std::ostream& os, const PatternSpec& spec);

}  // namespace patmat
