#include "patmat/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace patmat {

namespace {
constexpr uint64_t kEntryGate = 1ull << 20;
}

PhiTable::PhiTable(int t, std::vector<Rational> v) : arity(t), values(std::move(v)) {
    if (t < 1 || t > 20) throw std::invalid_argument("PhiTable: bad arity");
    if (values.size() != (1ull << t))
        throw std::invalid_argument("PhiTable: table length != 2^t");
}

PhiTable PhiTable::from_function(const BooleanFunction& f) {
    std::vector<Rational> v(f.table_size());
    for (uint32_t x = 0; x < f.table_size(); ++x) v[x] = Rational(f(x));
    return PhiTable(f.arity(), std::move(v));
}

PhiTable PhiTable::from_spectrum(int t, const std::map<uint32_t, Rational>& coeffs) {
    std::vector<Rational> v(1ull << t, Rational(0));
    for (uint32_t x = 0; x < v.size(); ++x)
        for (const auto& [mask, c] : coeffs) {
            if (c.is_zero()) continue;
            if (character(mask, x) > 0) v[x] += c;
            else v[x] -= c;
        }
    return PhiTable(t, std::move(v));
}

PatternSpec::PatternSpec(int n_, int t_, PhiTable phi_) : n(n_), t(t_), phi(std::move(phi_)) {
    if (t < 1 || t >= n) throw std::invalid_argument("PatternSpec: need 1 <= t < n");
    if (n % t != 0) throw std::invalid_argument("PatternSpec: t must divide n");
    if (phi.arity != t) throw std::invalid_argument("PatternSpec: phi arity mismatch");
    if (n > 26) throw std::length_error("PatternSpec: n too large");
}

uint64_t PatternSpec::num_cols() const {
    uint64_t c = 1;
    for (int j = 0; j < t; ++j) c *= static_cast<uint64_t>(block());
    return c << t;
}

ColumnIndex column_of(uint64_t ordinal, int n, int t) {
    const uint64_t q = static_cast<uint64_t>(n / t);
    ColumnIndex col;
    col.w = static_cast<uint32_t>(ordinal & ((1ull << t) - 1));
    uint64_t v = ordinal >> t;
    col.v_digits.assign(t, 0);
    for (int j = t - 1; j >= 0; --j) {
        col.v_digits[j] = static_cast<int>(v % q);
        v /= q;
    }
    return col;
}

uint64_t ordinal_of(const ColumnIndex& col, int n, int t) {
    const uint64_t q = static_cast<uint64_t>(n / t);
    uint64_t v = 0;
    for (int j = 0; j < t; ++j) v = v * q + static_cast<uint64_t>(col.v_digits[j]);
    return (v << t) | col.w;
}

uint32_t project(uint32_t x, const ColumnIndex& col, int n, int t) {
    const int q = n / t;
    uint32_t out = 0;
    for (int j = 0; j < t; ++j) {
        int pos = j * q + col.v_digits[j];  // 0-based bit position in x
        out |= ((x >> pos) & 1u) << j;
    }
    return out;
}

RationalMatrix build(const PatternSpec& spec) {
    if (spec.num_entries() > kEntryGate)
        throw std::length_error("build: pattern matrix exceeds the 2^20 entry gate");
    const uint64_t rows = spec.num_rows(), cols = spec.num_cols();
    RationalMatrix m(rows, cols);
    std::vector<ColumnIndex> columns(cols);
    for (uint64_t c = 0; c < cols; ++c) columns[c] = column_of(c, spec.n, spec.t);
    for (uint64_t r = 0; r < rows; ++r)
        for (uint64_t c = 0; c < cols; ++c) {
            uint32_t z = pattern_input(static_cast<uint32_t>(r), columns[c], spec.n, spec.t);
            m.at(r, c) = spec.phi.values[z];
        }
    return m;
}

RationalMatrix build_sign(int n, int t, const BooleanFunction& f) {
    return build(PatternSpec(n, t, PhiTable::from_function(f)));
}

uint64_t SingularSpectrum::rank() const {
    uint64_t r = 0;
    for (const auto& e : entries) r += e.multiplicity;
    return r;
}

Rational SingularSpectrum::frobenius_sq() const {
    Rational s(0);
    for (const auto& e : entries) s += Rational(static_cast<long>(e.multiplicity)) * e.sigma_sq;
    return s;
}

std::vector<double> SingularSpectrum::expand() const {
    std::vector<double> out;
    for (const auto& e : entries)
        for (uint64_t i = 0; i < e.multiplicity; ++i) out.push_back(e.sigma);
    return out;
}

double SingularSpectrum::trace_norm() const {
    double s = 0;
    for (const auto& e : entries) s += static_cast<double>(e.multiplicity) * e.sigma;
    return s;
}

SingularSpectrum spectrum_formula(const PatternSpec& spec) {
    const int t = spec.t;
    const uint64_t q = static_cast<uint64_t>(spec.block());
    FourierSpectrum hat = fourier_table(t, spec.phi.values);
    // sigma^2 = 2^{n+t} (n/t)^{t-|S|} phi_hat(S)^2, multiplicity (n/t)^{|S|}
    Rational base = Rational::pow2(spec.n + t);
    std::map<Rational, uint64_t> groups;
    for (uint32_t s = 0; s < (1u << t); ++s) {
        if (hat.coeff[s].is_zero()) continue;
        int level = __builtin_popcount(s);
        Rational qpow(1);
        uint64_t mult = 1;
        for (int i = 0; i < t - level; ++i) qpow *= Rational(static_cast<long>(q));
        for (int i = 0; i < level; ++i) mult *= q;
        Rational sigma_sq = base * qpow * hat.coeff[s] * hat.coeff[s];
        groups[sigma_sq] += mult;
    }
    SingularSpectrum out;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it)
        out.entries.push_back(SpectrumEntry{it->first, std::sqrt(it->first.to_double()), it->second});
    return out;
}

double pattern_spectral_norm(const PatternSpec& spec) {
    return spectrum_formula(spec).top();
}

uint64_t rank_exact(const PatternSpec& spec) {
    return spectrum_formula(spec).rank();
}

PatternSpec witness_spec(int n, int t, const std::vector<Rational>& psi) {
    if (psi.size() != (1ull << t)) throw std::invalid_argument("witness_spec: psi length != 2^t");
    Rational l1(0);
    for (const auto& v : psi) l1 += v.abs();
    if (l1 != Rational(1))
        throw std::invalid_argument("witness_spec: psi must have unit l1 mass");
    Rational scale = Rational::pow2(-n);
    const uint64_t q = static_cast<uint64_t>(n / t);
    Rational qt(1);
    for (int i = 0; i < t; ++i) qt *= Rational(static_cast<long>(q));
    scale /= qt;
    std::vector<Rational> phi(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) phi[i] = psi[i] * scale;
    return PatternSpec(n, t, PhiTable(t, std::move(phi)));
}

RationalMatrix witness_matrix(int n, int t, const std::vector<Rational>& psi) {
    return build(witness_spec(n, t, psi));
}

uint64_t phi_hash(const PhiTable& phi) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    };
    for (const auto& v : phi.values) mix(v.str());
    return h;
}

void export_matrix_csv(std::ostream& os, const PatternSpec& spec) {
    RationalMatrix m = build(spec);
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(phi_hash(spec.phi)));
    os << "# n=" << spec.n << " t=" << spec.t << " phi_hash=" << hex << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m.at(r, c).str();
        }
        os << "\n";
    }
}

bool verify_sum_lemma(uint32_t s_mask, uint32_t t_mask, int n, int t) {
    if (s_mask == t_mask)
        throw std::invalid_argument("verify_sum_lemma: masks must be distinct");
    auto chi_table = [&](uint32_t mask) {
        std::vector<Rational> v(1ull << t);
        for (uint32_t x = 0; x < v.size(); ++x) v[x] = Rational(character(mask, x));
        return PhiTable(t, std::move(v));
    };
    RationalMatrix a = build(PatternSpec(n, t, chi_table(s_mask)));
    RationalMatrix b = build(PatternSpec(n, t, chi_table(t_mask)));
    RationalMatrix ab = a * b.transposed();
    for (const auto& v : ab.entries())
        if (!v.is_zero()) return false;
    RationalMatrix atb = a.transposed() * b;
    for (const auto& v : atb.entries())
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace patmat
