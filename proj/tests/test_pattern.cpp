#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "patmat/approx.hpp"
#include "patmat/pattern.hpp"
#include "patmat/protocol.hpp"
#include "patmat/spectral.hpp"

using namespace patmat;

namespace {

PhiTable chi_table(int t, uint32_t mask) {
    std::vector<Rational> v(1ull << t);
    for (uint32_t x = 0; x < v.size(); ++x) v[x] = Rational(character(mask, x));
    return PhiTable(t, std::move(v));
}

void check_spectrum_vs_svd(const PatternSpec& spec) {
    auto formula = spectrum_formula(spec).expand();
    auto sv = singular_values(build(spec));
    REQUIRE(formula.size() <= sv.size());
    for (std::size_t i = 0; i < formula.size(); ++i)
        CHECK(sv[i] == doctest::Approx(formula[i]).epsilon(1e-9));
    for (std::size_t i = formula.size(); i < sv.size(); ++i)
        if (!formula.empty()) CHECK(sv[i] <= 1e-7 * formula.front());
}

}  // namespace

TEST_CASE("column indexing round-trips and projects") {
    const int n = 4, t = 2;
    PatternSpec spec(n, t, chi_table(t, 0));
    for (uint64_t c = 0; c < spec.num_cols(); ++c) {
        ColumnIndex col = column_of(c, n, t);
        CHECK(ordinal_of(col, n, t) == c);
    }
    // x = all ones projects to all ones
    ColumnIndex col = column_of(5, n, t);
    CHECK(project(0xF, col, n, t) == 0x3);
    // n=2, t=1: x with only variable 2 set, V = {2}
    ColumnIndex v2;
    v2.v_digits = {1};
    v2.w = 0;
    CHECK(project(0b10, v2, 2, 1) == 1);
    // n=4, t=2: x = 0101 pattern (variables 1 and 3 set), V = {1,3}
    ColumnIndex v13;
    v13.v_digits = {0, 0};
    v13.w = 0;
    CHECK(project(0b0101, v13, 4, 2) == 0b11);
}

TEST_CASE("building small pattern matrices") {
    PatternSpec ones(2, 1, PhiTable(1, {Rational(1), Rational(1)}));
    RationalMatrix m = build(ones);
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 4);
    for (const auto& v : m.entries()) CHECK(v == Rational(1));

    // (2,1,chi_1): row x=00 reads (1,-1,1,-1)
    RationalMatrix c = build(PatternSpec(2, 1, chi_table(1, 1)));
    CHECK(c.at(0, 0) == Rational(1));
    CHECK(c.at(0, 1) == Rational(-1));
    CHECK(c.at(0, 2) == Rational(1));
    CHECK(c.at(0, 3) == Rational(-1));

    // column sums of the (4,2,OR_2) matrix: every column sees each z with
    // multiplicity 2^{n-t}, so its sum is 2^{n-t} * sum_z f(z) = 4 * (-2)
    RationalMatrix orm = build_sign(4, 2, make_or(2));
    REQUIRE(orm.rows() == 16);
    REQUIRE(orm.cols() == 16);
    for (std::size_t col = 0; col < 16; ++col) {
        Rational s(0);
        for (std::size_t r = 0; r < 16; ++r) s += orm.at(r, col);
        CHECK(s == Rational(-8));
    }

    CHECK_THROWS_AS(build(PatternSpec(22, 2, chi_table(2, 0))), std::length_error);
    CHECK_THROWS_AS(PatternSpec(4, 3, chi_table(3, 0)), std::invalid_argument);
}

TEST_CASE("closed-form spectrum matches the svd") {
    // (2,1,chi_1): 2*sqrt(2) with multiplicity 2
    PatternSpec spec(2, 1, chi_table(1, 1));
    auto sp = spectrum_formula(spec);
    REQUIRE(sp.entries.size() == 1);
    CHECK(sp.entries[0].sigma == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(sp.entries[0].multiplicity == 2);
    CHECK(sp.entries[0].sigma_sq == Rational(8));
    CHECK(sp.frobenius_sq() == Rational(16));
    check_spectrum_vs_svd(spec);

    // (2,1,constant 1): all-ones, sigma = 4 once
    PatternSpec ones(2, 1, PhiTable(1, {Rational(1), Rational(1)}));
    auto so = spectrum_formula(ones);
    REQUIRE(so.entries.size() == 1);
    CHECK(so.entries[0].sigma == doctest::Approx(4.0));
    CHECK(so.entries[0].multiplicity == 1);
    check_spectrum_vs_svd(ones);

    // (4,2,OR_2): top value 8, rank 9
    PatternSpec orspec(4, 2, PhiTable::from_function(make_or(2)));
    auto sor = spectrum_formula(orspec);
    CHECK(pattern_spectral_norm(orspec) == doctest::Approx(8.0));
    CHECK(sor.rank() == 9);
    CHECK(sor.frobenius_sq() == Rational(256));
    check_spectrum_vs_svd(orspec);
}

TEST_CASE("frobenius mass equals entry count times mean phi^2") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        int t = 1 + static_cast<int>(rng.below(2));
        int n = t * static_cast<int>(2 + rng.below(2));
        std::vector<Rational> vals(1ull << t);
        for (auto& v : vals) v = Rational(static_cast<long>(rng.below(17)) - 8, 8);
        PatternSpec spec(n, t, PhiTable(t, vals));
        RationalMatrix m = build(spec);
        CHECK(m.frobenius_sq() == spectrum_formula(spec).frobenius_sq());
        check_spectrum_vs_svd(spec);
    }
}

TEST_CASE("exact rank matches the numerical rank") {
    PatternSpec orspec(4, 2, PhiTable::from_function(make_or(2)));
    CHECK(rank_exact(orspec) == 9);
    CHECK(numerical_rank(singular_values(build(orspec))) == 9);

    PatternSpec chi(2, 1, chi_table(1, 1));
    CHECK(rank_exact(chi) == 2);
    CHECK(numerical_rank(singular_values(build(chi))) == 2);

    PatternSpec ones(2, 1, PhiTable(1, {Rational(1), Rational(1)}));
    CHECK(rank_exact(ones) == 1);
}

TEST_CASE("witness matrices have unit mass and exact correlation") {
    BooleanFunction f = make_or(2);
    DualWitness w = dual_witness(f, Rational(1, 3));
    RationalMatrix psi = witness_matrix(4, 2, w.values);
    CHECK(psi.abs_sum() == Rational(1));
    RationalMatrix fm = build_sign(4, 2, f);
    CHECK(fm.inner(psi) == Rational(1, 2));

    // perfect correlation for parity
    BooleanFunction par = make_parity(2);
    std::vector<Rational> pw(4);
    for (uint32_t x = 0; x < 4; ++x) pw[x] = Rational(par(x), 4);
    RationalMatrix ppsi = witness_matrix(4, 2, pw);
    CHECK(ppsi.abs_sum() == Rational(1));
    CHECK(build_sign(4, 2, par).inner(ppsi) == Rational(1));

    // scaled copies are rejected
    std::vector<Rational> doubled(4);
    for (uint32_t x = 0; x < 4; ++x) doubled[x] = Rational(par(x), 2);
    CHECK_THROWS_AS(witness_matrix(4, 2, doubled), std::invalid_argument);
}

TEST_CASE("witness spectral norm obeys the closed-form cap") {
    // ||Psi||^2 <= (t/n)^d / (2^{n+t} (n/t)^t), exactly in sigma^2 form
    struct Case { BooleanFunction f; int n; Rational eps; };
    std::vector<Case> cases = {{make_or(2), 4, Rational(1, 3)},
                               {make_parity(2), 4, Rational(1, 2)},
                               {make_parity(1), 2, Rational(1, 2)}};
    for (const auto& c : cases) {
        int t = c.f.arity();
        DualWitness w = dual_witness(c.f, c.eps);
        PatternSpec spec = witness_spec(c.n, t, w.values);
        Rational cap = Rational::pow(Rational(t, c.n), w.d) /
                       (Rational::pow2(c.n + t) *
                        Rational::pow(Rational(c.n / t), t));
        CHECK(spectrum_formula(spec).top_sq() <= cap);
    }
}

TEST_CASE("distinct characters generate annihilating matrices") {
    CHECK(verify_sum_lemma(0u, 1u, 2, 1));
    CHECK(verify_sum_lemma(1u, 2u, 4, 2));
    CHECK(verify_sum_lemma(3u, 2u, 4, 2));
    CHECK_THROWS_AS(verify_sum_lemma(1u, 1u, 2, 1), std::invalid_argument);
}

TEST_CASE("matrix export carries the header and exact entries") {
    PatternSpec spec(2, 1, chi_table(1, 1));
    std::ostringstream os;
    export_matrix_csv(os, spec);
    std::string text = os.str();
    std::istringstream in(text);
    std::string header, row0;
    std::getline(in, header);
    std::getline(in, row0);
    CHECK(header.rfind("# n=2 t=1 phi_hash=", 0) == 0);
    CHECK(row0 == "1/1,-1/1,1/1,-1/1");

    // same phi, same hash; different phi, different hash
    CHECK(phi_hash(chi_table(1, 1)) == phi_hash(spec.phi));
    CHECK(phi_hash(chi_table(1, 0)) != phi_hash(chi_table(1, 1)));

    std::ostringstream again;
    export_matrix_csv(again, spec);
    CHECK(again.str() == text);
}

TEST_CASE("spectra of orthogonal sums combine") {
    // A = chi_1 pattern, B = chi_2 pattern on (4,2): A B^T = 0 and A^T B = 0,
    // so the nonzero singular values of A + B are the union of both lists.
    PatternSpec sa(4, 2, chi_table(2, 1)), sb(4, 2, chi_table(2, 2));
    RationalMatrix a = build(sa), b = build(sb);
    RationalMatrix sum(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        sum.entries()[i] = a.entries()[i] + b.entries()[i];
    auto sva = singular_values(a), svb = singular_values(b), svs = singular_values(sum);
    std::vector<double> joined;
    for (double v : sva)
        if (v > 1e-6 * sva.front()) joined.push_back(v);
    for (double v : svb)
        if (v > 1e-6 * svb.front()) joined.push_back(v);
    std::sort(joined.begin(), joined.end(), std::greater<double>());
    REQUIRE(joined.size() <= svs.size());
    for (std::size_t i = 0; i < joined.size(); ++i)
        CHECK(svs[i] == doctest::Approx(joined[i]).epsilon(1e-9));
    for (std::size_t i = joined.size(); i < svs.size(); ++i)
        CHECK(svs[i] <= 1e-6 * svs.front());
}
