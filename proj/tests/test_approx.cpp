#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "patmat/approx.hpp"
#include "patmat/protocol.hpp"

using namespace patmat;

namespace {

BooleanFunction random_function(int t, SplitMix64& rng) {
    std::vector<int8_t> table(1u << t);
    for (auto& v : table) v = rng.below(2) ? 1 : -1;
    return BooleanFunction(t, std::move(table));
}

Rational max_error(const BooleanFunction& f, const ApproxResult& r) {
    Rational worst(0);
    FourierSpectrum s{f.arity(), {}};
    s.coeff.assign(f.table_size(), Rational(0));
    for (const auto& [mask, c] : r.coeffs) s.coeff[mask] = c;
    for (uint32_t x = 0; x < f.table_size(); ++x) {
        Rational err = (Rational(f(x)) - evaluate_spectrum(s, x)).abs();
        if (err > worst) worst = err;
    }
    return worst;
}

void check_witness(const BooleanFunction& f, const DualWitness& w) {
    Rational l1(0), corr(0);
    for (uint32_t x = 0; x < f.table_size(); ++x) {
        l1 += w.values[x].abs();
        corr += w.values[x] * Rational(f(x));
    }
    CHECK(l1 == Rational(1));
    CHECK(corr == w.value);
    auto hat = fourier_table(f.arity(), w.values);
    for (uint32_t s = 0; s < hat.coeff.size(); ++s)
        if (__builtin_popcount(s) < w.d) CHECK(hat.coeff[s].is_zero());
}

}  // namespace

TEST_CASE("uniform approximation of OR_2") {
    BooleanFunction f = make_or(2);
    auto r = best_approx(f, 1);
    CHECK(r.value == Rational(1, 2));
    CHECK(max_error(f, r) == Rational(1, 2));
    CHECK(r.coeffs.at(0) == Rational(-1, 2));
    CHECK(r.coeffs.at(1) == Rational(1, 2));
    CHECK(r.coeffs.at(2) == Rational(1, 2));
    CHECK(best_approx(f, 2).value == Rational(0));
    CHECK(approx_degree(f, Rational(1, 3)) == 2);
}

TEST_CASE("parity resists all lower degrees") {
    for (int t = 1; t <= 4; ++t) {
        BooleanFunction f = make_parity(t);
        CHECK(best_approx(f, t - 1).value == Rational(1));
        CHECK(best_approx(f, t).value == Rational(0));
        CHECK(approx_degree(f, Rational(9, 10)) == t);
    }
}

TEST_CASE("E is monotone in d and vanishes at full degree") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        int t = 1 + static_cast<int>(rng.below(4));
        BooleanFunction f = random_function(t, rng);
        auto prof = e_profile(f);
        for (std::size_t d = 1; d < prof.size(); ++d) CHECK(prof[d] <= prof[d - 1]);
        CHECK(prof.back() == Rational(0));
        for (auto& e : prof) {
            CHECK(e >= Rational(0));
            CHECK(e <= Rational(1));
        }
        // exact interpolation reproduces the function
        auto full = best_approx(f, t);
        CHECK(max_error(f, full) == Rational(0));
    }
}

TEST_CASE("dual witness for OR_2 is the top character over four points") {
    BooleanFunction f = make_or(2);
    DualWitness w = dual_witness(f, Rational(1, 3));
    CHECK(w.d == 2);
    CHECK(w.value == Rational(1, 2));
    check_witness(f, w);
    // the optimum here is unique: psi = chi_{12}/4
    for (uint32_t x = 0; x < 4; ++x)
        CHECK(w.values[x] == Rational(character(3u, x), 4));
}

TEST_CASE("dual witness for parity is the scaled function") {
    for (int t = 2; t <= 4; ++t) {
        BooleanFunction f = make_parity(t);
        DualWitness w = dual_witness(f, Rational(1, 2));
        CHECK(w.d == t);
        CHECK(w.value == Rational(1));
        check_witness(f, w);
        for (uint32_t x = 0; x < f.table_size(); ++x)
            CHECK(w.values[x] == Rational(f(x)) * Rational::pow2(-t));
    }
}

TEST_CASE("random witnesses satisfy every invariant") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        BooleanFunction f = random_function(3, rng);
        if (best_approx(f, 0).value <= Rational(1, 3)) continue;
        DualWitness w = dual_witness(f, Rational(1, 3));
        CHECK(w.value > Rational(1, 3));
        check_witness(f, w);
    }
    CHECK_THROWS_AS(dual_witness(make_constant(2, 1), Rational(1, 3)), std::domain_error);
}

TEST_CASE("strong duality holds at every degree including E = 0") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        int t = 1 + static_cast<int>(rng.below(3));
        BooleanFunction f = random_function(t, rng);
        auto prof = e_profile(f);
        for (int d = 0; d <= t; ++d) {
            DualWitness w = dual_witness_at(f, d);
            CHECK(w.value == prof[d]);
            Rational l1(0);
            for (const auto& v : w.values) l1 += v.abs();
            if (d < t) CHECK(l1 == Rational(1));
            auto hat = fourier_table(t, w.values);
            for (uint32_t s = 0; s < hat.coeff.size(); ++s)
                if (__builtin_popcount(s) <= d) CHECK(hat.coeff[s].is_zero());
        }
    }
}

TEST_CASE("threshold degree") {
    for (int t = 1; t <= 4; ++t) CHECK(threshold_degree(make_or(t)) == 1);
    for (int t = 1; t <= 4; ++t) CHECK(threshold_degree(make_parity(t)) == t);
    CHECK(threshold_degree(make_constant(3, -1)) == 0);
    CHECK(threshold_degree(make_mp(2, 2)) == 2);

    // cross-check: least d with E(f,d) < 1
    SplitMix64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        BooleanFunction f = random_function(3, rng);
        int via_e = 0;
        auto prof = e_profile(f);
        while (prof[via_e] == Rational(1)) ++via_e;
        CHECK(threshold_degree(f) == via_e);
    }
}

TEST_CASE("orthogonalizing distributions") {
    BooleanFunction par2 = make_parity(2);
    auto od = ortho_distribution(par2, 2);
    REQUIRE(od.has_value());
    Rational total(0);
    for (uint32_t x = 0; x < 4; ++x) {
        CHECK(od->weights[x] >= Rational(0));
        total += od->weights[x];
    }
    CHECK(total == Rational(1));
    for (uint32_t s = 0; s < 4; ++s) {
        if (__builtin_popcount(s) >= 2) continue;
        Rational c(0);
        for (uint32_t x = 0; x < 4; ++x)
            c += od->weights[x] * Rational(par2(x) * character(s, x));
        CHECK(c.is_zero());
    }

    // beyond the threshold degree: infeasible, reported not thrown
    CHECK_FALSE(ortho_distribution(make_or(2), 2).has_value());

    auto mp = make_mp(2, 2);
    auto od_mp = ortho_distribution(mp, threshold_degree(mp));
    CHECK(od_mp.has_value());
}

TEST_CASE("real threshold weight") {
    BooleanFunction f = make_or(2);
    auto wr = weight_real(f, 1);
    REQUIRE(wr.feasible);
    CHECK(wr.value == Rational(3));  // matches the integer optimum here
    CHECK_FALSE(weight_real(make_parity(2), 1).feasible);

    // 1/(1 - E) <= W_R always
    SplitMix64 rng(25);
    for (int trial = 0; trial < 10; ++trial) {
        BooleanFunction g = random_function(3, rng);
        auto prof = e_profile(g);
        for (int d = 0; d <= 3; ++d) {
            auto w = weight_real(g, d);
            CHECK(w.feasible == (prof[d] < Rational(1)));
            if (w.feasible)
                CHECK(Rational(1) <= w.value * (Rational(1) - prof[d]));
        }
    }
}

TEST_CASE("integer rounding certificates") {
    BooleanFunction f = make_or(2);
    auto cert = weight_int_upper(f, 1);
    CHECK(certificate_sign_represents(cert, f));
    CHECK(cert.weight <= 20);  // floor of (2/(1-E)) N^{3/2} = 4 * 3^{3/2}
    // squared form of the bound, checked exactly: w^2 (1-E)^2 <= 4 N^3
    Rational e = best_approx(f, 1).value;
    Rational lhs = Rational(cert.weight) * Rational(cert.weight) *
                   (Rational(1) - e) * (Rational(1) - e);
    CHECK(lhs <= Rational(4) * Rational(27));

    auto par = weight_int_upper(make_parity(3), 3);
    CHECK(par.weight == 1);  // gcd reduction leaves the bare character
    CHECK(certificate_sign_represents(par, make_parity(3)));

    // an explicit slack parameter below 1 - E still produces a valid
    // certificate, just with larger coefficients before reduction
    auto slack = weight_int_upper(f, 1, Rational(1, 4));
    CHECK(certificate_sign_represents(slack, f));
    CHECK_THROWS_AS(weight_int_upper(f, 1, Rational(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(weight_int_upper(f, 1, Rational(0)), std::invalid_argument);

    CHECK_THROWS_AS(weight_int_upper(make_parity(2), 1), std::domain_error);
}

TEST_CASE("omb coefficients in the character basis sign-represent") {
    // 1 - 2 x1 + 4 x2 = 2 + chi_1 - 2 chi_2
    WeightCertificate cert;
    cert.d = 2;
    cert.lambda[0] = 2;
    cert.lambda[1] = 1;
    cert.lambda[2] = -2;
    cert.weight = 5;
    CHECK(certificate_sign_represents(cert, make_omb(2)));
    auto rounded = weight_int_upper(make_omb(2), 2);
    CHECK(certificate_sign_represents(rounded, make_omb(2)));
}

TEST_CASE("brute-force weight") {
    CHECK(weight_bruteforce(make_or(2), 1, 12) == 3);
    CHECK_FALSE(weight_bruteforce(make_parity(2), 1, 12).has_value());
    CHECK(weight_bruteforce(make_parity(2), 2, 12) == 1);
    CHECK_THROWS_AS(weight_bruteforce(make_parity(4), 4, 12), std::length_error);
    CHECK_THROWS_AS(weight_bruteforce(make_or(2), 1, 13), std::length_error);
}

TEST_CASE("weight dual distributions") {
    BooleanFunction f = make_or(2);
    auto wd = weight_dual_distribution(f, 1);
    CHECK(wd.value >= Rational(1, 3));                    // >= 1/W with W = 3
    CHECK(wd.value * wd.value <= Rational(4, 3));         // <= sqrt(2t/W) squared
    Rational total(0);
    for (const auto& m : wd.mu) total += m;
    CHECK(total == Rational(1));

    CHECK(weight_dual_distribution(make_parity(2), 1).value == Rational(0));

    auto cd = weight_dual_distribution(make_constant(2, 1), 0);
    CHECK(cd.value == Rational(1));
}

TEST_CASE("weight-lower inequality for random distributions") {
    SplitMix64 rng(26);
    std::vector<BooleanFunction> fns;
    for (int t = 1; t <= 2; ++t)
        for (uint64_t word = 0; word < (1ull << (1u << t)); ++word) {
            std::vector<int8_t> table(1u << t);
            for (uint32_t x = 0; x < table.size(); ++x) table[x] = (word >> x) & 1 ? -1 : 1;
            fns.emplace_back(t, std::move(table));
        }
    for (int trial = 0; trial < 24; ++trial) fns.push_back(random_function(3, rng));
    for (const auto& f : fns) {
        for (int d = threshold_degree(f); d <= f.arity(); ++d) {
            auto w = weight_bruteforce(f, d, 12);
            if (!w) continue;
            for (int rep = 0; rep < 100; ++rep) {
                // random rational distribution
                std::vector<long> raw(f.table_size());
                long sum = 0;
                for (auto& v : raw) { v = static_cast<long>(rng.below(8)); sum += v; }
                if (sum == 0) continue;
                Rational best(0);
                for (uint32_t s = 0; s < f.table_size(); ++s) {
                    if (__builtin_popcount(s) > d) continue;
                    Rational c(0);
                    for (uint32_t x = 0; x < f.table_size(); ++x)
                        c += Rational(raw[x], sum) * Rational(f(x) * character(s, x));
                    if (c.abs() > best) best = c.abs();
                }
                CHECK(best * Rational(*w) >= Rational(1));
            }
        }
    }
}

TEST_CASE("strong duality on sampled functions of four variables") {
    SplitMix64 rng(27);
    for (int trial = 0; trial < 12; ++trial) {
        BooleanFunction f = random_function(4, rng);
        auto prof = e_profile(f);
        for (int d = 0; d < 4; ++d) {
            DualWitness w = dual_witness_at(f, d);
            Rational l1(0), corr(0);
            for (uint32_t x = 0; x < f.table_size(); ++x) {
                l1 += w.values[x].abs();
                corr += w.values[x] * Rational(f(x));
            }
            CHECK(l1 == Rational(1));
            CHECK(corr == prof[d]);
        }
    }
}

TEST_CASE("exact interpolation caps the real weight") {
    SplitMix64 rng(28);
    for (int trial = 0; trial < 10; ++trial) {
        int t = 2 + static_cast<int>(rng.below(2));
        BooleanFunction f = random_function(t, rng);
        auto spec = fourier(f);
        Rational coeff_mass(0);
        for (const auto& c : spec.coeff) coeff_mass += c.abs();
        auto wr = weight_real(f, t);
        REQUIRE(wr.feasible);
        // the scaled function itself sign-represents, so W_R <= sum |f_hat|,
        // which is at most 2^t / max |f_hat|
        CHECK(wr.value <= coeff_mass);
        CHECK(coeff_mass * spec.max_abs() <= Rational::pow2(t));
    }
}

TEST_CASE("symmetric reduction agrees with the generic program") {
    for (int t = 1; t <= 4; ++t) {
        std::vector<BooleanFunction> fns = {make_or(t), make_parity(t), make_majority(t),
                                            make_threshold(t, (t + 1) / 2)};
        for (const auto& f : fns) {
            Predicate d(t, [&] {
                std::vector<int8_t> v(t + 1);
                for (int i = 0; i <= t; ++i) v[i] = f((1u << i) - 1);
                return v;
            }());
            for (int deg = 0; deg <= t; ++deg)
                CHECK(sym_best_error(d.values, deg) == best_approx(f, deg).value);
            CHECK(sym_approx_degree(d.values, Rational(1, 3)) ==
                  approx_degree(f, Rational(1, 3)));
        }
    }
}

TEST_CASE("float mode matches the symmetric reduction at nine variables") {
    Predicate maj = predicate_majority(9);
    BooleanFunction f = from_predicate(maj, 9);
    for (int d : {1, 3, 7}) {
        double want = sym_best_error(maj.values, d).to_double();
        CHECK(best_approx_float(f, d) == doctest::Approx(want).epsilon(1e-7));
    }
}

TEST_CASE("float mode tracks exact mode") {
    for (int t = 2; t <= 4; ++t) {
        BooleanFunction f = make_majority(t);
        for (int d = 0; d <= t; ++d) {
            double want = best_approx(f, d).value.to_double();
            CHECK(best_approx_float(f, d) == doctest::Approx(want).epsilon(1e-8));
        }
    }
    CHECK(approx_degree_float(make_or(4), 1.0 / 3) == approx_degree(make_or(4), Rational(1, 3)));
}
