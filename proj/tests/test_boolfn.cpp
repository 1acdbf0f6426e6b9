#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "patmat/boolfn.hpp"
#include "patmat/protocol.hpp"

using namespace patmat;

namespace {

BooleanFunction random_function(int t, SplitMix64& rng) {
    std::vector<int8_t> table(1u << t);
    for (auto& v : table) v = rng.below(2) ? 1 : -1;
    return BooleanFunction(t, std::move(table));
}

uint32_t permute_bits(uint32_t x, const std::vector<int>& perm) {
    uint32_t y = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((x >> i) & 1u) y |= 1u << perm[i];
    return y;
}

}  // namespace

TEST_CASE("characters") {
    CHECK(character(0u, 0u) == 1);
    CHECK(character(0u, 5u) == 1);
    CHECK(character(3u, 2u) == -1);  // S={1,2}, x has only variable 2 set
    CHECK(character(3u, 3u) == 1);   // even overlap
}

TEST_CASE("fourier transform of named functions") {
    for (int t : {1, 2, 3, 4}) {
        auto spec = fourier(make_parity(t));
        for (uint32_t s = 0; s < (1u << t); ++s) {
            if (s == (1u << t) - 1) CHECK(spec.coeff[s] == Rational(1));
            else CHECK(spec.coeff[s].is_zero());
        }
    }
    auto cspec = fourier(make_constant(3, 1));
    CHECK(cspec.coeff[0] == Rational(1));
    for (uint32_t s = 1; s < 8; ++s) CHECK(cspec.coeff[s].is_zero());

    auto ospec = fourier(make_or(2));
    CHECK(ospec.coeff[0] == Rational(-1, 2));
    CHECK(ospec.coeff[1] == Rational(1, 2));
    CHECK(ospec.coeff[2] == Rational(1, 2));
    CHECK(ospec.coeff[3] == Rational(1, 2));
}

TEST_CASE("inverse transform reproduces the table") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int t = 1 + static_cast<int>(rng.below(6));
        BooleanFunction f = random_function(t, rng);
        auto spec = fourier(f);
        for (uint32_t x = 0; x < f.table_size(); ++x)
            CHECK(evaluate_spectrum(spec, x) == Rational(f(x)));
    }
}

TEST_CASE("parseval holds exactly") {
    SplitMix64 rng(12);
    std::vector<BooleanFunction> fns = {make_or(3), make_and(3), make_parity(4),
                                        make_majority(3), make_omb(3), make_mp(2, 2)};
    for (int trial = 0; trial < 50; ++trial)
        fns.push_back(random_function(1 + static_cast<int>(rng.below(6)), rng));
    for (const auto& f : fns) {
        Rational sum(0);
        auto spec = fourier(f);
        for (const auto& c : spec.coeff) sum += c * c;
        CHECK(sum == Rational(1));  // E_x f(x)^2 = 1 for +-1 tables
    }
}

TEST_CASE("max coefficient bounded by mean absolute value") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        int t = 1 + static_cast<int>(rng.below(5));
        BooleanFunction f = random_function(t, rng);
        auto spec = fourier(f);
        // for +-1 functions the right side is exactly 1
        CHECK(spec.max_abs() <= Rational(1));
        if (spec.max_abs() == Rational(1)) {
            // equality only for +- a character
            int nonzero = 0;
            for (const auto& c : spec.coeff)
                if (!c.is_zero()) ++nonzero;
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("degree") {
    CHECK(degree(make_parity(5)) == 5);
    CHECK(degree(make_constant(4, -1)) == 0);
    CHECK(degree(make_or(2)) == 2);
}

TEST_CASE("predicate-derived functions are symmetric") {
    SplitMix64 rng(14);
    Predicate d = predicate_threshold(6, 2);
    BooleanFunction f = from_predicate(d, 5);
    CHECK(f.is_symmetric());
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
        for (int i = 4; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);
        for (uint32_t x = 0; x < f.table_size(); ++x)
            CHECK(f(x) == f(permute_bits(x, perm)));
    }
    CHECK_THROWS_AS(from_predicate(d, 7), std::invalid_argument);

    CHECK(from_predicate(predicate_disjointness(4), 2) == make_or(2));
    CHECK(from_predicate(predicate_parity(5), 3) == make_parity(3));
}

TEST_CASE("l0 l1 of named predicates") {
    auto disj = l0_l1(predicate_disjointness(8));
    CHECK(disj.l0 == 1);
    CHECK(disj.l1 == 0);

    auto constant = l0_l1(predicate_constant(6, 1));
    CHECK(constant.l0 == 0);
    CHECK(constant.l1 == 0);

    // sign change only at i = n
    std::vector<int8_t> v(7, 1);
    v[6] = -1;
    auto top = l0_l1(Predicate(6, std::move(v)));
    CHECK(top.l0 == 0);
    CHECK(top.l1 == 1);

    auto par = l0_l1(predicate_parity(5));
    CHECK(par.l0 == 2);
    CHECK(par.l1 == 3);

    auto maj = l0_l1(predicate_majority(5));
    CHECK(maj.l0 == 0);
    CHECK(maj.l1 == 3);
}

TEST_CASE("catalog values") {
    // OMB on two variables: sign(1 - 2 x1 + 4 x2)
    BooleanFunction omb2 = make_omb(2);
    CHECK(omb2(0b00) == 1);
    CHECK(omb2(0b01) == -1);  // x1 = 1
    CHECK(omb2(0b10) == 1);   // x2 = 1, sign(5)
    CHECK(omb2(0b11) == 1);   // sign(3)

    CHECK(make_mp(1, 2) == make_and(2));

    BooleanFunction mp22 = make_mp(2, 2);
    for (uint32_t x = 0; x < 16; ++x) {
        bool term1 = (x & 0b0011) == 0b0011;
        bool term2 = (x & 0b1100) == 0b1100;
        CHECK(mp22(x) == ((term1 || term2) ? -1 : 1));
    }

    CHECK_THROWS_AS(make_mp(5, 5), std::length_error);
    CHECK(make_threshold(3, 2)(0b011) == -1);
    CHECK(make_threshold(3, 2)(0b001) == 1);
}

TEST_CASE("hex round-trip") {
    CHECK(make_or(2).to_hex() == "7");
    CHECK(BooleanFunction::from_hex(2, "7") == make_or(2));
    SplitMix64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        int t = 1 + static_cast<int>(rng.below(7));
        BooleanFunction f = random_function(t, rng);
        CHECK(BooleanFunction::from_hex(t, f.to_hex()) == f);
    }
    CHECK_THROWS_AS(BooleanFunction::from_hex(2, "zz"), std::invalid_argument);
    CHECK_THROWS_AS(BooleanFunction::from_hex(3, "7"), std::invalid_argument);
}

TEST_CASE("minimum-depth decision trees") {
    auto constant = min_depth_tree(make_constant(3, -1));
    CHECK(constant.optimal);
    CHECK(constant.tree->depth() == 0);
    CHECK(constant.tree->eval(5) == -1);

    auto parity = min_depth_tree(make_parity(2));
    CHECK(parity.tree->depth() == 2);

    auto orf = min_depth_tree(make_or(2));
    CHECK(orf.tree->depth() == 2);

    SplitMix64 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        int t = 1 + static_cast<int>(rng.below(5));
        BooleanFunction f = random_function(t, rng);
        auto res = min_depth_tree(f);
        CHECK(res.optimal);
        for (uint32_t x = 0; x < f.table_size(); ++x) CHECK(res.tree->eval(x) == f(x));
    }

    // greedy fallback above the exact-search arity
    BooleanFunction big = random_function(6, rng);
    auto greedy = min_depth_tree(big);
    CHECK_FALSE(greedy.optimal);
    for (uint32_t x = 0; x < big.table_size(); ++x) CHECK(greedy.tree->eval(x) == big(x));
}

TEST_CASE("tree depth vs fourier degree, exhaustively to arity 4") {
    for (int t = 1; t <= 4; ++t) {
        for (uint32_t word = 0; word < (1u << (1u << t)); ++word) {
            std::vector<int8_t> table(1u << t);
            for (uint32_t x = 0; x < table.size(); ++x)
                table[x] = (word >> x) & 1u ? -1 : 1;
            BooleanFunction f(t, std::move(table));
            int dt = decision_tree_depth(f);
            int dg = degree(f);
            CHECK(dt <= 2 * dg * dg * dg * dg + (dg == 0 ? 0 : 0));
            if (dg == 0) CHECK(dt == 0);
        }
    }
}
