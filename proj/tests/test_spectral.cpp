#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "patmat/matrix.hpp"
#include "patmat/protocol.hpp"
#include "patmat/spectral.hpp"

using namespace patmat;

namespace {

// Independent oracle: characteristic polynomial by the Faddeev-LeVerrier
// recurrence in exact rationals, roots isolated by grid scan + bisection.
std::vector<Rational> char_poly(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    RationalMatrix m = a;
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    c[n - 1] = -m.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        m = a * m;
        c[n - k] = -m.trace() / Rational(static_cast<long>(k));
    }
    return c;  // p(x) = sum c[i] x^i, monic
}

double eval_poly(const std::vector<Rational>& c, double x) {
    double v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i].to_double();
    return v;
}

std::vector<double> roots_by_bisection(const std::vector<Rational>& c, double radius,
                                       std::size_t expect) {
    const int grid = 4096;
    std::vector<double> roots;
    double prev_x = -radius, prev_v = eval_poly(c, prev_x);
    for (int i = 1; i <= grid; ++i) {
        double x = -radius + 2 * radius * i / grid;
        double v = eval_poly(c, x);
        if (prev_v == 0) roots.push_back(prev_x);
        else if (prev_v * v < 0) {
            double lo = prev_x, hi = x;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (lo + hi);
                double mv = eval_poly(c, mid);
                if (mv == 0) { lo = hi = mid; break; }
                if (mv * prev_v < 0) hi = mid;
                else lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_v = v;
    }
    REQUIRE(roots.size() == expect);
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return roots;
}

FloatMatrix random_matrix(std::size_t r, std::size_t cdim, SplitMix64& rng) {
    FloatMatrix m(r, cdim);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cdim; ++j)
            m.at(i, j) = (static_cast<double>(rng.below(2001)) - 1000.0) / 250.0;
    return m;
}

}  // namespace

TEST_CASE("identity and rank-one spectra") {
    FloatMatrix id(2, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    auto eig = sym_eigenvalues(id);
    CHECK(eig[0] == doctest::Approx(1.0));
    CHECK(eig[1] == doctest::Approx(1.0));

    FloatMatrix ones(4, 4, 1.0);
    eig = sym_eigenvalues(ones);
    CHECK(eig[0] == doctest::Approx(4.0));
    for (int i = 1; i < 4; ++i) CHECK(eig[i] == doctest::Approx(0.0).epsilon(1e-12));

    auto sv = singular_values(ones);
    CHECK(sv[0] == doctest::Approx(4.0));
    CHECK(sv[3] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("diagonal singular values take absolute values") {
    FloatMatrix d(2, 2);
    d.at(0, 0) = 3;
    d.at(1, 1) = -2;
    auto sv = singular_values(d);
    CHECK(sv[0] == doctest::Approx(3.0));
    CHECK(sv[1] == doctest::Approx(2.0));
}

TEST_CASE("random symmetric 8x8 matches the characteristic polynomial oracle") {
    SplitMix64 rng(2024);
    RationalMatrix a(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i; j < 8; ++j) {
            Rational v(static_cast<long>(rng.below(41)) - 20, 4);
            a.at(i, j) = a.at(j, i) = v;
        }
    auto got = sym_eigenvalues(to_float(a));
    auto poly = char_poly(a);
    // Gershgorin radius
    double radius = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        double row = 0;
        for (std::size_t j = 0; j < 8; ++j) row += std::fabs(a.at(i, j).to_double());
        radius = std::max(radius, row);
    }
    auto want = roots_by_bisection(poly, radius + 1, 8);
    for (int i = 0; i < 8; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-8));
}

TEST_CASE("eigenvalue sum equals trace") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + rng.below(9);
        FloatMatrix m = random_matrix(n, n, rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) m.at(j, i) = m.at(i, j);
        auto eig = sym_eigenvalues(m);
        double sum = 0;
        for (double v : eig) sum += v;
        CHECK(sum == doctest::Approx(m.trace()).epsilon(1e-9));
    }
}

TEST_CASE("frobenius mass equals the sum of squared singular values") {
    SplitMix64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        FloatMatrix m = random_matrix(3 + rng.below(6), 3 + rng.below(6), rng);
        auto sv = singular_values(m);
        double mass = 0;
        for (double v : sv) mass += v * v;
        CHECK(mass == doctest::Approx(m.frobenius_sq()).epsilon(1e-9));
    }
}

TEST_CASE("trace norm of a product is bounded by the frobenius norms") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t k = 2 + rng.below(7);
        FloatMatrix a = random_matrix(2 + rng.below(7), k, rng);
        FloatMatrix b = random_matrix(k, 2 + rng.below(7), rng);
        double lhs = trace_norm(a * b);
        double rhs = std::sqrt(a.frobenius_sq()) * std::sqrt(b.frobenius_sq());
        CHECK(lhs <= rhs + 1e-9);
    }
}

TEST_CASE("inner product bounded by spectral norm times trace norm") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t r = 2 + rng.below(7), c = 2 + rng.below(7);
        FloatMatrix a = random_matrix(r, c, rng);
        FloatMatrix b = random_matrix(r, c, rng);
        CHECK(a.inner(b) <= spectral_norm(a) * trace_norm(b) + 1e-9);
    }
}

TEST_CASE("shape and symmetry validation") {
    FloatMatrix rect(2, 3, 1.0);
    CHECK_THROWS_AS(sym_eigenvalues(rect), std::invalid_argument);
    FloatMatrix asym(2, 2);
    asym.at(0, 1) = 1;
    asym.at(1, 0) = 2;
    CHECK_THROWS_AS(sym_eigenvalues(asym), std::invalid_argument);
}

TEST_CASE("numerical rank threshold") {
    CHECK(numerical_rank({4.0, 2.0, 3e-6, 1e-12}) == 2);
    CHECK(numerical_rank({}) == 0);
}
