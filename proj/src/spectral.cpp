#include "patmat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace patmat {

std::vector<double> sym_eigenvalues(const FloatMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("sym_eigenvalues: matrix not square");
    double fro = std::sqrt(m.frobenius_sq());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-12 * std::max(1.0, fro))
                throw std::invalid_argument("sym_eigenvalues: matrix not symmetric");

    std::vector<double> a(m.entries().begin(), m.entries().end());
    auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    auto off_mass = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2 * A(i, j) * A(i, j);
        return std::sqrt(s);
    };

    const double target = 1e-14 * std::max(fro, 1e-300);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_mass() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (apq == 0.0) continue;
                double app = A(p, p), aqq = A(q, q);
                double theta = (aqq - app) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = A(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

std::vector<double> singular_values(const FloatMatrix& m) {
    const std::size_t k = std::min(m.rows(), m.cols());
    if (k == 0) return {};
    FloatMatrix gram = (m.rows() <= m.cols()) ? m * m.transposed() : m.transposed() * m;
    // Symmetrize away rounding asymmetry from the product.
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j) {
            double v = 0.5 * (gram.at(i, j) + gram.at(j, i));
            gram.at(i, j) = gram.at(j, i) = v;
        }
    auto eig = sym_eigenvalues(gram);
    std::vector<double> sv(k);
    for (std::size_t i = 0; i < k; ++i) sv[i] = std::sqrt(std::max(0.0, eig[i]));
    return sv;
}

std::vector<double> singular_values(const RationalMatrix& m) {
    return singular_values(to_float(m));
}

double trace_norm(const FloatMatrix& m) {
    double s = 0;
    for (double v : singular_values(m)) s += v;
    return s;
}

std::size_t numerical_rank(const std::vector<double>& sv) {
    if (sv.empty() || sv.front() <= 0) return 0;
    std::size_t r = 0;
    for (double v : sv)
        if (v > 1e-6 * sv.front()) ++r;
    return r;
}

}  // namespace patmat
