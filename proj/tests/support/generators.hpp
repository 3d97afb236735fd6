#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "matfix/solver.hpp"

namespace matfix::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return normal_(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    ComplexMatrix gaussian(Index rows, Index cols, bool complex) {
        ComplexMatrix m(rows, cols);
        for (Index j = 0; j < cols; ++j) {
            for (Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(), complex ? normal() : 0.0);
        }
        return m;
    }

    /// Hermitian with eigenvalues in [lo, hi].
    HermitianMatrix hermitian(Index n, bool complex, double lo, double hi) {
        const Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(n, n, complex));
        const ComplexMatrix u = qr.householderQ();
        Eigen::VectorXd d(n);
        for (Index i = 0; i < n; ++i) d(i) = uniform(lo, hi);
        return HermitianMatrix::from_lower(u * d.cast<Complex>().asDiagonal() * u.adjoint());
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

/// Random valid instance with sum ||A_i||^2 = strength * lambda_min(Q)^2.
inline EquationInstance random_instance(Rng& rng, Index n, std::size_t m, bool complex, double strength) {
    const HermitianMatrix q = rng.hermitian(n, complex, 0.5, 3.0);
    const double qmin = eig_extremes(q).min;
    std::vector<double> w(m);
    double total = 0.0;
    for (auto& wi : w) total += (wi = rng.uniform(0.2, 1.0));
    std::vector<ComplexMatrix> a;
    for (std::size_t i = 0; i < m; ++i) {
        const ComplexMatrix g = rng.gaussian(n, n, complex);
        a.push_back(g * (std::sqrt(strength * w[i] / total) * qmin / spectral_norm(g)));
    }
    return EquationInstance::create(std::move(a), q);
}

/// Directions with the given spectral norms.
inline std::vector<ComplexMatrix> random_deltas(Rng& rng, Index n, const std::vector<double>& norms, bool complex) {
    std::vector<ComplexMatrix> out;
    for (const double v : norms) {
        const ComplexMatrix g = rng.gaussian(n, n, complex);
        out.push_back(g * (v / spectral_norm(g)));
    }
    return out;
}

inline std::vector<ComplexMatrix> zero_coefficients(Index n, std::size_t m) {
    return std::vector<ComplexMatrix>(m, ComplexMatrix::Zero(n, n));
}

inline SolveReport tight_solve(const EquationInstance& instance, StartPolicy start = StartFromQ{}) {
    SolveSettings s;
    s.start = std::move(start);
    s.tol = 1e-13;
    s.max_iter = 20000;
    return solve(instance, s);
}

inline EquationInstance with_coefficients(const EquationInstance& base, const std::vector<ComplexMatrix>& da,
                                          const HermitianMatrix* dq = nullptr) {
    std::vector<ComplexMatrix> a = base.a();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += da[i];
    return EquationInstance::create(std::move(a), dq ? base.q() + *dq : base.q());
}

inline double spectral_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
    return spectral_norm(ComplexMatrix(a.matrix() - b.matrix()));
}

}  // namespace matfix::testing
