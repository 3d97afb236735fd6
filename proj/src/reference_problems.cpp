#include "matfix/reference_problems.hpp"

#include <cmath>
#include <random>

namespace matfix::reference {

ComplexMatrix tridiagonal5() {
    ComplexMatrix a = ComplexMatrix::Zero(5, 5);
    for (Index i = 0; i < 5; ++i) {
        a(i, i) = 2.0;
        if (i + 1 < 5) {
            a(i, i + 1) = 1.0;
            a(i + 1, i) = 1.0;
        }
    }
    return a;
}

ComplexMatrix scaled_tridiagonal(double c) {
    const ComplexMatrix a = tridiagonal5();
    return (c / spectral_norm(a)) * a;
}

EquationInstance problem1() {
    std::vector<ComplexMatrix> a;
    for (int k = 1; k <= 2; ++k) a.push_back(scaled_tridiagonal(1.0 / (k + 2) + 2e-2));
    return EquationInstance::create(std::move(a), HermitianMatrix::identity(5));
}

EquationInstance problem2() {
    return EquationInstance::create({scaled_tridiagonal(1.0 / 3.0 + 2e-2), scaled_tridiagonal(1.0 / 6.0 + 3e-2)},
                                    HermitianMatrix::identity(5));
}

std::vector<ComplexMatrix> problem2_perturbation(int j, const ComplexMatrix& c) {
    const ComplexMatrix sym = c.transpose() + c;
    const double norm = spectral_norm(sym);
    return {(std::pow(10.0, -j) / norm) * sym, (3.0 * std::pow(10.0, -j - 1) / norm) * sym};
}

ComplexMatrix random_direction(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ComplexMatrix c(5, 5);
    for (Index j = 0; j < 5; ++j) {
        for (Index i = 0; i < 5; ++i) c(i, j) = normal(rng);
    }
    return c;
}

EquationInstance problem3() {
    const ComplexMatrix q = tridiagonal5();
    return EquationInstance::create({scaled_tridiagonal(1.0 / 3.0 + 2e-2), scaled_tridiagonal(1.0 / 6.0 + 3e-2)}, q);
}

std::vector<ComplexMatrix> problem4_coefficients(int k) {
    std::vector<ComplexMatrix> a;
    for (int j = 1; j <= 2; ++j) a.push_back(scaled_tridiagonal(1.0 / (j + 2) + 2.0 * std::pow(10.0, -k)));
    return a;
}

ComplexMatrix problem4_q() {
    Eigen::MatrixXd q(5, 5);
    q << 2, 1, 0, 9, 0,  //
        1, 2, 1, 0, 8,   //
        5, 1, 2, 1, 6,   //
        9, 0, 1, 2, 1,   //
        0, 2, 3, 1, 2;
    return q.cast<Complex>();
}

GeneralInstance problem4(int k) { return GeneralInstance::create(problem4_coefficients(k), problem4_q()); }

GeneralInstance problem4_symmetrized(int k) {
    const ComplexMatrix q = problem4_q();
    return GeneralInstance::create(problem4_coefficients(k), 0.5 * (q + q.transpose()));
}

}  // namespace matfix::reference
