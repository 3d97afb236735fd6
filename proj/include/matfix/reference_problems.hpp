#pragma once

// The four reference test problems built on the 5x5 tridiagonal matrix
// tridiag(1, 2, 1). Problem numbering follows the order they are reproduced in.

#include <cstdint>
#include <vector>

#include "matfix/solver.hpp"

namespace matfix::reference {

/// 5x5 tridiagonal with 2 on the diagonal and 1 off it.
[[nodiscard]] ComplexMatrix tridiagonal5();

/// A scaled to spectral norm c: (c / ||A||) A.
[[nodiscard]] ComplexMatrix scaled_tridiagonal(double c);

/// Problem 1: A_k = ((1/(k+2) + 0.02)/||A||) A for k = 1, 2; Q = I.
[[nodiscard]] EquationInstance problem1();
inline constexpr double problem1_start_scale = 1.1;

/// Problem 2: A_1 = ((1/3 + 0.02)/||A||) A, A_2 = ((1/6 + 0.03)/||A||) A; Q = I.
[[nodiscard]] EquationInstance problem2();

/// Perturbation family for problem 2:
///   dA_1 = 10^-j (C^T + C) / ||C^T + C||,  dA_2 = 3 * 10^(-j-1) (C^T + C) / ||C^T + C||.
[[nodiscard]] std::vector<ComplexMatrix> problem2_perturbation(int j, const ComplexMatrix& c);

/// Standard-normal 5x5 real C drawn from a seeded generator.
[[nodiscard]] ComplexMatrix random_direction(std::uint64_t seed);

/// Problem 3: coefficients of problem 2 with Q = A; the tracked trajectory starts at X~_0 = A.
[[nodiscard]] EquationInstance problem3();

/// Problem 4 coefficients: A_j = ((1/(j+2) + 2 * 10^-k)/||A||) A for j = 1, 2.
[[nodiscard]] std::vector<ComplexMatrix> problem4_coefficients(int k);

/// Problem 4 right-hand side exactly as given. It is not symmetric.
[[nodiscard]] ComplexMatrix problem4_q();

/// Problem 4 with Q as given (raw data, no Hermitian requirement).
[[nodiscard]] GeneralInstance problem4(int k);

/// Problem 4 with Q replaced by its symmetric part. The result is still
/// indefinite, so it stays a GeneralInstance.
[[nodiscard]] GeneralInstance problem4_symmetrized(int k);

}  // namespace matfix::reference
