#include "matfix/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "matfix/solver.hpp"

namespace matfix {
namespace {

struct Weights {
    double xi = 1.0;
    double rho = 1.0;
    std::vector<double> etas;
};

Weights weights(ConditionMode mode, const std::vector<ComplexMatrix>& a, const ComplexMatrix& q,
                const ComplexMatrix& x) {
    Weights w;
    if (mode == ConditionMode::Absolute) {
        w.etas.assign(a.size(), 1.0);
        return w;
    }
    w.xi = frobenius_norm(x);
    w.rho = frobenius_norm(q);
    for (const auto& ai : a) w.etas.push_back(frobenius_norm(ai));
    return w;
}

ConditionReport assemble(ConditionMode mode, DataCase data_case, Weights w, const RealBlockMatrix& s,
                         const std::vector<RealBlockMatrix>& u) {
    const Index rows = s.rows();
    const Index block = s.cols();
    ConditionReport out;
    out.mode = mode;
    out.data_case = data_case;
    out.assembled.resize(rows, block * static_cast<Index>(u.size() + 1));
    out.assembled.leftCols(block) = w.rho * s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.assembled.middleCols(block * static_cast<Index>(i + 1), block) = w.etas[i] * u[i];
    }
    out.value = spectral_norm(out.assembled) / w.xi;
    out.xi = w.xi;
    out.rho = w.rho;
    out.etas = std::move(w.etas);
    return out;
}

void require_real(const ComplexMatrix& m, std::string_view name) {
    if (!m.imag().isZero(0.0)) throw Error(ErrorCode::NotReal, std::string(name) + " has a nonzero imaginary part");
}

ConditionReport cond_real_impl(const std::vector<ComplexMatrix>& a, const ComplexMatrix& q, const ComplexMatrix& x,
                               ConditionMode mode) {
    require_real(q, "Q");
    require_real(x, "X");
    for (const auto& ai : a) require_real(ai, "A_i");

    const Index n = x.rows();
    const Index n2 = n * n;
    const RealBlockMatrix x_inv = inverse(x).real();
    const RealBlockMatrix eye = RealBlockMatrix::Identity(n, n);
    const RealBlockMatrix pi = vec_permutation(n);

    std::vector<RealBlockMatrix> t;
    RealBlockMatrix l = RealBlockMatrix::Identity(n2, n2);
    for (const auto& ai : a) {
        t.push_back(ai.real().transpose() * x_inv);
        l += kron(t.back(), t.back());
    }
    Eigen::PartialPivLU<RealBlockMatrix> lu(l);
    if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
        throw Error(ErrorCode::SingularOperator, "I + sum T_i (x) T_i is singular");
    }
    const RealBlockMatrix s = lu.inverse();
    std::vector<RealBlockMatrix> u;
    for (const auto& ti : t) {
        u.push_back(s * (kron(eye, ti) + kron(ti, eye) * pi));
    }
    return assemble(mode, DataCase::Real, weights(mode, a, q, x), s, u);
}

ComplexMatrix random_matrix(std::mt19937_64& rng, Index n, bool complex) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(n, n);
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) m(i, j) = Complex(normal(rng), complex ? normal(rng) : 0.0);
    }
    return m;
}

}  // namespace

ConditionReport cond_complex(const EquationInstance& instance, const HermitianMatrix& x, const OperatorBundle& bundle,
                             ConditionMode mode) {
    if (bundle.b.size() != instance.terms() || bundle.order() != instance.order()) {
        throw Error(ErrorCode::DimensionMismatch, "bundle does not belong to this instance");
    }
    const RealBlockMatrix s = real_linear_representation(bundle.l_inv, ComplexMatrix::Zero(bundle.l_inv.rows(),
                                                                                           bundle.l_inv.cols()));
    return assemble(mode, DataCase::Complex, weights(mode, instance.a(), instance.q().matrix(), x.matrix()), s,
                    bundle.p_real_reps);
}

ConditionReport cond_real(const EquationInstance& instance, const HermitianMatrix& x, ConditionMode mode) {
    return cond_real_impl(instance.a(), instance.q().matrix(), x.matrix(), mode);
}

ConditionReport cond_real(const GeneralInstance& instance, const ComplexMatrix& x, ConditionMode mode) {
    return cond_real_impl(instance.a, instance.q, x, mode);
}

double cond_fd_oracle(const GeneralInstance& instance, const ComplexMatrix& x, ConditionMode mode,
                      const FdOracleSettings& settings) {
    if (!(settings.step > 0.0) || settings.trials < 1) {
        throw Error(ErrorCode::InvalidArgument, "oracle needs step > 0 and trials >= 1");
    }
    const Index n = instance.order();
    const bool complex = settings.data_case == DataCase::Complex;
    const bool hermitian_q = (instance.q - instance.q.adjoint()).isZero(0.0);
    const Weights w = weights(mode, instance.a, instance.q, x);

    SolveSettings solve_settings;
    solve_settings.start = StartExplicit{x};
    solve_settings.tol = 1e-14 * std::max(1.0, spectral_norm(x));
    solve_settings.max_iter = 10000;

    auto response = [&](const std::vector<ComplexMatrix>& e, const ComplexMatrix& h, double step) {
        GeneralInstance perturbed = instance;
        for (std::size_t i = 0; i < e.size(); ++i) perturbed.a[i] += (w.etas[i] * step) * e[i];
        perturbed.q += (w.rho * step) * h;
        const GeneralSolveReport rep = solve_general(perturbed, solve_settings);
        if (!rep.converged) throw Error(ErrorCode::MaxIterationsExceeded, "perturbed solve did not converge");
        return frobenius_norm(ComplexMatrix(rep.x - x)) / (w.xi * step);
    };

    double best = 0.0;
    for (int trial = 0; trial < settings.trials; ++trial) {
        std::seed_seq seq{settings.seed, static_cast<std::uint64_t>(trial)};
        std::mt19937_64 rng(seq);
        std::vector<ComplexMatrix> e;
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < instance.a.size(); ++i) {
            e.push_back(random_matrix(rng, n, complex));
            norm_sq += e.back().squaredNorm();
        }
        ComplexMatrix h = random_matrix(rng, n, complex);
        // Keep dQ in the same structural class as Q so perturbed data stays admissible.
        if (hermitian_q) h = 0.5 * (h + h.adjoint()).eval();
        norm_sq += h.squaredNorm();
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (auto& ei : e) ei *= scale;
        h *= scale;

        const double coarse = response(e, h, settings.step);
        const double fine = response(e, h, 0.5 * settings.step);
        best = std::max(best, 2.0 * fine - coarse);
    }
    return best;
}

double cond_fd_oracle(const EquationInstance& instance, const HermitianMatrix& x, ConditionMode mode,
                      const FdOracleSettings& settings) {
    return cond_fd_oracle(GeneralInstance::from(instance), x.matrix(), mode, settings);
}

}  // namespace matfix
