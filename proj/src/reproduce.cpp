#include "matfix/reproduce.hpp"

#include <cmath>
#include <random>

#include "matfix/reference_problems.hpp"

namespace matfix::reproduce {

namespace {

constexpr double reference_tol = 1e-13;
constexpr int reference_max_iter = 10000;

SolveReport tight_solve(const EquationInstance& instance, StartPolicy start = StartFromQ{}) {
    SolveSettings s;
    s.start = std::move(start);
    s.tol = reference_tol;
    s.max_iter = reference_max_iter;
    return solve(instance, s);
}

std::uint64_t derive_seed(std::uint64_t seed, int j, int r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(r)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

struct Problem2Context {
    EquationInstance instance;
    ScalarBounds sb;
    HermitianMatrix x;
    OperatorBundle bundle;
    double x_norm;
};

Problem2Context problem2_context(LowerBoundConvention convention) {
    EquationInstance instance = reference::problem2();
    ScalarBounds sb = scalar_bounds(instance);
    HermitianMatrix x = tight_solve(instance).x;
    OperatorBundle bundle = build_bundle(instance, x, convention);
    const double x_norm = spectral_norm(x.matrix());
    return {std::move(instance), sb, std::move(x), std::move(bundle), x_norm};
}

// Fills the bound columns; they depend on the direction only through its norms.
void fill_bounds(Problem2Column& col, const Problem2Context& ctx, const PerturbationSpec& spec) {
    col.conditions = feasibility_table(ctx.instance, ctx.sb, ctx.bundle, spec);
    col.xi1 = xi1(ctx.instance, ctx.sb, spec).relative_bound;
    const BoundReport r2 = xi2(ctx.instance, ctx.sb, ctx.x, spec);
    col.xi2 = r2.relative_bound;
    col.xi2_absolute = r2.absolute_bound.value_or(0.0);
    const BoundReport r3 = xi3(ctx.instance, ctx.x, ctx.bundle, spec);
    col.xi3 = r3.absolute_bound.value_or(0.0);
    col.nu_star = r3.relative_bound;
}

double relative_error(const Problem2Context& ctx, const std::vector<ComplexMatrix>& da) {
    std::vector<ComplexMatrix> a = ctx.instance.a();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += da[i];
    const EquationInstance perturbed = EquationInstance::create(std::move(a), ctx.instance.q());
    const SolveReport r = tight_solve(perturbed, StartExplicit{ctx.x.matrix()});
    return spectral_norm(ComplexMatrix(r.x.matrix() - ctx.x.matrix())) / ctx.x_norm;
}

}  // namespace

Problem1Result run_problem1(double tol, int max_iter) {
    const EquationInstance instance = reference::problem1();
    Problem1Result out;
    out.sb = scalar_bounds(instance);
    SolveSettings s;
    s.start = StartScaledIdentity{reference::problem1_start_scale};
    s.tol = tol;
    s.max_iter = max_iter;
    out.solve = solve(instance, s);
    out.in_coarse = membership(out.solve.x, coarse_interval(instance), tol);
    out.in_refined = membership(out.solve.x, refined_interval(instance, out.sb), tol);
    out.in_scalar = membership(out.solve.x, scalar_interval(instance.order(), out.sb), tol);
    return out;
}

Problem2Result run_problem2(std::uint64_t seed, LowerBoundConvention convention, int runs, const std::vector<int>& js) {
    const Problem2Context ctx = problem2_context(convention);
    Problem2Result out;
    out.convention = convention;
    out.x_norm = ctx.x_norm;
    for (const int j : js) {
        Problem2Column col;
        col.j = j;
        col.runs = runs;
        double log_sum = 0.0;
        for (int r = 0; r < runs; ++r) {
            const ComplexMatrix c = reference::random_direction(derive_seed(seed, j, r));
            const std::vector<ComplexMatrix> da = reference::problem2_perturbation(j, c);
            if (r == 0) fill_bounds(col, ctx, PerturbationSpec::create(ctx.instance, da));
            log_sum += std::log(relative_error(ctx, da));
        }
        col.true_error = std::exp(log_sum / runs);
        out.columns.push_back(std::move(col));
    }
    return out;
}

Problem2Column problem2_column(int j, LowerBoundConvention convention) {
    const Problem2Context ctx = problem2_context(convention);
    // C = I / 2 makes (C^T + C) / ||C^T + C|| the identity.
    const ComplexMatrix c = 0.5 * ComplexMatrix::Identity(5, 5);
    const std::vector<ComplexMatrix> da = reference::problem2_perturbation(j, c);
    Problem2Column col;
    col.j = j;
    col.runs = 1;
    fill_bounds(col, ctx, PerturbationSpec::create(ctx.instance, da));
    col.true_error = relative_error(ctx, da);
    return col;
}

Problem3Result run_problem3(int iterates) {
    const EquationInstance instance = reference::problem3();
    const SolveReport ref = tight_solve(instance);
    Problem3Result out;
    out.reference_residual = ref.residual_norm;
    HermitianMatrix xk = HermitianMatrix::from_lower(reference::tridiagonal5());
    for (int k = 1; k <= iterates; ++k) {
        xk = iteration_map(instance, xk);
        Problem3Row row;
        row.k = k;
        row.error = spectral_norm(ComplexMatrix(xk.matrix() - ref.x.matrix()));
        row.backward = backward_bound(instance, xk);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<Problem4Row> run_problem4(double tol, int max_iter, const std::vector<int>& ks) {
    SolveSettings s;
    s.tol = tol;
    s.max_iter = max_iter;
    std::vector<Problem4Row> out;
    for (const int k : ks) {
        Problem4Row row;
        row.k = k;
        const GeneralInstance raw = reference::problem4(k);
        row.solve = solve_general(raw, s);
        if (row.solve.converged) row.c_rel = cond_real(raw, row.solve.x, ConditionMode::Relative).value;
        const GeneralInstance sym = reference::problem4_symmetrized(k);
        row.solve_symmetrized = solve_general(sym, s);
        if (row.solve_symmetrized.converged) {
            row.c_rel_symmetrized = cond_real(sym, row.solve_symmetrized.x, ConditionMode::Relative).value;
        }
        row.substituted = !row.solve.converged;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace matfix::reproduce
