#include "matfix/sensitivity.hpp"

#include <limits>
#include <string>

namespace matfix {

OperatorBundle build_bundle(const EquationInstance& instance, const HermitianMatrix& x,
                            LowerBoundConvention convention) {
    const Index n = instance.order();
    if (x.order() != n) throw Error(ErrorCode::DimensionMismatch, "X order differs from the instance");
    if (!is_positive_definite(x)) throw Error(ErrorCode::NotPositiveDefinite, "operator bundle needs X > 0");

    OperatorBundle out;
    out.convention = convention;
    const HermitianMatrix x_inv = inverse(x);
    out.zeta = spectral_norm(x_inv.matrix());

    const Index n2 = n * n;
    const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
    const ComplexMatrix pi = vec_permutation(n).cast<Complex>();
    out.l_rep = ComplexMatrix::Identity(n2, n2);
    for (const auto& ai : instance.a()) {
        ComplexMatrix bi = x_inv.matrix() * ai;
        out.l_rep += kron(ComplexMatrix(bi.transpose()), ComplexMatrix(bi.adjoint()));
        out.theta_is.push_back(spectral_norm(bi));
        out.theta += out.theta_is.back() * out.theta_is.back();
        out.b.push_back(std::move(bi));
    }

    Eigen::JacobiSVD<ComplexMatrix> svd(out.l_rep);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (!(smin > static_cast<double>(n2) * std::numeric_limits<double>::epsilon() * smax)) {
        throw Error(ErrorCode::SingularOperator,
                    "sigma_min(L) = " + std::to_string(smin) + "; X is not a valid solution");
    }
    out.l = convention == LowerBoundConvention::InverseNorm ? smin : 1.0 / smax;
    out.l_inv = inverse(out.l_rep);

    for (const auto& bi : out.b) {
        const ComplexMatrix direct = out.l_inv * kron(eye, ComplexMatrix(bi.adjoint()));
        const ComplexMatrix conjugate = out.l_inv * kron(ComplexMatrix(bi.transpose()), eye) * pi;
        out.p_reps.push_back(direct + conjugate);
        out.p_real_reps.push_back(real_linear_representation(direct, conjugate));
        out.n_ops.push_back(spectral_norm(out.p_real_reps.back()));
    }
    return out;
}

ComplexMatrix apply_l(const OperatorBundle& bundle, const ComplexMatrix& w) {
    ComplexMatrix out = w;
    for (const auto& bi : bundle.b) out.noalias() += bi.adjoint() * w * bi;
    return out;
}

ComplexMatrix apply_l_inverse(const OperatorBundle& bundle, const ComplexMatrix& w) {
    const Index n = bundle.order();
    return unvec(bundle.l_inv * vec(w), n, n);
}

ComplexMatrix apply_p(const OperatorBundle& bundle, std::size_t i, const ComplexMatrix& z) {
    const auto& bi = bundle.b.at(i);
    return apply_l_inverse(bundle, bi.adjoint() * z + z.adjoint() * bi);
}

}  // namespace matfix
