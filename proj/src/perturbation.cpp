#include "matfix/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matfix {
namespace {

struct NormData {
    std::vector<double> a;   // ||A_i||
    std::vector<double> da;  // ||dA_i||
    double dq = 0.0;
};

NormData norms(const EquationInstance& instance, const PerturbationSpec& spec) {
    NormData d;
    for (const auto& ai : instance.a()) d.a.push_back(spectral_norm(ai));
    d.da = spec.da_norms();
    d.dq = spec.dq_norm();
    return d;
}

double sum_sq(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0, [](double acc, double x) { return acc + x * x; });
}

// s = sum ||dA_i|| (2 ||A_i|| + ||dA_i||)
double growth(const NormData& d) {
    double s = 0.0;
    for (std::size_t i = 0; i < d.a.size(); ++i) s += d.da[i] * (2.0 * d.a[i] + d.da[i]);
    return s;
}

// beta^2 - sum (||A_i|| + ||dA_i||)^2
double shifted_gap(double beta, const NormData& d) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d.a.size(); ++i) sum += (d.a[i] + d.da[i]) * (d.a[i] + d.da[i]);
    return beta * beta - sum;
}

struct OperatorScalars {
    double epsilon = 0.0;
    double sigma = 0.0;
    double con6 = 0.0;
};

OperatorScalars operator_scalars(const OperatorBundle& bundle, const NormData& d) {
    const double l = bundle.l;
    const double zeta = bundle.zeta;
    const double theta = bundle.theta;
    OperatorScalars s;
    s.epsilon = d.dq / l;
    double weighted = 0.0;
    for (std::size_t i = 0; i < d.a.size(); ++i) {
        s.epsilon += bundle.n_ops[i] * d.da[i] + (zeta / l) * d.da[i] * d.da[i];
        weighted += ((d.a[i] + d.da[i]) * zeta + bundle.theta_is[i]) * d.da[i];
    }
    s.sigma = (zeta / l) * weighted;
    const double root = std::sqrt((l * s.sigma + theta) * (theta + l));
    const double limit =
        l * (1.0 - s.sigma) * (1.0 - s.sigma) / (zeta * (l + l * s.sigma + 2.0 * theta + 2.0 * root));
    s.con6 = limit - s.epsilon;
    return s;
}

std::string violation_message(const BoundReport& report, const std::string& condition) {
    std::string out = std::string(to_string(report.kind)) + " hypothesis " + condition + " fails";
    for (const auto& c : report.conditions) {
        if (c.name == condition) out += " (value " + std::to_string(c.value) + ")";
    }
    return out;
}

void require_pass(const BoundReport& report) {
    for (const auto& c : report.conditions) {
        if (!c.pass) throw ConditionViolated(report, c.name);
    }
}

}  // namespace

PerturbationSpec::PerturbationSpec(std::vector<ComplexMatrix> da, HermitianMatrix dq)
    : da_(std::move(da)), dq_(std::move(dq)) {
    for (const auto& m : da_) da_norms_.push_back(spectral_norm(m));
    dq_norm_ = spectral_norm(dq_.matrix());
}

PerturbationSpec PerturbationSpec::create(const EquationInstance& instance, std::vector<ComplexMatrix> da,
                                          HermitianMatrix dq) {
    const Index n = instance.order();
    if (da.size() != instance.terms()) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(instance.terms()) +
                                                      " coefficient perturbations, got " + std::to_string(da.size()));
    }
    for (std::size_t i = 0; i < da.size(); ++i) {
        if (da[i].rows() != n || da[i].cols() != n) {
            throw Error(ErrorCode::DimensionMismatch, "dA[" + std::to_string(i) + "] has the wrong shape");
        }
        require_finite(da[i], "dA");
    }
    if (dq.order() != n) throw Error(ErrorCode::DimensionMismatch, "dQ has the wrong order");
    require_finite(dq.matrix(), "dQ");
    return PerturbationSpec(std::move(da), std::move(dq));
}

PerturbationSpec PerturbationSpec::create(const EquationInstance& instance, std::vector<ComplexMatrix> da) {
    return create(instance, std::move(da), HermitianMatrix(instance.order()));
}

PerturbationSpec PerturbationSpec::scaled(double t) const {
    std::vector<ComplexMatrix> da;
    da.reserve(da_.size());
    for (const auto& m : da_) da.emplace_back(t * m);
    return PerturbationSpec(std::move(da), t * dq_);
}

bool BoundReport::feasible() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

double BoundReport::input(std::string_view name) const {
    for (const auto& in : inputs) {
        if (in.name == name) return in.value;
    }
    throw Error(ErrorCode::InvalidArgument, "no input named " + std::string(name));
}

ConditionViolated::ConditionViolated(BoundReport report, const std::string& condition)
    : Error(ErrorCode::ConditionViolated, violation_message(report, condition)),
      report_(std::move(report)),
      condition_(condition) {}

BoundReport xi1(const EquationInstance& instance, const ScalarBounds& sb, const PerturbationSpec& spec) {
    const NormData d = norms(instance, spec);
    const double beta = sb.beta;
    const double b = beta * beta + beta * d.dq - sum_sq(d.a);
    const double s = growth(d);
    const double disc = b * b - 4.0 * beta * beta * (beta * d.dq + s);

    BoundReport report;
    report.kind = BoundKind::Xi1;
    report.conditions = {{"b>0", b, b > 0.0},
                         {"b<2beta^2", 2.0 * beta * beta - b, 2.0 * beta * beta - b > 0.0},
                         {"discriminant>=0", disc, disc >= 0.0}};
    report.inputs = {{"beta", beta}, {"b", b}, {"s", s}, {"norm_dQ", d.dq}};
    require_pass(report);

    report.relative_bound = 2.0 * (s + beta * d.dq) / (b + std::sqrt(disc));
    return report;
}

BoundReport xi2(const EquationInstance& instance, const ScalarBounds& sb, const HermitianMatrix& x,
                const PerturbationSpec& spec) {
    if (spec.dq_norm() != 0.0) {
        throw Error(ErrorCode::NonzeroDeltaQ, "xi2 covers perturbations of the A_i only");
    }
    const NormData d = norms(instance, spec);
    const double beta = sb.beta;
    const double gap = beta * beta - sum_sq(d.a);
    const double shifted = shifted_gap(beta, d);

    BoundReport report;
    report.kind = BoundKind::Xi2;
    report.conditions = {{"con2", gap, gap > 0.0}, {"con4", shifted, shifted > 0.0}};
    const double x_norm = spectral_norm(x.matrix());
    report.inputs = {{"beta", beta}, {"norm_X", x_norm}};
    require_pass(report);

    double numerator = 0.0;
    for (std::size_t i = 0; i < d.a.size(); ++i) numerator += (d.a[i] + d.da[i]) * d.da[i];
    const double absolute = 2.0 * beta * numerator / shifted;
    report.absolute_bound = absolute;
    report.relative_bound = absolute / x_norm;
    return report;
}

BoundReport xi3(const EquationInstance& instance, const HermitianMatrix& x, const OperatorBundle& bundle,
                const PerturbationSpec& spec) {
    const NormData d = norms(instance, spec);
    const OperatorScalars s = operator_scalars(bundle, d);
    const double l = bundle.l;
    const double zeta = bundle.zeta;
    const double x_norm = spectral_norm(x.matrix());

    BoundReport report;
    report.kind = BoundKind::Xi3;
    report.conditions = {{"con5", 1.0 - s.sigma, 1.0 - s.sigma > 0.0}, {"con6", s.con6, s.con6 > 0.0}};
    report.inputs = {{"l", l},         {"zeta", zeta},       {"theta", bundle.theta},
                     {"epsilon", s.epsilon}, {"sigma", s.sigma}, {"norm_X", x_norm}};
    require_pass(report);

    const double shift = 1.0 + zeta * s.epsilon - s.sigma;
    const double disc = l * l * shift * shift - 4.0 * l * zeta * s.epsilon * (l + bundle.theta);
    const double absolute = 2.0 * l * s.epsilon / (l * shift + std::sqrt(std::max(disc, 0.0)));
    report.absolute_bound = absolute;
    report.relative_bound = absolute / x_norm;
    return report;
}

std::vector<Condition> feasibility_table(const EquationInstance& instance, const ScalarBounds& sb,
                                         const OperatorBundle& bundle, const PerturbationSpec& spec) {
    const NormData d = norms(instance, spec);
    const double beta = sb.beta;
    const double b = beta * beta + beta * d.dq - sum_sq(d.a);
    const double gap = beta * beta - sum_sq(d.a);
    const double con3 = b * b - 4.0 * beta * beta * (beta * d.dq + growth(d));
    const double con4 = shifted_gap(beta, d);
    const OperatorScalars s = operator_scalars(bundle, d);
    const double con1 = 2.0 * beta * beta - b;
    return {{"con1", con1, con1 > 0.0},       {"con2", gap, gap > 0.0},
            {"con3", con3, con3 >= 0.0},      {"con4", con4, con4 > 0.0},
            {"con5", 1.0 - s.sigma, 1.0 - s.sigma > 0.0}, {"con6", s.con6, s.con6 > 0.0}};
}

HermitianMatrix first_order_delta(const OperatorBundle& bundle, const PerturbationSpec& spec) {
    if (spec.da().size() != bundle.b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "perturbation and bundle disagree on m");
    }
    ComplexMatrix rhs = spec.dq().matrix();
    for (std::size_t i = 0; i < bundle.b.size(); ++i) {
        const auto& bi = bundle.b[i];
        const auto& dai = spec.da()[i];
        rhs.noalias() += bi.adjoint() * dai;
        rhs.noalias() += dai.adjoint() * bi;
    }
    return hermitian_part(apply_l_inverse(bundle, rhs));
}

}  // namespace matfix
