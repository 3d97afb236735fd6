#include "matfix/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "matfix/reproduce.hpp"

namespace matfix::cli {

namespace {

struct Outcome {
    int exit_code = Ok;
    Json results = Json::object();
    std::string text;
};

std::string_view status_name(int code) {
    switch (code) {
        case Ok: return "ok";
        case InvalidInput: return "invalid-input";
        case NonConvergence: return "non-convergence";
        case ConditionViolatedOnly: return "condition-violated";
    }
    return "unknown";
}

int exit_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::MaxIterationsExceeded:
        case ErrorCode::SingularIterate: return NonConvergence;
        case ErrorCode::ConditionViolated: return ConditionViolatedOnly;
        default: return InvalidInput;
    }
}

Json error_json(const Error& e) { return Json{{"code", to_string(e.code())}, {"message", e.what()}}; }

RunReport run(std::string_view name, Json args, const Options& options, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    Json error = nullptr;
    try {
        out = body();
    } catch (const ConditionViolated& e) {
        out.exit_code = ConditionViolatedOnly;
        error = error_json(e);
        out.results["report"] = io::to_json(e.report());
    } catch (const ValidationError& e) {
        out.exit_code = InvalidInput;
        error = error_json(e);
        Json violations = Json::array();
        for (const auto& v : e.violations()) violations.push_back({{"code", to_string(v.code)}, {"detail", v.detail}});
        error["violations"] = std::move(violations);
    } catch (const Error& e) {
        out.exit_code = exit_for(e.code());
        error = error_json(e);
    } catch (const std::exception& e) {
        out.exit_code = InvalidInput;
        error = Json{{"code", "Internal"}, {"message", e.what()}};
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    RunReport report;
    report.exit_code = out.exit_code;
    report.document = Json{{"schema_version", schema_version},
                           {"command", {{"name", name}, {"args", std::move(args)}}},
                           {"settings", settings_json(options)},
                           {"status", status_name(out.exit_code)},
                           {"exit_code", out.exit_code},
                           {"results", std::move(out.results)}};
    if (!error.is_null()) report.document["error"] = error;
    report.document["wall_clock_seconds"] = elapsed.count();

    report.text = std::move(out.text);
    if (!error.is_null()) report.text += fmt::format("error: {}\n", error["message"].get<std::string>());
    report.text += fmt::format("status: {}\n", status_name(out.exit_code));
    return report;
}

std::string sci(double v) { return fmt::format("{:.5e}", v); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string matrix_text(const ComplexMatrix& m) {
    const bool real = m.imag().isZero(0.0);
    std::string out;
    for (Index i = 0; i < m.rows(); ++i) {
        out += " ";
        for (Index j = 0; j < m.cols(); ++j) {
            if (real) {
                out += fmt::format(" {:>10.6f}", m(i, j).real());
            } else {
                out += fmt::format(" {:>10.6f}{:+.6f}i", m(i, j).real(), m(i, j).imag());
            }
        }
        out += "\n";
    }
    return out;
}

SolveSettings solve_settings(const Options& options, Index n) {
    SolveSettings s;
    s.start = parse_start(options.x0, n);
    s.tol = options.tol;
    s.max_iter = options.max_iter;
    return s;
}

EquationInstance load_equation(const std::filesystem::path& path) {
    io::InstanceData d = io::read_instance(path);
    return EquationInstance::create(std::move(d.a), d.q);
}

GeneralInstance load_general(const std::filesystem::path& path) {
    io::InstanceData d = io::read_instance(path);
    return GeneralInstance::create(std::move(d.a), std::move(d.q));
}

HermitianMatrix require_hermitian(const ComplexMatrix& m, std::string_view what) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 64.0 * std::numeric_limits<double>::epsilon() * scale) {
        throw Error(ErrorCode::NotHermitian, fmt::format("{} is not Hermitian", what));
    }
    return HermitianMatrix::from_lower(m);
}

SolveReport solve_or_fail(const EquationInstance& instance, const Options& options) {
    SolveReport r = solve(instance, solve_settings(options, instance.order()));
    if (!r.converged) {
        throw Error(ErrorCode::MaxIterationsExceeded,
                    fmt::format("no convergence after {} iterations (residual {})", r.iterations, sci(r.residual_norm)));
    }
    return r;
}

Json interval_json(const MatrixInterval& iv) {
    return Json{{"lower", io::matrix_to_json(iv.lower)}, {"upper", io::matrix_to_json(iv.upper)}};
}

DataCase resolve_case(const Options& options, bool real_data) {
    return options.data_case.value_or(real_data ? DataCase::Real : DataCase::Complex);
}

// Reference values, keyed like the fixtures file. Missing file means no deviation columns.
Json load_references(const Options& options) {
    const auto path = options.fixture_dir / "reference_values.jsonc";
    if (options.fixture_dir.empty() || !std::filesystem::exists(path)) return Json::object();
    return io::read_document(path);
}

std::optional<std::vector<double>> reference_row(const Json& refs, const char* section, const char* key) {
    const auto s = refs.find(section);
    if (s == refs.end()) return std::nullopt;
    const auto k = s->find(key);
    if (k == s->end()) return std::nullopt;
    return k->get<std::vector<double>>();
}

std::optional<double> reference_value(const Json& refs, const char* section, const char* key) {
    const auto s = refs.find(section);
    if (s == refs.end()) return std::nullopt;
    const auto k = s->find(key);
    if (k == s->end()) return std::nullopt;
    return k->get<double>();
}

double relative_deviation(double value, double reference) {
    return reference == 0.0 ? value : (value - reference) / std::abs(reference);
}

struct TableRow {
    std::string name;
    std::vector<double> values;
    std::optional<std::vector<double>> reference;
};

struct Table {
    std::string title;
    std::string column_label;
    std::vector<int> columns;
    std::vector<TableRow> rows;
    bool scientific = true;
};

Json table_json(const Table& t) {
    Json rows = Json::object();
    for (const auto& r : t.rows) {
        Json row{{"value", r.values}};
        if (r.reference) {
            std::vector<double> dev;
            for (std::size_t i = 0; i < r.values.size(); ++i) dev.push_back(relative_deviation(r.values[i], (*r.reference)[i]));
            row["reference"] = *r.reference;
            row["relative_deviation"] = dev;
        } else {
            row["reference"] = nullptr;
        }
        rows[r.name] = std::move(row);
    }
    return Json{{t.column_label, t.columns}, {"rows", std::move(rows)}};
}

std::string table_text(const Table& t) {
    const auto cell = [&](double v) { return t.scientific ? fmt::format("{:>13.5e}", v) : fmt::format("{:>13.6f}", v); };
    std::string out = t.title + "\n" + fmt::format("  {:<12}", t.column_label);
    for (const int c : t.columns) out += fmt::format("{:>13}", c);
    out += "\n";
    for (const auto& r : t.rows) {
        out += fmt::format("  {:<12}", r.name);
        for (const double v : r.values) out += cell(v);
        out += "\n";
        if (r.reference) {
            out += fmt::format("  {:<12}", "  reference");
            for (const double v : *r.reference) out += cell(v);
            out += "\n" + fmt::format("  {:<12}", "  rel. dev.");
            for (std::size_t i = 0; i < r.values.size(); ++i) {
                out += fmt::format("{:>13.2e}", relative_deviation(r.values[i], (*r.reference)[i]));
            }
            out += "\n";
        }
    }
    return out;
}

Outcome reproduce1(const Options& options, const Json& refs) {
    const auto r = reproduce::run_problem1(options.tol, options.max_iter);
    Outcome out;
    out.exit_code = r.solve.converged ? Ok : NonConvergence;
    const ComplexMatrix& x = r.solve.x.matrix();

    Json scalars = Json::object();
    std::string text = "problem 1: X - A1^* X^-1 A1 - A2^* X^-1 A2 = I, X0 = 1.1 I\n";
    const auto scalar = [&](const char* key, double v) {
        const auto ref = reference_value(refs, "problem1", key);
        scalars[key] = {{"value", v}, {"reference", ref ? Json(*ref) : Json(nullptr)}};
        text += fmt::format("  {:<10} {:>14.10f}", key, v);
        if (ref) text += fmt::format("   reference {:.4f}  deviation {:+.2e}", *ref, v - *ref);
        text += "\n";
    };
    scalar("beta", r.sb.beta);
    scalar("alpha", r.sb.alpha);

    out.results["scalar_bounds"] = scalars;
    out.results["solve"] = io::to_json(r.solve);
    text += fmt::format("  converged {} after {} iterations, residual {}\n", yes_no(r.solve.converged),
                        r.solve.iterations, sci(r.solve.residual_norm));
    if (const auto it = refs.find("problem1"); it != refs.end()) {
        text += fmt::format("  reference: {} iterations, residual {}\n", (*it)["iterations"].get<int>(),
                            sci((*it)["residual"].get<double>()));
        const auto reference = (*it)["x"].get<std::vector<std::vector<double>>>();
        double dev = 0.0;
        for (Index i = 0; i < x.rows(); ++i) {
            for (Index j = 0; j < x.cols(); ++j) {
                dev = std::max(dev, std::abs(x(i, j).real() - reference[i][j]));
            }
        }
        out.results["x_max_abs_deviation"] = dev;
        text += fmt::format("  max |X - X_ref| entry {:.2e}\n", dev);
    }
    text += "  X =\n" + matrix_text(x);
    out.results["membership"] = {{"coarse", r.in_coarse}, {"refined", r.in_refined}, {"scalar", r.in_scalar}};
    text += fmt::format("  X in coarse {}, refined {}, [beta I, alpha I] {}\n", yes_no(r.in_coarse),
                        yes_no(r.in_refined), yes_no(r.in_scalar));
    out.text = std::move(text);
    return out;
}

Outcome reproduce2(const Options& options, const Json& refs) {
    const auto convention = options.l_convention.value_or(LowerBoundConvention::ReciprocalNorm);
    const auto r = reproduce::run_problem2(options.seed, convention);
    Outcome out;

    Table conditions{"feasibility conditions", "j", {}, {}, false};
    Table bounds{"relative error and bounds (geometric mean over runs)", "j", {}, {}, true};
    for (const auto& c : r.columns) {
        conditions.columns.push_back(c.j);
        bounds.columns.push_back(c.j);
    }
    for (std::size_t k = 0; k < r.columns.front().conditions.size(); ++k) {
        TableRow row{r.columns.front().conditions[k].name, {}, std::nullopt};
        for (const auto& c : r.columns) row.values.push_back(c.conditions[k].value);
        row.reference = reference_row(refs, "problem2_conditions", row.name.c_str());
        conditions.rows.push_back(std::move(row));
    }
    const auto column = [&](const char* name, const char* ref_key, double reproduce::Problem2Column::*field) {
        TableRow row{name, {}, std::nullopt};
        for (const auto& c : r.columns) row.values.push_back(c.*field);
        if (ref_key) row.reference = reference_row(refs, "problem2_bounds", ref_key);
        bounds.rows.push_back(std::move(row));
    };
    column("true_error", "true_error", &reproduce::Problem2Column::true_error);
    column("xi1", "xi1", &reproduce::Problem2Column::xi1);
    column("xi2", "xi2", &reproduce::Problem2Column::xi2);
    column("xi3", "nu_star", &reproduce::Problem2Column::xi3);
    column("xi3/||X||", nullptr, &reproduce::Problem2Column::nu_star);
    column("xi2 abs", nullptr, &reproduce::Problem2Column::xi2_absolute);

    out.results["l_convention"] = to_string(convention);
    out.results["operator_norm"] = OperatorBundle::operator_norm;
    out.results["runs"] = r.columns.front().runs;
    out.results["seed"] = options.seed;
    out.results["x_norm"] = r.x_norm;
    out.results["conditions"] = table_json(conditions);
    out.results["bounds"] = table_json(bounds);
    out.text = fmt::format("problem 2: perturbed coefficients, {} runs per j, seed {}, l convention {}\n",
                           r.columns.front().runs, options.seed, to_string(convention)) +
               table_text(conditions) + table_text(bounds) +
               "  xi3 is the absolute operator bound; the reference row it is compared with is nu*.\n";
    return out;
}

Outcome reproduce3(const Json& refs) {
    const auto r = reproduce::run_problem3();
    Outcome out;
    Table t{"problem 3: iterates from X~0 = A, Q = A", "k", {}, {}, true};
    TableRow error{"error", {}, reference_row(refs, "problem3", "error")};
    TableRow bound{"bound", {}, reference_row(refs, "problem3", "bound")};
    Json rows = Json::array();
    bool feasible = true;
    for (const auto& row : r.rows) {
        t.columns.push_back(row.k);
        error.values.push_back(row.error);
        bound.values.push_back(row.backward.bound.value_or(std::nan("")));
        feasible = feasible && row.backward.feasible;
        rows.push_back({{"k", row.k}, {"error", row.error}, {"backward", io::to_json(row.backward)}});
    }
    t.rows = {error, bound};
    out.results["table"] = table_json(t);
    out.results["iterates"] = std::move(rows);
    out.results["reference_solution_residual"] = r.reference_residual;
    out.exit_code = feasible ? Ok : ConditionViolatedOnly;
    out.text = table_text(t);
    return out;
}

Outcome reproduce4(const Options& options, const Json& refs) {
    const auto rows = reproduce::run_problem4(options.tol, options.max_iter);
    Outcome out;
    Table t{"problem 4: relative condition number, Q as given (raw, nonsymmetric)", "k", {}, {}, false};
    TableRow reported{"c_rel", {}, reference_row(refs, "problem4", "c_rel")};
    TableRow symmetrized{"c_rel sym(Q)", {}, std::nullopt};
    Json items = Json::array();
    bool substituted = false;
    for (const auto& row : rows) {
        t.columns.push_back(row.k);
        reported.values.push_back(row.reported().value_or(std::nan("")));
        symmetrized.values.push_back(row.c_rel_symmetrized.value_or(std::nan("")));
        substituted = substituted || row.substituted;
        items.push_back({{"k", row.k},
                         {"as_given", {{"converged", row.solve.converged},
                                           {"iterations", row.solve.iterations},
                                           {"residual_norm", row.solve.residual_norm},
                                           {"c_rel", row.c_rel ? Json(*row.c_rel) : Json(nullptr)}}},
                         {"symmetrized", {{"converged", row.solve_symmetrized.converged},
                                          {"iterations", row.solve_symmetrized.iterations},
                                          {"residual_norm", row.solve_symmetrized.residual_norm},
                                          {"c_rel", row.c_rel_symmetrized ? Json(*row.c_rel_symmetrized) : Json(nullptr)}}},
                         {"substituted", row.substituted}});
    }
    t.rows = {reported, symmetrized};
    out.results["table"] = table_json(t);
    out.results["rows"] = std::move(items);
    out.results["substituted"] = substituted;
    out.text = table_text(t);
    if (substituted) out.text += "  note: as-given Q did not converge for some k; c_rel there uses sym(Q)\n";
    return out;
}

}  // namespace

std::uint64_t default_seed() {
    const char* env = std::getenv("MATFIX_SEED");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    return (end != nullptr && *end == '\0') ? v : 0;
}

StartPolicy parse_start(std::string_view spec, Index n) {
    if (spec == "q") return StartFromQ{};
    if (spec == "identity") return StartScaledIdentity{1.0};
    if (spec.starts_with("scale:")) {
        const std::string value(spec.substr(6));
        char* end = nullptr;
        const double c = std::strtod(value.c_str(), &end);
        if (value.empty() || *end != '\0' || !(c > 0.0)) {
            throw Error(ErrorCode::InvalidArgument, fmt::format("--x0 scale:<c> needs a positive number, got '{}'", value));
        }
        return StartScaledIdentity{c};
    }
    if (spec.starts_with("file:")) return StartExplicit{io::read_matrix(std::string(spec.substr(5)), n)};
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("--x0 must be q, identity, scale:<c> or file:<path>, got '{}'", spec));
}

Json settings_json(const Options& options) {
    return Json{{"tol", options.tol},
                {"max_iter", options.max_iter},
                {"x0", options.x0},
                {"mode", to_string(options.mode)},
                {"case", options.data_case ? Json(to_string(*options.data_case)) : Json("auto")},
                {"allow_nonhermitian", options.allow_nonhermitian},
                {"seed", options.seed},
                {"format", options.format == OutputFormat::Text ? "text" : "structured"},
                {"l_convention", options.l_convention ? Json(to_string(*options.l_convention)) : Json("default")}};
}

RunReport cmd_solve(const std::filesystem::path& input, const Options& options) {
    return run("solve", Json::array({input.string()}), options, [&] {
        Outcome out;
        if (options.allow_nonhermitian) {
            const GeneralInstance instance = load_general(input);
            const GeneralSolveReport r = solve_general(instance, solve_settings(options, instance.order()));
            out.exit_code = r.converged ? Ok : NonConvergence;
            out.results["solve"] = io::to_json(r);
            out.results["hermitian_checks"] = "skipped";
            out.text = fmt::format("solve (raw data, no Hermitian checks): n = {}, m = {}\n", instance.order(),
                                   instance.a.size()) +
                       fmt::format("  converged {} after {} iterations, residual {}\n", yes_no(r.converged),
                                   r.iterations, sci(r.residual_norm)) +
                       "  X =\n" + matrix_text(r.x);
            return out;
        }
        const EquationInstance instance = load_equation(input);
        const SolveReport r = solve(instance, solve_settings(options, instance.order()));
        out.exit_code = r.converged ? Ok : NonConvergence;
        out.results["solve"] = io::to_json(r);
        out.text = fmt::format("solve: n = {}, m = {}\n", instance.order(), instance.terms()) +
                   fmt::format("  converged {} after {} iterations, residual {}\n", yes_no(r.converged), r.iterations,
                               sci(r.residual_norm)) +
                   "  X =\n" + matrix_text(r.x.matrix());

        const ScalarBounds sb = scalar_bounds(instance);
        // The iterate is only as accurate as the stopping tolerance.
        const double slack = options.tol;
        const bool coarse = membership(r.x, coarse_interval(instance), slack);
        const bool refined = membership(r.x, refined_interval(instance, sb), slack);
        const bool scalar = membership(r.x, scalar_interval(instance.order(), sb), slack);
        out.results["scalar_bounds"] = io::to_json(sb);
        out.results["membership"] = {{"coarse", coarse}, {"refined", refined}, {"scalar", scalar}};
        out.text += fmt::format("  beta = {:.10f}, alpha = {:.10f}\n", sb.beta, sb.alpha) +
                    fmt::format("  X in coarse {}, refined {}, [beta I, alpha I] {}\n", yes_no(coarse),
                                yes_no(refined), yes_no(scalar));
        return out;
    });
}

RunReport cmd_bounds(const std::filesystem::path& input, const Options& options) {
    return run("bounds", Json::array({input.string()}), options, [&] {
        const EquationInstance instance = load_equation(input);
        const ScalarBounds sb = scalar_bounds(instance);
        const MatrixInterval coarse = coarse_interval(instance);
        const MatrixInterval refined = refined_interval(instance, sb);
        const MatrixInterval scalar = scalar_interval(instance.order(), sb);
        const double slack = instance.order() * std::numeric_limits<double>::epsilon() * sb.alpha;
        const bool inside = nested(refined, scalar, slack);
        Outcome out;
        out.results["scalar_bounds"] = io::to_json(sb);
        out.results["coarse"] = interval_json(coarse);
        out.results["refined"] = interval_json(refined);
        out.results["scalar"] = interval_json(scalar);
        out.results["refined_within_scalar"] = inside;
        out.text = fmt::format("bounds: n = {}, m = {}\n", instance.order(), instance.terms()) +
                   fmt::format("  beta = {:.10f}, alpha = {:.10f} ({} steps)\n", sb.beta, sb.alpha, sb.iterations) +
                   "  refined lower =\n" + matrix_text(refined.lower.matrix()) + "  refined upper =\n" +
                   matrix_text(refined.upper.matrix()) +
                   fmt::format("  refined interval within [beta I, alpha I]: {}\n", yes_no(inside));
        return out;
    });
}

RunReport cmd_analyze(const std::filesystem::path& input, const std::filesystem::path& delta, const Options& options) {
    return run("analyze", Json::array({input.string(), delta.string()}), options, [&] {
        if (options.allow_nonhermitian) {
            throw Error(ErrorCode::InvalidArgument, "perturbation analysis requires a Hermitian positive definite Q");
        }
        const EquationInstance instance = load_equation(input);
        const io::DeltaData d = io::read_delta(delta, instance.order());
        if (d.da.size() != instance.terms()) {
            throw Error(ErrorCode::DimensionMismatch,
                        fmt::format("delta has {} dA matrices, instance has m = {}", d.da.size(), instance.terms()));
        }
        const HermitianMatrix dq = d.dq ? require_hermitian(*d.dq, "dQ")
                                        : HermitianMatrix::from_lower(ComplexMatrix::Zero(instance.order(), instance.order()));
        const PerturbationSpec spec = PerturbationSpec::create(instance, d.da, dq);

        const SolveReport sr = solve_or_fail(instance, options);
        const ScalarBounds sb = scalar_bounds(instance);
        const OperatorBundle bundle =
            build_bundle(instance, sr.x, options.l_convention.value_or(LowerBoundConvention::InverseNorm));

        Outcome out;
        out.results["solve"] = {{"iterations", sr.iterations}, {"residual_norm", sr.residual_norm}};
        out.results["scalar_bounds"] = io::to_json(sb);
        out.results["operators"] = io::to_json(bundle);
        out.text = fmt::format("analyze: n = {}, m = {}, ||dQ|| = {}, ||dA_i|| =", instance.order(), instance.terms(),
                               sci(spec.dq_norm()));
        for (const double v : spec.da_norms()) out.text += " " + sci(v);
        out.text += fmt::format("\n  solve: {} iterations, residual {}\n", sr.iterations, sci(sr.residual_norm));
        out.text += fmt::format("  operators ({}, l {}): l = {:.6f}, theta = {:.6f}, zeta = {:.6f}\n",
                                OperatorBundle::operator_norm, to_string(bundle.convention), bundle.l, bundle.theta,
                                bundle.zeta);

        const std::vector<Condition> table = feasibility_table(instance, sb, bundle, spec);
        Json conditions = Json::array();
        out.text += "  conditions:";
        for (const auto& c : table) {
            conditions.push_back(io::to_json(c));
            out.text += fmt::format(" {} = {:.6f}{}", c.name, c.value, c.pass ? "" : " (FAIL)");
        }
        out.text += "\n";
        out.results["conditions"] = std::move(conditions);

        bool infeasible = false;
        Json bounds = Json::object();
        const auto record = [&](BoundKind kind, const std::function<BoundReport()>& compute) {
            const std::string key(to_string(kind));
            try {
                const BoundReport r = compute();
                bounds[key] = io::to_json(r);
                out.text += fmt::format("  {}: relative {}", key, sci(r.relative_bound));
                if (r.absolute_bound) out.text += fmt::format(", absolute {}", sci(*r.absolute_bound));
                out.text += "\n";
            } catch (const ConditionViolated& e) {
                infeasible = true;
                bounds[key] = io::to_json(e.report());
                bounds[key]["violated"] = e.condition();
                out.text += fmt::format("  {}: infeasible, {} fails\n", key, e.condition());
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NonzeroDeltaQ) throw;
                bounds[key] = {{"skipped", e.what()}};
                out.text += fmt::format("  {}: not applicable with nonzero dQ\n", key);
            }
        };
        record(BoundKind::Xi1, [&] { return xi1(instance, sb, spec); });
        record(BoundKind::Xi2, [&] { return xi2(instance, sb, sr.x, spec); });
        record(BoundKind::Xi3, [&] { return xi3(instance, sr.x, bundle, spec); });
        out.results["bounds"] = std::move(bounds);

        const HermitianMatrix dx = first_order_delta(bundle, spec);
        const double dx_norm = spectral_norm(dx.matrix());
        out.results["first_order_delta"] = {{"norm", dx_norm}, {"matrix", io::matrix_to_json(dx)}};
        out.text += fmt::format("  first-order ||dX|| = {}\n", sci(dx_norm));

        const DataCase dc = resolve_case(options, instance.is_real());
        const ConditionReport cr = dc == DataCase::Real ? cond_real(instance, sr.x, options.mode)
                                                         : cond_complex(instance, sr.x, bundle, options.mode);
        out.results["condition_number"] = io::to_json(cr);
        out.text += fmt::format("  condition number ({}, {}): {:.6f}\n", to_string(cr.mode), to_string(cr.data_case),
                                cr.value);

        out.exit_code = infeasible ? ConditionViolatedOnly : Ok;
        return out;
    });
}

RunReport cmd_backward(const std::filesystem::path& input, const std::filesystem::path& approx, const Options& options) {
    return run("backward", Json::array({input.string(), approx.string()}), options, [&] {
        const EquationInstance instance = load_equation(input);
        const HermitianMatrix xt = require_hermitian(io::read_matrix(approx, instance.order()), "approximate solution");
        const BackwardErrorReport r = backward_bound(instance, xt);
        Outcome out;
        out.results["backward"] = io::to_json(r);
        out.exit_code = r.feasible ? Ok : ConditionViolatedOnly;
        out.text = fmt::format("backward: Sigma = {:.6f}, ||R|| = {}, lambda_min = {:.6f}, threshold = {}\n", r.sigma,
                               sci(r.residual_norm), r.lambda_min, sci(r.threshold));
        out.text += r.feasible ? fmt::format("  ||X~ - X|| <= theta ||R|| = {} (theta = {:.6f})\n", sci(*r.bound), *r.theta)
                               : "  certificate conditions fail\n";
        return out;
    });
}

RunReport cmd_cond(const std::filesystem::path& input, const Options& options) {
    return run("cond", Json::array({input.string()}), options, [&] {
        Outcome out;
        if (options.allow_nonhermitian) {
            const GeneralInstance instance = load_general(input);
            if (resolve_case(options, instance.is_real()) == DataCase::Complex) {
                throw Error(ErrorCode::InvalidArgument, "the complex case needs a Hermitian instance");
            }
            const GeneralSolveReport sr = solve_general(instance, solve_settings(options, instance.order()));
            if (!sr.converged) {
                throw Error(ErrorCode::MaxIterationsExceeded,
                            fmt::format("no convergence after {} iterations", sr.iterations));
            }
            const ConditionReport cr = cond_real(instance, sr.x, options.mode);
            out.results["solve"] = {{"iterations", sr.iterations}, {"residual_norm", sr.residual_norm}};
            out.results["condition_number"] = io::to_json(cr);
            out.text = fmt::format("cond (raw data): {} iterations, residual {}\n  {} condition number ({}): {:.6f}\n",
                                   sr.iterations, sci(sr.residual_norm), to_string(cr.mode),
                                   to_string(cr.data_case), cr.value);
            return out;
        }
        const EquationInstance instance = load_equation(input);
        const SolveReport sr = solve_or_fail(instance, options);
        const DataCase dc = resolve_case(options, instance.is_real());
        const ConditionReport cr = dc == DataCase::Real
                                       ? cond_real(instance, sr.x, options.mode)
                                       : cond_complex(instance, sr.x, build_bundle(instance, sr.x), options.mode);
        out.results["solve"] = {{"iterations", sr.iterations}, {"residual_norm", sr.residual_norm}};
        out.results["condition_number"] = io::to_json(cr);
        out.text = fmt::format("cond: {} iterations, residual {}\n  {} condition number ({}): {:.6f}\n", sr.iterations,
                               sci(sr.residual_norm), to_string(cr.mode), to_string(cr.data_case), cr.value);
        return out;
    });
}

RunReport cmd_reproduce(int example, const Options& options) {
    return run("reproduce", Json::array({example}), options, [&] {
        const Json refs = load_references(options);
        switch (example) {
            case 1: return reproduce1(options, refs);
            case 2: return reproduce2(options, refs);
            case 3: return reproduce3(refs);
            case 4: return reproduce4(options, refs);
            default: throw Error(ErrorCode::InvalidArgument, fmt::format("example must be 1-4, got {}", example));
        }
    });
}

std::string render(const RunReport& report, OutputFormat format) {
    return format == OutputFormat::Structured ? io::format_document(report.document) : report.text;
}

}  // namespace matfix::cli
