#include "matfix/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace matfix::io {

namespace {

const Json& member(const Json& j, const char* key, const std::string& field) {
    if (!j.is_object()) throw ParseError(fmt::format("field '{}': expected an object", field));
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(fmt::format("field '{}.{}': missing", field, key));
    return *it;
}

Index count_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw ParseError(fmt::format("field '{}': expected a positive integer", field));
    }
    return static_cast<Index>(j.get<long long>());
}

Eigen::MatrixXd real_block(const Json& j, const std::string& field, Index n) {
    if (!j.is_array() || static_cast<Index>(j.size()) != n) {
        throw ParseError(fmt::format("field '{}': expected an array of {} rows", field, n));
    }
    Eigen::MatrixXd out(n, n);
    for (Index i = 0; i < n; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n) {
            throw ParseError(fmt::format("field '{}[{}]': expected {} entries, got {}", field, i, n,
                                         row.is_array() ? row.size() : 0));
        }
        for (Index k = 0; k < n; ++k) {
            const Json& v = row[static_cast<std::size_t>(k)];
            if (!v.is_number()) throw ParseError(fmt::format("field '{}[{}][{}]': expected a number", field, i, k));
            out(i, k) = v.get<double>();
        }
    }
    return out;
}

Json rows_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(fmt::format("cannot open '{}'", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json conditions_to_json(const std::vector<Condition>& conditions) {
    Json out = Json::array();
    for (const auto& c : conditions) out.push_back(to_json(c));
    return out;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

bool is_flat(const Json& j) {
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

void format_into(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            format_into(value, indent + 2, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            format_into(j[i], indent + 2, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else if (is_flat(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string format_document(const Json& j) {
    std::string out;
    format_into(j, 0, out);
    return out + "\n";
}

Json parse_document(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text, nullptr, true, true);
    } catch (const nlohmann::json::parse_error& e) {
        // The library message already reports "line L, column C".
        throw ParseError(fmt::format("{}: {}", source, e.what()));
    }
}

Json read_document(const std::filesystem::path& path) { return parse_document(slurp(path), path.string()); }

ComplexMatrix matrix_from_json(const Json& j, const std::string& field, Index n) {
    const Eigen::MatrixXd re = real_block(member(j, "re", field), field + ".re", n);
    ComplexMatrix m = re.cast<Complex>();
    if (const auto it = j.find("im"); it != j.end()) {
        m.imag() = real_block(*it, field + ".im", n);
    }
    for (const auto& [key, _] : j.items()) {
        if (key != "re" && key != "im") throw ParseError(fmt::format("field '{}.{}': unknown key", field, key));
    }
    return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json out = Json::object();
    out["re"] = rows_to_json(m.real());
    if (!m.imag().isZero(0.0)) out["im"] = rows_to_json(m.imag());
    return out;
}

Json matrix_to_json(const HermitianMatrix& m) { return matrix_to_json(m.matrix()); }

InstanceData instance_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("instance: expected an object at top level");
    const Index n = count_from_json(member(j, "n", "instance"), "n");
    const Index m = count_from_json(member(j, "m", "instance"), "m");
    InstanceData data;
    data.q = matrix_from_json(member(j, "Q", "instance"), "Q", n);
    const Json& a = member(j, "A", "instance");
    if (!a.is_array() || static_cast<Index>(a.size()) != m) {
        throw ParseError(fmt::format("field 'A': expected an array of m = {} matrices", m));
    }
    for (Index i = 0; i < m; ++i) {
        data.a.push_back(matrix_from_json(a[static_cast<std::size_t>(i)], fmt::format("A[{}]", i), n));
    }
    return data;
}

Json instance_to_json(const InstanceData& data) {
    Json out = Json::object();
    out["n"] = data.order();
    out["m"] = data.a.size();
    out["Q"] = matrix_to_json(data.q);
    Json a = Json::array();
    for (const auto& ai : data.a) a.push_back(matrix_to_json(ai));
    out["A"] = std::move(a);
    return out;
}

InstanceData read_instance(const std::filesystem::path& path) { return instance_from_json(read_document(path)); }

std::string write_instance(const InstanceData& data) { return format_document(instance_to_json(data)); }

DeltaData delta_from_json(const Json& j, Index n) {
    if (!j.is_object()) throw ParseError("delta: expected an object at top level");
    DeltaData d;
    if (const auto it = j.find("dQ"); it != j.end()) d.dq = matrix_from_json(*it, "dQ", n);
    const Json& da = member(j, "dA", "delta");
    if (!da.is_array()) throw ParseError("field 'dA': expected an array");
    for (std::size_t i = 0; i < da.size(); ++i) {
        d.da.push_back(matrix_from_json(da[i], fmt::format("dA[{}]", i), n));
    }
    return d;
}

DeltaData read_delta(const std::filesystem::path& path, Index n) { return delta_from_json(read_document(path), n); }

ComplexMatrix read_matrix(const std::filesystem::path& path, Index n) {
    return matrix_from_json(read_document(path), path.filename().string(), n);
}

Json to_json(const SolveReport& r) {
    return Json{{"converged", r.converged},
                {"iterations", r.iterations},
                {"residual_norm", r.residual_norm},
                {"x", matrix_to_json(r.x)},
                {"history", r.history}};
}

Json to_json(const GeneralSolveReport& r) {
    return Json{{"converged", r.converged},
                {"iterations", r.iterations},
                {"residual_norm", r.residual_norm},
                {"x", matrix_to_json(r.x)},
                {"history", r.history}};
}

Json to_json(const ScalarBounds& sb) {
    return Json{{"alpha", sb.alpha}, {"beta", sb.beta}, {"iterations", sb.iterations}, {"converged", sb.converged}};
}

Json to_json(const Condition& c) { return Json{{"name", c.name}, {"value", c.value}, {"pass", c.pass}}; }

Json to_json(const BoundReport& r) {
    Json inputs = Json::object();
    for (const auto& in : r.inputs) inputs[in.name] = in.value;
    return Json{{"kind", to_string(r.kind)},
                {"feasible", r.feasible()},
                {"relative_bound", r.relative_bound},
                {"absolute_bound", optional_number(r.absolute_bound)},
                {"conditions", conditions_to_json(r.conditions)},
                {"inputs", std::move(inputs)}};
}

Json to_json(const BackwardErrorReport& r) {
    return Json{{"feasible", r.feasible},       {"sigma", r.sigma},
                {"residual_norm", r.residual_norm}, {"lambda_min", r.lambda_min},
                {"threshold", r.threshold},     {"theta", optional_number(r.theta)},
                {"bound", optional_number(r.bound)}};
}

Json to_json(const ConditionReport& r) {
    return Json{{"mode", to_string(r.mode)}, {"case", to_string(r.data_case)}, {"value", r.value},
                {"xi", r.xi},               {"rho", r.rho},                   {"etas", r.etas}};
}

Json to_json(const OperatorBundle& b) {
    return Json{{"operator_norm", OperatorBundle::operator_norm},
                {"l_convention", to_string(b.convention)},
                {"l", b.l},
                {"n", b.n_ops},
                {"theta_i", b.theta_is},
                {"theta", b.theta},
                {"zeta", b.zeta}};
}

}  // namespace matfix::io
