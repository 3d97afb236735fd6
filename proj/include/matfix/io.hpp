#pragma once

// JSON documents for equation instances, perturbations and reports.
//
// Matrix object: {"re": [[...], ...], "im": [[...], ...]} with "im" optional.
// Instance file: {"n": n, "m": m, "Q": matrix, "A": [matrix, ...]}.
// Delta file:    {"dQ": matrix (optional), "dA": [matrix, ...]}.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matfix/backward_error.hpp"
#include "matfix/bounds.hpp"
#include "matfix/conditioning.hpp"
#include "matfix/perturbation.hpp"
#include "matfix/solver.hpp"

namespace matfix::io {

using Json = nlohmann::ordered_json;

/// Raw instance data as read from a file, before equation validation.
struct InstanceData {
    ComplexMatrix q;
    std::vector<ComplexMatrix> a;

    [[nodiscard]] Index order() const noexcept { return q.rows(); }
    friend bool operator==(const InstanceData&, const InstanceData&) = default;
};

struct DeltaData {
    std::optional<ComplexMatrix> dq;
    std::vector<ComplexMatrix> da;
};

/// Parse failure; the message names the line or the offending field.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

/// Pretty-printed JSON with arrays of scalars kept on one line.
[[nodiscard]] std::string format_document(const Json& j);

[[nodiscard]] Json parse_document(std::string_view text, std::string_view source = "<input>");
[[nodiscard]] Json read_document(const std::filesystem::path& path);

/// Reads an n x n matrix object located at `field` (used in error messages).
[[nodiscard]] ComplexMatrix matrix_from_json(const Json& j, const std::string& field, Index n);
/// Imaginary part is written only when nonzero.
[[nodiscard]] Json matrix_to_json(const ComplexMatrix& m);
[[nodiscard]] Json matrix_to_json(const HermitianMatrix& m);

[[nodiscard]] InstanceData instance_from_json(const Json& j);
[[nodiscard]] Json instance_to_json(const InstanceData& data);
[[nodiscard]] InstanceData read_instance(const std::filesystem::path& path);
[[nodiscard]] std::string write_instance(const InstanceData& data);

/// n is the order the delta must match.
[[nodiscard]] DeltaData delta_from_json(const Json& j, Index n);
[[nodiscard]] DeltaData read_delta(const std::filesystem::path& path, Index n);

/// A bare matrix object file, used for starting points and approximate solutions.
[[nodiscard]] ComplexMatrix read_matrix(const std::filesystem::path& path, Index n);

[[nodiscard]] Json to_json(const SolveReport& r);
[[nodiscard]] Json to_json(const GeneralSolveReport& r);
[[nodiscard]] Json to_json(const ScalarBounds& sb);
[[nodiscard]] Json to_json(const Condition& c);
[[nodiscard]] Json to_json(const BoundReport& r);
[[nodiscard]] Json to_json(const BackwardErrorReport& r);
[[nodiscard]] Json to_json(const ConditionReport& r);
[[nodiscard]] Json to_json(const OperatorBundle& b);

}  // namespace matfix::io
