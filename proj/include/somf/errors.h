#pragma once

#include <stdexcept>
#include <string>

namespace somf {

// All failures are reported through typed exceptions so callers (and the CLI)
// can distinguish "you asked a malformed question" from "the numerics gave up".

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error("domain error: " + msg) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error("pole: " + msg) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error("no convergence: " + msg) {}
};

struct EvaluationOverflow : std::runtime_error {
    explicit EvaluationOverflow(const std::string& msg) : std::runtime_error("overflow: " + msg) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error("budget exceeded: " + msg) {}
};

struct EtaNotAdmissible : std::runtime_error {
    explicit EtaNotAdmissible(const std::string& msg) : std::runtime_error("eta not admissible: " + msg) {}
};

struct DegeneratePoint : std::runtime_error {
    explicit DegeneratePoint(const std::string& msg) : std::runtime_error("degenerate point: " + msg) {}
};

struct StencilFailure : std::runtime_error {
    explicit StencilFailure(const std::string& msg) : std::runtime_error("stencil failure: " + msg) {}
};

struct EquivarianceViolation : std::runtime_error {
    explicit EquivarianceViolation(const std::string& msg) : std::runtime_error("equivariance violation: " + msg) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error("dimension mismatch: " + msg) {}
};

struct PhaseUndefined : std::runtime_error {
    explicit PhaseUndefined(const std::string& msg) : std::runtime_error("phase undefined: " + msg) {}
};

struct NotConstant : std::runtime_error {
    explicit NotConstant(const std::string& msg) : std::runtime_error("ratio not constant: " + msg) {}
};

struct RationalizationFailed : std::runtime_error {
    explicit RationalizationFailed(const std::string& msg) : std::runtime_error("rationalization failed: " + msg) {}
};

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& msg) : std::runtime_error("unknown name: " + msg) {}
};

struct SingularBasis : std::runtime_error {
    explicit SingularBasis(const std::string& msg) : std::runtime_error("singular basis: " + msg) {}
};

} // namespace somf
