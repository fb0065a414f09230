#pragma once

#include <stdexcept>
#include <string>

namespace sphaerica {

/// Coarse outcome classes; the CLI maps these to exit codes
/// (ok = 0, invalid_input = 2, no_solution = 3, degenerate = 4).
enum class Status { ok, invalid_input, no_solution, degenerate };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::invalid_input: return "invalid_input";
        case Status::no_solution: return "no_solution";
        case Status::degenerate: return "degenerate";
    }
    return "invalid_input";
}

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what)
        : std::runtime_error(what), status_(status) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what)
        : Error(Status::invalid_input, what) {}
};

struct InvalidTriangle : Error {
    explicit InvalidTriangle(const std::string& what)
        : Error(Status::invalid_input, what) {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what)
        : Error(Status::degenerate, what) {}
};

struct DegenerateConfiguration : Error {
    explicit DegenerateConfiguration(const std::string& what)
        : Error(Status::degenerate, what) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& what)
        : Error(Status::no_solution, what) {}
};

struct InfeasibleCone : Error {
    explicit InfeasibleCone(const std::string& what)
        : Error(Status::no_solution, what) {}
};

struct UnattainableArea : Error {
    explicit UnattainableArea(const std::string& what)
        : Error(Status::no_solution, what) {}
};

struct NoRealization : Error {
    explicit NoRealization(const std::string& what)
        : Error(Status::no_solution, what) {}
};

struct QuarterSphereViolation : Error {
    explicit QuarterSphereViolation(const std::string& what)
        : Error(Status::invalid_input, what) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& what)
        : Error(Status::invalid_input, what) {}
};

struct IdentityViolated : Error {
    explicit IdentityViolated(const std::string& what)
        : Error(Status::invalid_input, what) {}
};

struct IoFailure : Error {
    explicit IoFailure(const std::string& what)
        : Error(Status::invalid_input, what) {}
};

}  // namespace sphaerica
