#pragma once

#include <stdexcept>
#include <string>

namespace cyl7 {

struct ParallelLines : std::runtime_error {
    explicit ParallelLines(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateDirection : std::runtime_error {
    explicit DegenerateDirection(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownVariable : std::runtime_error {
    explicit UnknownVariable(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SingularJacobian : std::runtime_error {
    explicit SingularJacobian(const std::string& what) : std::runtime_error(what) {}
};

struct NewtonDivergence : std::runtime_error {
    explicit NewtonDivergence(const std::string& what) : std::runtime_error(what) {}
};

struct SingularCell : std::runtime_error {
    explicit SingularCell(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateLifting : std::runtime_error {
    explicit DegenerateLifting(const std::string& what) : std::runtime_error(what) {}
};

struct PathCapExceeded : std::runtime_error {
    explicit PathCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cyl7
