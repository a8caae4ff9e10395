#pragma once

#include <stdexcept>
#include <string>

namespace superq {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in F") {}
};

struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

struct SpecMismatch : std::invalid_argument {
    SpecMismatch() : std::invalid_argument("operands belong to different algebra specs") {}
};

struct ArityMismatch : std::invalid_argument {
    ArityMismatch() : std::invalid_argument("tensor operands have different arity or spec") {}
};

struct UnknownPair : std::logic_error {
    explicit UnknownPair(const std::string& what) : std::logic_error(what) {}
};

struct InvalidMu : std::invalid_argument {
    explicit InvalidMu(int mu) : std::invalid_argument("[mu][1+mu] = 0 for mu=" + std::to_string(mu)) {}
};

struct CapExceeded : std::invalid_argument {
    explicit CapExceeded(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace superq
