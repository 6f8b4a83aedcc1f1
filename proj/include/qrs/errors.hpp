#pragma once

#include <stdexcept>
#include <string>

namespace qrs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleAtPoint : Error {
    PoleAtPoint() : Error("denominator vanishes at evaluation point") {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& what) : Error("bad index: " + what) {}
};

struct IllegalLetter : Error {
    explicit IllegalLetter(const std::string& what) : Error("illegal letter: " + what) {}
};

struct IncompatibleParents : Error {
    IncompatibleParents() : Error("incompatible parent algebras") {}
};

struct HeightExceeded : Error {
    explicit HeightExceeded(const std::string& what) : Error("height exceeded: " + what) {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& what) : Error("depth exceeded: " + what) {}
};

struct WrongType : Error {
    explicit WrongType(const std::string& what) : Error("wrong cartan type: " + what) {}
};

struct SingularGram : Error {
    explicit SingularGram(const std::string& what) : Error("singular gram matrix: " + what) {}
};

struct SyntaxError : Error {
    size_t pos;
    SyntaxError(const std::string& what, size_t p)
        : Error(what + " at column " + std::to_string(p + 1)), pos(p) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

}  // namespace qrs
