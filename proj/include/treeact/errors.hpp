#pragma once

#include <stdexcept>
#include <string>

namespace treeact {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& msg = "operands over different prime fields")
        : Error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& msg = "matrix determinant is not 1") : Error(msg) {}
};

struct ZeroParameter : Error {
    explicit ZeroParameter(const std::string& msg = "family parameter is zero") : Error(msg) {}
};

struct DegenerateXY : Error {
    explicit DegenerateXY(const std::string& msg = "X or Y vanishes for these parameters")
        : Error(msg) {}
};

struct PlaceMismatch : Error {
    explicit PlaceMismatch(const std::string& msg = "vertices live over different places")
        : Error(msg) {}
};

struct NotElliptic : Error {
    explicit NotElliptic(const std::string& msg = "element is not elliptic") : Error(msg) {}
};

struct NotAlternating : Error {
    explicit NotAlternating(const std::string& msg = "normal form is not alternating")
        : Error(msg) {}
};

struct TrivialWord : Error {
    explicit TrivialWord(const std::string& msg = "word is trivial in the surface group")
        : Error(msg) {}
};

struct FamilyMismatch : Error {
    explicit FamilyMismatch(const std::string& msg = "element and vertex from different families")
        : Error(msg) {}
};

struct UnsupportedPlace : Error {
    explicit UnsupportedPlace(const std::string& msg = "operation requires a degree-1 place")
        : Error(msg) {}
};

}  // namespace treeact
