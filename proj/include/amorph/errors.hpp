#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace amorph {

// Root of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// exact arithmetic
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class IncompatibleTower : public Error {
public:
    using Error::Error;
};

class LevelAbsent : public Error {
public:
    using Error::Error;
};

class AmbiguousMatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    // 1-based line and column of a text document
    ParseError(const std::string& what, std::size_t position, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          position_(position), line_(line), column_(column) {}
    std::size_t position() const noexcept { return position_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t position_;
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

// Well-formed JSON whose structure does not match the expected document.
class FormatError : public Error {
public:
    using Error::Error;
};

// schemes
class InvalidColorMatrix : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class NonCommutative : public Error {
public:
    using Error::Error;
};

class FusionInvalid : public Error {
public:
    using Error::Error;
};

// spectral
class MultiplicityNotIntegral : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class EigenspaceCollision : public Error {
public:
    using Error::Error;
};

// An exact expression expected to be rational was not.
class NotRational : public Error {
public:
    using Error::Error;
};

// An exact-only operation was handed a numeric-mode eigenmatrix.
class ModeMismatch : public Error {
public:
    using Error::Error;
};

// srg / families / skew candidates
class NotStronglyRegular : public Error {
public:
    NotStronglyRegular(const std::string& what, int x, int y) : Error(what), x_(x), y_(y) {}
    int x() const noexcept { return x_; }
    int y() const noexcept { return y_; }

private:
    int x_;
    int y_;
};

class InfeasibleParameters : public Error {
public:
    using Error::Error;
};

class InconsistentSrg : public Error {
public:
    using Error::Error;
};

class IndexDoesNotDivide : public Error {
public:
    using Error::Error;
};

class NotOddPrime : public Error {
public:
    using Error::Error;
};

class UnsupportedField : public Error {
public:
    using Error::Error;
};

class NotLatin : public Error {
public:
    using Error::Error;
};

class OrderTooSmall : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace amorph

namespace amorph {

class AxiomIIViolation : public Error {
public:
    explicit AxiomIIViolation(int cls)
        : Error("axiom (ii) violated: transpose of class " + std::to_string(cls) + " is not a class"), cls_(cls) {}
    int cls() const noexcept { return cls_; }

private:
    int cls_;
};

// Two ordered pairs (x,y), (x2,y2) of class k see different counts of z with
// (x,z) in class i and (z,y) in class j.
struct AxiomIIIWitness {
    int i = 0, j = 0, k = 0;
    int x = 0, y = 0;
    int x2 = 0, y2 = 0;
    long long count = 0, count2 = 0;
};

class AxiomIIIViolation : public Error {
public:
    explicit AxiomIIIViolation(const AxiomIIIWitness& w)
        : Error("axiom (iii) violated: p^" + std::to_string(w.k) + "_{" + std::to_string(w.i) + "," +
                std::to_string(w.j) + "} is " + std::to_string(w.count) + " at (" + std::to_string(w.x) + "," +
                std::to_string(w.y) + ") but " + std::to_string(w.count2) + " at (" + std::to_string(w.x2) + "," +
                std::to_string(w.y2) + ")"),
          witness_(w) {}
    const AxiomIIIWitness& witness() const noexcept { return witness_; }

private:
    AxiomIIIWitness witness_;
};

}  // namespace amorph
