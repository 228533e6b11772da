#pragma once

#include <stdexcept>
#include <string>

namespace solvquot {

// Syntax-level failure in a .sq document or an expression; positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A parsed document that does not describe a usable action (identity axiom,
// non-prime modulus, exponent discipline, ...).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A consequence of the coaction axioms failed during the computation: the
// input passed the syntactic validation but is not a genuine coaction.
class InvalidCoactionError : public SpecError {
public:
    using SpecError::SpecError;
};

// A slice was required but the relevant group factor acts trivially.
class TrivialActionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Safety cap on loop iterations tripped; the proofs guarantee termination for
// genuine coactions, so this signals invalid input that slipped validation.
class IterationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A ring-level invariant failed mid-computation.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace solvquot
