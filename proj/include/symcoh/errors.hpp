#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcoh {

// Malformed user input (bad flag values, illegal degrees, inconsistent algebras).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text in one of the input grammars; carries the 0-based offset.
class ParseError : public InputError {
public:
    ParseError(std::string text, std::size_t position, const std::string& what)
        : InputError("parse error at position " + std::to_string(position) + " in '" + text + "': " + what)
        , text_(std::move(text))
        , position_(position)
    {
    }

    const std::string& text() const { return text_; }
    std::size_t position() const { return position_; }

private:
    std::string text_;
    std::size_t position_;
};

// The candidate 2-form fails to be a symplectic structure.
class NotSymplecticError : public InputError {
public:
    enum class Reason { NotClosed, Degenerate, NotTwoForm };

    NotSymplecticError(Reason reason, const std::string& what)
        : InputError("not symplectic: " + what)
        , reason_(reason)
    {
    }

    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

// An internal consistency failure, e.g. a boundary space not contained in the cycles.
class ComplexError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace symcoh
