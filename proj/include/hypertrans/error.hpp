#ifndef HYPERTRANS_ERROR_HPP
#define HYPERTRANS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ht {

/// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error
{
    public:
        ParseError(const std::string & what, std::size_t line = 0) :
            std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
            _line(line)
        {
        }

        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
};

/// A value outside the domain of an operation, e.g. an unknown vertex label.
class DomainError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// An operation was called on input violating its precondition
/// (non-simple hypergraph passed to an enumerator, inconsistent groups, ...).
class PreconditionError : public std::logic_error
{
    public:
        using std::logic_error::logic_error;
};

} // namespace ht

#endif
