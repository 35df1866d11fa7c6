#pragma once

#include <stdexcept>
#include <string>

namespace rational {

// The longest-common-prefix fixpoint (or a cone-image fixpoint) exceeded its
// bound without stabilizing: the machine does not induce a homeomorphism.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The initial state carries a nonempty output residue; the induced map is not
// onto the whole space, so there is no onward form in this model.
class InitialResidueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text input (machine format or element expression) is malformed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line_(line), column_(column) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_ = -1;
    int column_ = -1;
};

// A structural invariant is violated: incomplete machine, bad prefix code,
// non-invertible element, failed disjointness check, and the like.
class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rational
