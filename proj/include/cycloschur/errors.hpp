#pragma once

#include <stdexcept>
#include <string>

namespace cycloschur {

/* A computed result violated a structural invariant of the theory
 * (e.g. a coefficient appeared where the cell filtration forbids one).
 * The command-line front end maps this to its own exit code. */
struct MathInconsistency : std::runtime_error {
    explicit MathInconsistency(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cycloschur
