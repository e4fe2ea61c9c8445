#pragma once

#include <stdexcept>
#include <string>

namespace frakgeo {

/// Mathematically invalid argument (negative exponent, point left of a
/// terminal, gamma pole, off-grid evaluation point, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation or differentiation of a terminal-singular field at the
/// terminal itself.
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

/// The y-Hessian of a Lagrangian is degenerate on the evaluation lattice.
class RegularityError : public std::runtime_error {
public:
    explicit RegularityError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live on different charts, cobases or lattices.
class MismatchError : public std::invalid_argument {
public:
    explicit MismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid job configuration (CLI layer).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace frakgeo
