#ifndef XELL_ERRORS_HPP
#define XELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xell {

// Invalid or out-of-range input (bad parameter set, malformed rational, ...).
class param_error : public std::invalid_argument {
public:
    explicit param_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A denominator in one of the closed-form coefficient formulas vanished.
// These loci are excluded from the generic parameter ranges; taking limits
// is out of scope, so we refuse instead.
class degenerate_parameter_error : public std::domain_error {
public:
    explicit degenerate_parameter_error(const std::string& msg)
        : std::domain_error(msg) {}
};

// An operation that must be exact (division by phi(x), by xi_ell, ...)
// left a remainder. Always indicates a bug, never a data problem.
class exactness_error : public std::logic_error {
public:
    explicit exactness_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace xell

#endif
