#ifndef MAXTORUS_ERROR_HPP
#define MAXTORUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maxtorus {

// Rejected user input: malformed documents, degenerate forms, components
// that are not fields, rank mismatches. The CLI maps these to exit code 4.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Seeing one of these is a bug.
class AuditError : public std::logic_error {
public:
    explicit AuditError(const std::string& what) : std::logic_error(what) {}
};

} // namespace maxtorus

#endif
