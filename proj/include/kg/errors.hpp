#ifndef KG_ERRORS_HPP
#define KG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameters, grids, or configuration files.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Non-finite field values (a diverging run, or bad input data).
class BlowupError : public Error {
public:
    explicit BlowupError(const std::string& msg) : Error(msg) {}
};

// File I/O problems: unreadable, unwritable, or malformed files.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace kg

#endif
