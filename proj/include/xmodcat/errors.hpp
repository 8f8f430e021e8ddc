#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace xmodcat {

// Base for all errors carrying a short machine-readable code ("NotAssociative",
// "SchemaError", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed input document (bad JSON, schema violation, out-of-range index).
// CLI exit code 2.
class ParseError : public Error {
public:
    ParseError(std::string code, std::string path, const std::string& message)
        : Error(std::move(code), message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Structurally valid input that fails a mathematical precondition
// (non-group table, non-bijective generator, mixed crossed modules, ...).
// CLI exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

// A self-check that can only fail on an implementation bug fired
// (orthogonality failure, non-integral fusion, ...). CLI exit code 3.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void internal_check(bool ok, const std::string& code, const std::string& message) {
    if (!ok) throw InternalError(code, message);
}

}  // namespace xmodcat
