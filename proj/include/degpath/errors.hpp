#pragma once

#include <stdexcept>
#include <string>

namespace degpath {

// Malformed input documents (edge lists, witness JSON, manifests).
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked outside its stated precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// A step that is impossible when preconditions hold failed anyway.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace degpath
