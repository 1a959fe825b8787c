#pragma once

#include <stdexcept>

namespace lzbg {

/// Operation invoked on a workspace in the wrong state.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Array contents violate the structure an operation expects (broken chain, bad NSV, ...).
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed serialized stream.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lzbg
