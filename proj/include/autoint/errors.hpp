#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace autoint {

/// Malformed input: bad indices, size mismatches, unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A mathematical property that should hold was observed to fail.
/// Carries the offending instance so it can be persisted.
class PropertyViolation : public std::runtime_error {
public:
    PropertyViolation(const std::string &what, nlohmann::json instance)
        : std::runtime_error(what), instance_(std::move(instance)) {}

    const nlohmann::json &instance() const { return instance_; }

private:
    nlohmann::json instance_;
};

/// A constructed word exceeded the length bound its construction promises.
class BoundViolation : public PropertyViolation {
public:
    using PropertyViolation::PropertyViolation;
};

}  // namespace autoint
