#pragma once

#include <stdexcept>
#include <string>

namespace specgraph {

/// An exact solver or search was asked to exceed its size cap. Distinct from
/// a negative answer: the question was not decided.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& cap_name, long long cap, long long requested)
        : std::runtime_error(cap_name + ": cap " + std::to_string(cap) + " exceeded (got " +
                             std::to_string(requested) + ")"),
          cap_name_(cap_name),
          cap_(cap),
          requested_(requested) {}

    const std::string& cap_name() const { return cap_name_; }
    long long cap() const { return cap_; }
    long long requested() const { return requested_; }

private:
    std::string cap_name_;
    long long cap_;
    long long requested_;
};

}  // namespace specgraph
