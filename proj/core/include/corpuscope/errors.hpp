#pragma once

#include <stdexcept>
#include <string>

namespace corpuscope {

// Invalid user-supplied configuration: bad thresholds, unknown format
// tokens, out-of-range parameters.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller violated an operation's precondition.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Filesystem or stream failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace corpuscope
