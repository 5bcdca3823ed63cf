#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace speclab {

// Violated mathematical precondition or out-of-range request. `module` names
// the subsystem that raised it so the CLI can render one-line diagnostics.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

// Malformed descriptors, flags, and other caller-side input problems.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace speclab
