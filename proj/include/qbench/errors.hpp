#pragma once

#include <stdexcept>
#include <string>

namespace qbench {

/// Raised when a circuit is wider than the configured simulator cap.
/// The CLI maps this to its own exit code.
struct SimCapExceeded : std::runtime_error {
    explicit SimCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbench
