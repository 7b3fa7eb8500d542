#pragma once

#include <stdexcept>
#include <string>

namespace quiverdt {

// Bad arguments, unmet preconditions, malformed input files, budget overruns.
// The CLI maps these to exit code 2.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical identity that must hold came out false (route mismatch,
// parity violation, non-polynomial result, ...). The CLI maps these to exit
// code 1; in tests they always mean a bug.
struct math_error : std::logic_error {
    explicit math_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace quiverdt
