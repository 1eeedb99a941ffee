#pragma once

#include <stdexcept>
#include <string>

namespace structree {

// Error taxonomy shared by the library and the CLI exit codes.
enum class error_kind {
    input,           // bad user input: unknown letter, malformed file, invalid bounds
    data,            // inconsistent group data (rule table violates the group law)
    margin,          // an action or query left the window
    window_too_small,
    internal,        // invariant violation that indicates a bug or truncation artifact
};

class error : public std::runtime_error {
public:
    error(error_kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    error_kind kind() const { return kind_; }

private:
    error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& message) {
    throw error(kind, message);
}

} // namespace structree
