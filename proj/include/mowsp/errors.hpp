#pragma once

#include <stdexcept>
#include <string>

namespace mowsp {

// Error categories shared by the C++ core and the C API status codes.
enum class Errc {
    invalid_argument,  // bad caller input (dimension mismatch, out-of-range id)
    logic,             // broken caller contract (stale handle, endpoint mismatch)
    state,             // operation invalid in current state (pop on empty heap)
    parse,             // malformed file content at a specific line
    format,            // structurally inconsistent file (header/body mismatch)
    resource,          // a guard limit was exceeded (oracle label cap)
    io,                // filesystem failure
    generation,        // instance generator produced an unusable graph
    verification,      // solution files disagree
    internal
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_argument: return "invalid_argument";
        case Errc::logic: return "logic";
        case Errc::state: return "state";
        case Errc::parse: return "parse";
        case Errc::format: return "format";
        case Errc::resource: return "resource";
        case Errc::io: return "io";
        case Errc::generation: return "generation";
        case Errc::verification: return "verification";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace mowsp
