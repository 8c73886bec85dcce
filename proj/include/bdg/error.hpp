#pragma once

#include <stdexcept>
#include <string>

namespace bdg {

enum class errc {
    invalid_argument,    // bad parameter, malformed config
    io_error,            // missing/unreadable file, malformed raster or JSON
    unsupported_format,  // readable file but unsupported encoding (e.g. 16-bit)
    shape_mismatch,      // dimension disagreement between operands
    stage_violation,     // loss/schedule used outside its permitted stage
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "invalid_argument";
        case errc::io_error: return "io_error";
        case errc::unsupported_format: return "unsupported_format";
        case errc::shape_mismatch: return "shape_mismatch";
        case errc::stage_violation: return "stage_violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace bdg
