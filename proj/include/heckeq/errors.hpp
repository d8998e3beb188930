// Error taxonomy shared by the library and the CLI exit-code mapping.
#pragma once

#include <stdexcept>
#include <string>

namespace heckeq {

// domain: bad input data or an operation outside its mathematical domain.
// cap:    a configured resource bound was exceeded (retry with a larger cap).
// usage:  malformed invocation (CLI layer).
enum class Errc { domain, cap, usage };

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const { return code_; }

    const char* code_name() const {
        switch (code_) {
            case Errc::domain: return "domain";
            case Errc::cap:    return "cap";
            case Errc::usage:  return "usage";
        }
        return "unknown";
    }

private:
    Errc code_;
};

[[noreturn]] inline void fail_domain(const std::string& msg) { throw Error(Errc::domain, msg); }
[[noreturn]] inline void fail_cap(const std::string& msg)    { throw Error(Errc::cap, msg); }
[[noreturn]] inline void fail_usage(const std::string& msg)  { throw Error(Errc::usage, msg); }

} // namespace heckeq
