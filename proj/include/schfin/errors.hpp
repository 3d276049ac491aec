#pragma once

#include <stdexcept>
#include <string>

namespace schfin {

// Error categories surfaced through the CLI exit-code contract:
// exit 0 = computed, 1 = property false, 2 = error/unverifiable.
enum class Errc {
    element_not_found,
    degenerate_localization,
    certificate_required,
    invalid_prime,
    affineness_unverifiable,
    construction,
    parse,
    divergence,
    diagram_invalid,
    corrupt_complex,
    io,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(Errc::parse, msg + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace schfin
