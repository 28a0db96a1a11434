#ifndef EGR_ERRORS_HPP
#define EGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace egr {

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& msg)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& msg) : std::runtime_error(msg) {}
};

struct OrderCapExceeded : std::runtime_error {
    explicit OrderCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct LatticeCapExceeded : std::runtime_error {
    explicit LatticeCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace egr

#endif
